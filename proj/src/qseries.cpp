#include "motivic/qseries.hpp"

#include "motivic/text.hpp"

#include <stdexcept>

namespace motivic {

namespace {

Rational ratio(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

} // namespace

QSeries::QSeries(std::size_t order) : coeffs_(order + 1) {}

QSeries::QSeries(std::vector<MotiveScalar> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("a series needs at least the constant coefficient");
    }
}

QSeries QSeries::one(std::size_t order)
{
    QSeries s(order);
    s.coeffs_[0] = MotiveScalar(1);
    return s;
}

QSeries QSeries::monomial(std::size_t order, std::size_t degree, MotiveScalar coeff)
{
    QSeries s(order);
    if (degree <= order) {
        s.coeffs_[degree] = std::move(coeff);
    }
    return s;
}

bool QSeries::is_zero() const noexcept
{
    for (const auto &c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

QSeries QSeries::truncate(std::size_t new_order) const
{
    if (new_order > order()) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    return QSeries(std::vector<MotiveScalar>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(new_order) + 1));
}

QSeries QSeries::negate_variable() const
{
    QSeries out = *this;
    for (std::size_t n = 1; n < out.coeffs_.size(); n += 2) {
        out.coeffs_[n] = -out.coeffs_[n];
    }
    return out;
}

QSeries QSeries::map(const std::function<MotiveScalar(const MotiveScalar &)> &f) const
{
    QSeries out = *this;
    for (auto &c : out.coeffs_) {
        c = f(c);
    }
    return out;
}

QSeries QSeries::operator-() const
{
    return map([](const MotiveScalar &c) { return -c; });
}

namespace {

void require_same_order(const QSeries &a, const QSeries &b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("order mismatch: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
    }
}

} // namespace

QSeries &QSeries::operator+=(const QSeries &o)
{
    require_same_order(*this, o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += o.coeffs_[n];
    }
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    require_same_order(*this, o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= o.coeffs_[n];
    }
    return *this;
}

QSeries &QSeries::operator*=(const MotiveScalar &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    require_same_order(a, b);
    const std::size_t order = a.order();
    QSeries out(order);
    for (std::size_t n = 0; n <= order; ++n) {
        ScalarSum acc;
        for (std::size_t i = 0; i <= n; ++i) {
            acc.add_product(a.coeffs_[i], b.coeffs_[n - i]);
        }
        out.coeffs_[n] = acc.result();
    }
    return out;
}

QSeries series_exp(const QSeries &f)
{
    if (!f[0].is_zero()) {
        throw std::domain_error("exp/log domain: exp needs a zero constant term");
    }
    const std::size_t order = f.order();
    QSeries g = QSeries::one(order);
    // n g_n = sum_{k=1..n} k f_k g_{n-k}
    for (std::size_t n = 1; n <= order; ++n) {
        ScalarSum acc;
        for (std::size_t k = 1; k <= n; ++k) {
            acc.add_product(f[k], g[n - k], ratio(static_cast<long>(k), static_cast<long>(n)));
        }
        g.set(n, acc.result());
    }
    return g;
}

QSeries series_log(const QSeries &f)
{
    if (!f[0].is_one()) {
        throw std::domain_error("exp/log domain: log needs constant term 1");
    }
    const std::size_t order = f.order();
    QSeries h(order);
    // n h_n = n f_n - sum_{k=1..n-1} k h_k f_{n-k}
    for (std::size_t n = 1; n <= order; ++n) {
        ScalarSum acc;
        acc += f[n];
        for (std::size_t k = 1; k < n; ++k) {
            acc.add_product(h[k], f[n - k], ratio(-static_cast<long>(k), static_cast<long>(n)));
        }
        h.set(n, acc.result());
    }
    return h;
}

QSeries expand_rational(std::span<const MotiveScalar> num, std::span<const MotiveScalar> den, std::size_t order)
{
    if (den.empty() || den[0].is_zero()) {
        throw std::domain_error("non-unit denominator");
    }
    const MotiveScalar inv0 = den[0].inverse();
    QSeries h(order);
    for (std::size_t n = 0; n <= order; ++n) {
        MotiveScalar acc = n < num.size() ? num[n] : MotiveScalar();
        for (std::size_t k = 1; k <= n && k < den.size(); ++k) {
            if (!den[k].is_zero() && !h[n - k].is_zero()) {
                acc -= den[k] * h[n - k];
            }
        }
        h.set(n, acc * inv0);
    }
    return h;
}

namespace {

void require_zero_constant(const QSeries &f, const char *what)
{
    if (!f[0].is_zero()) {
        throw std::domain_error(std::string("exp/log domain: ") + what + " needs a zero constant term");
    }
}

} // namespace

QSeries exp_coeff_bridge(const QSeries &b)
{
    require_zero_constant(b, "the Adams bridge");
    const std::size_t order = b.order();
    QSeries a(order);
    for (std::size_t n = 1; n <= order; ++n) {
        MotiveScalar acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (n % k == 0 && !b[n / k].is_zero()) {
                acc += adams(static_cast<int>(k), b[n / k]) * MotiveScalar(Rational(1, static_cast<long>(k)));
            }
        }
        a.set(n, acc);
    }
    return a;
}

QSeries bridge_inverse(const QSeries &a)
{
    require_zero_constant(a, "the Adams bridge");
    const std::size_t order = a.order();
    QSeries b(order);
    // b_n = a_n - sum_{k | n, k > 1} (1/k) psi^k(b_{n/k})
    for (std::size_t n = 1; n <= order; ++n) {
        MotiveScalar acc = a[n];
        for (std::size_t k = 2; k <= n; ++k) {
            if (n % k == 0 && !b[n / k].is_zero()) {
                acc -= adams(static_cast<int>(k), b[n / k]) * MotiveScalar(Rational(1, static_cast<long>(k)));
            }
        }
        b.set(n, acc);
    }
    return b;
}

QSeries plethystic_exp(const QSeries &f)
{
    require_zero_constant(f, "Exp");
    return series_exp(exp_coeff_bridge(f));
}

QSeries plethystic_log(const QSeries &f)
{
    if (!f[0].is_one()) {
        throw std::domain_error("exp/log domain: Log needs constant term 1");
    }
    return bridge_inverse(series_log(f));
}

QSeries euler_specialize(const QSeries &f, const EulerConfig &cfg)
{
    return f.map([&cfg](const MotiveScalar &c) { return euler_specialize(c, cfg); });
}

std::string to_string(const QSeries &f)
{
    std::string out;
    for (std::size_t n = 0; n <= f.order(); ++n) {
        if (f[n].is_zero()) {
            continue;
        }
        out += "(" + to_string(f[n]) + ") q^" + std::to_string(n) + " + ";
    }
    return out + "O(q^" + std::to_string(f.order() + 1) + ")";
}

} // namespace motivic
