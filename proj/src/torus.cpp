#include "motivic/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace motivic {

GradedClass GradedClass::gamma0(int n, std::size_t curve_rank)
{
    GradedClass v{-n, std::vector<int>(curve_rank, 0), 0};
    v.validate();
    return v;
}

GradedClass GradedClass::gamma1(int a, std::vector<int> beta)
{
    GradedClass v{a, std::move(beta), 1};
    v.validate();
    return v;
}

void GradedClass::validate() const
{
    if (rank == 0) {
        if (std::any_of(beta.begin(), beta.end(), [](int b) { return b != 0; }) || a > 0) {
            throw std::invalid_argument("rank 0 classes must have the form (-n, 0, 0) with n >= 0: " +
                                        to_string(*this));
        }
    } else if (rank == 1) {
        if (std::any_of(beta.begin(), beta.end(), [](int b) { return b < 0; })) {
            throw std::invalid_argument("curve class must be effective: " + to_string(*this));
        }
    } else {
        throw std::invalid_argument("class rank must be 0 or 1: " + to_string(*this));
    }
}

GradedClass operator+(const GradedClass &v, const GradedClass &w)
{
    if (v.beta.size() != w.beta.size()) {
        throw std::invalid_argument("curve-class dimension mismatch");
    }
    if (v.rank + w.rank > 1) {
        throw std::domain_error("product leaves Γ⁰∪Γ¹: " + to_string(v) + " + " + to_string(w));
    }
    GradedClass s{v.a + w.a, v.beta, v.rank + w.rank};
    for (std::size_t i = 0; i < s.beta.size(); ++i) {
        s.beta[i] += w.beta[i];
    }
    return s;
}

std::string to_string(const GradedClass &v)
{
    std::string out = "(" + std::to_string(v.a) + ", [";
    for (std::size_t i = 0; i < v.beta.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v.beta[i]);
    }
    return out + "], " + std::to_string(v.rank) + ")";
}

bool Window::contains(const GradedClass &v) const noexcept
{
    if (v.beta.size() != beta_max.size()) {
        return false;
    }
    if (v.rank == 0) {
        return v.a <= 0 && -v.a <= depth() && std::all_of(v.beta.begin(), v.beta.end(), [](int b) { return b == 0; });
    }
    if (v.rank != 1 || v.a < a_min || v.a > a_max) {
        return false;
    }
    for (std::size_t i = 0; i < beta_max.size(); ++i) {
        if (v.beta[i] < 0 || v.beta[i] > beta_max[i]) {
            return false;
        }
    }
    return true;
}

void Window::validate() const
{
    if (a_min > a_max) {
        throw std::invalid_argument("window needs a_min <= a_max");
    }
    if (std::any_of(beta_max.begin(), beta_max.end(), [](int b) { return b < 0; })) {
        throw std::invalid_argument("window needs beta_max >= 0");
    }
    if (depth() < 0) {
        throw std::invalid_argument("window needs gamma0_depth >= 0");
    }
}

std::vector<GradedClass> Window::classes() const
{
    std::vector<GradedClass> out;
    for (int n = depth(); n >= 0; --n) {
        out.push_back({-n, std::vector<int>(beta_max.size(), 0), 0});
    }
    std::vector<int> beta(beta_max.size(), 0);
    while (true) {
        for (int a = a_min; a <= a_max; ++a) {
            out.push_back({a, beta, 1});
        }
        std::size_t i = beta.size();
        while (i > 0 && beta[i - 1] == beta_max[i - 1]) {
            beta[i - 1] = 0;
            --i;
        }
        if (i == 0) {
            break;
        }
        ++beta[i - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

PairingForm PairingForm::standard() { return PairingForm{}; }

PairingForm PairingForm::trivial()
{
    PairingForm p;
    p.mode_ = Mode::Trivial;
    return p;
}

PairingForm PairingForm::from_matrix(Matrix m)
{
    const std::size_t dim = m.size();
    if (dim < 2) {
        throw std::invalid_argument("pairing matrix must be (r+2)x(r+2) with r >= 0");
    }
    for (const auto &row : m) {
        if (row.size() != dim) {
            throw std::invalid_argument("pairing matrix must be square");
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (m[i][j] != -m[j][i]) {
                throw std::invalid_argument("pairing matrix is not antisymmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
        }
    }
    // chi((-n,0,0), v) = -n * sum_j M[0][j] v_j must equal n for all rank 1 v:
    // M[0][a] = M[0][beta_i] = 0 and M[0][rank] = -1.
    for (std::size_t j = 0; j + 1 < dim; ++j) {
        if (m[0][j] != 0) {
            throw std::invalid_argument("pairing violates chi((-n,0,0), v) = n: entry (0," + std::to_string(j) +
                                        ") must be 0");
        }
    }
    if (m[0][dim - 1] != -1) {
        throw std::invalid_argument("pairing violates chi((-n,0,0), v) = n: entry (0,rank) must be -1");
    }
    PairingForm p;
    p.mode_ = Mode::Matrix;
    p.matrix_ = std::move(m);
    return p;
}

long PairingForm::operator()(const GradedClass &v, const GradedClass &w) const
{
    switch (mode_) {
    case Mode::Trivial:
        return 0;
    case Mode::Standard:
        return static_cast<long>(v.rank) * w.a - static_cast<long>(w.rank) * v.a;
    case Mode::Matrix:
        break;
    }
    const std::size_t dim = matrix_.size();
    if (v.beta.size() + 2 != dim || w.beta.size() + 2 != dim) {
        throw std::invalid_argument("pairing matrix dimension does not match the curve rank");
    }
    auto coord = [](const GradedClass &x, std::size_t i) -> long {
        if (i == 0) {
            return x.a;
        }
        if (i <= x.beta.size()) {
            return x.beta[i - 1];
        }
        return x.rank;
    };
    long total = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        long vi = coord(v, i);
        if (vi == 0) {
            continue;
        }
        for (std::size_t j = 0; j < dim; ++j) {
            total += vi * matrix_[i][j] * coord(w, j);
        }
    }
    return total;
}

TorusElement::TorusElement(Window window) : window_(std::move(window)) { window_.validate(); }

TorusElement TorusElement::monomial(Window window, const GradedClass &v, MotiveScalar coeff)
{
    TorusElement x(std::move(window));
    x.add_term(v, coeff);
    return x;
}

TorusElement TorusElement::one(Window window)
{
    GradedClass zero{0, std::vector<int>(window.curve_rank(), 0), 0};
    return monomial(std::move(window), zero);
}

bool TorusElement::supported_in_gamma0() const noexcept
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.rank == 0; });
}

void TorusElement::add_term(const GradedClass &v, const MotiveScalar &c)
{
    v.validate();
    if (!window_.contains(v)) {
        throw std::out_of_range("outside truncation window: " + to_string(v));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MotiveScalar TorusElement::extract(const GradedClass &v) const
{
    if (!window_.contains(v)) {
        throw std::out_of_range("outside truncation window: " + to_string(v));
    }
    auto it = terms_.find(v);
    return it == terms_.end() ? MotiveScalar() : it->second;
}

namespace {

void require_same_window(const TorusElement &x, const TorusElement &y)
{
    if (!(x.window() == y.window())) {
        throw std::invalid_argument("window mismatch");
    }
}

} // namespace

TorusElement TorusElement::operator-() const
{
    TorusElement out = *this;
    for (auto &[v, c] : out.terms_) {
        c = -c;
    }
    return out;
}

TorusElement &TorusElement::operator+=(const TorusElement &o)
{
    require_same_window(*this, o);
    for (const auto &[v, c] : o.terms_) {
        add_term(v, c);
    }
    truncated_ = truncated_ || o.truncated_;
    return *this;
}

TorusElement &TorusElement::operator-=(const TorusElement &o) { return *this += -o; }

TorusElement &TorusElement::operator*=(const MotiveScalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[v, x] : terms_) {
        x *= c;
    }
    return *this;
}

TorusElement twisted_product(const TorusElement &x, const TorusElement &y, const PairingForm &form)
{
    require_same_window(x, y);
    TorusElement out(x.window_);
    out.truncated_ = x.truncated_ || y.truncated_;
    for (const auto &[v, c] : x.terms_) {
        for (const auto &[w, d] : y.terms_) {
            GradedClass s = v + w;
            if (!out.window_.contains(s)) {
                out.truncated_ = true;
                continue;
            }
            long chi = form(v, w);
            MotiveScalar coeff = c * d;
            if (chi != 0) {
                coeff *= MotiveScalar::lefschetz_half_power(static_cast<int>(chi));
            }
            out.add_term(s, coeff);
        }
    }
    return out;
}

TorusElement star_mul(const TorusElement &x, const TorusElement &y, const PairingForm &form)
{
    return twisted_product(x, y, form);
}

TorusElement untwisted_mul(const TorusElement &x, const TorusElement &y)
{
    return twisted_product(x, y, PairingForm::trivial());
}

TorusElement bracket(const TorusElement &e, const TorusElement &x, const PairingForm &form)
{
    return star_mul(e, x, form) - star_mul(x, e, form);
}

TorusElement exp_adjoint(const TorusElement &e, const TorusElement &x, const PairingForm &form)
{
    require_same_window(e, x);
    for (const auto &[v, c] : e.terms()) {
        if (v.rank != 0 || v.a >= 0) {
            throw std::domain_error("non-nilpotent adjoint at truncation: class " + to_string(v));
        }
    }
    TorusElement result = x;
    TorusElement term = x;
    const Window &w = x.window();
    // every bracket lowers a by at least one, so the series stops within the window
    const int max_steps = std::max(w.a_max - w.a_min, w.depth()) + 1;
    for (int k = 1; k <= max_steps; ++k) {
        term = bracket(e, term, form) * MotiveScalar(Rational(1, k));
        if (term.is_zero()) {
            break;
        }
        result += term;
    }
    return result;
}

QSeries gamma0_to_series(const TorusElement &x)
{
    if (!x.supported_in_gamma0()) {
        throw std::domain_error("exp/log domain: element is not supported in Γ⁰");
    }
    QSeries f(static_cast<std::size_t>(x.window().depth()));
    for (const auto &[v, c] : x.terms()) {
        f.set(static_cast<std::size_t>(-v.a), c);
    }
    return f;
}

TorusElement series_to_gamma0(const QSeries &f, const Window &window)
{
    TorusElement out(window);
    for (std::size_t n = 0; n <= f.order(); ++n) {
        GradedClass v = GradedClass::gamma0(static_cast<int>(n), window.curve_rank());
        if (window.contains(v)) {
            out.add_term(v, f[n]);
        }
    }
    return out;
}

TorusElement exp_gamma0(const TorusElement &e) { return series_to_gamma0(series_exp(gamma0_to_series(e)), e.window()); }

TorusElement log_gamma0(const TorusElement &x) { return series_to_gamma0(series_log(gamma0_to_series(x)), x.window()); }

} // namespace motivic
