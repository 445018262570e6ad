#include "motivic/motive_scalar.hpp"

#include <stdexcept>
#include <utility>

namespace motivic {

namespace {

// Splits p = unit * rest, where rest has nonnegative exponents and no monomial factor.
std::pair<Monomial, Polynomial> split_unit(const Polynomial &p)
{
    Monomial unit = p.monomial_content();
    return {unit, p * unit.inverse()};
}

// a / g for a Laurent numerator and a polynomial divisor of its polynomial part.
Polynomial divide_laurent(const Polynomial &a, const Polynomial &g)
{
    if (g.is_constant()) {
        return a * Rational(1 / g.leading().coeff);
    }
    auto [unit, rest] = split_unit(a);
    return divide_exact(rest, g) * unit;
}

Polynomial polynomial_part(const Polynomial &p) { return split_unit(p).second; }

Rational rational_pow(const Rational &base, int exp)
{
    if (exp == 0) {
        return Rational(1);
    }
    if (sgn(base) == 0) {
        if (exp < 0) {
            throw std::domain_error("evaluation pole");
        }
        return Rational(0);
    }
    mpz_class num;
    mpz_class den;
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    Rational r = exp < 0 ? Rational(den, num) : Rational(num, den);
    r.canonicalize();
    return r;
}

} // namespace

MotiveScalar MotiveScalar::u(int exp) { return MotiveScalar(Polynomial::variable(u_var(), exp)); }

MotiveScalar MotiveScalar::lefschetz_half_power(int halves)
{
    // L^{1/2} = -u
    Polynomial p = Polynomial::variable(u_var(), halves);
    return MotiveScalar(halves % 2 == 0 ? p : -p);
}

MotiveScalar MotiveScalar::atom(std::string_view base, int weight)
{
    return MotiveScalar(Polynomial::variable(atom_var(base, weight)));
}

MotiveScalar MotiveScalar::normalize(const Polynomial &num, const Polynomial &den)
{
    if (den.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    MotiveScalar out;
    if (num.is_zero()) {
        return out;
    }
    auto [num_unit, n] = split_unit(num);
    auto [den_unit, d] = split_unit(den);
    if (!d.is_constant()) {
        Polynomial g = gcd(n, d);
        if (!g.is_constant()) {
            n = divide_exact(n, g);
            d = divide_exact(d, g);
        }
    }
    Rational scale = 1 / d.leading().coeff;
    out.num_ = n * (num_unit / den_unit) * scale;
    out.den_ = d * scale;
    return out;
}

Rational MotiveScalar::to_rational() const
{
    if (!is_rational()) {
        throw std::domain_error("scalar is not a rational constant");
    }
    return num_.constant_term() / den_.constant_term();
}

MotiveScalar MotiveScalar::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    auto [unit, rest] = split_unit(num_);
    Rational scale = 1 / rest.leading().coeff;
    MotiveScalar out;
    out.num_ = den_ * unit.inverse() * scale;
    out.den_ = rest * scale;
    return out;
}

MotiveScalar MotiveScalar::pow(int k) const
{
    if (k < 0) {
        return inverse().pow(-k);
    }
    MotiveScalar out;
    out.num_ = num_.pow(static_cast<unsigned>(k));
    out.den_ = den_.pow(static_cast<unsigned>(k));
    return out;
}

MotiveScalar MotiveScalar::operator-() const
{
    MotiveScalar out = *this;
    out.num_ = -out.num_;
    return out;
}

MotiveScalar &MotiveScalar::operator+=(const MotiveScalar &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_ == o.den_) {
        if (den_.is_constant()) {
            num_ += o.num_;
            return *this;
        }
        // shared denominator: only its factors can cancel
        return *this = normalize(num_ + o.num_, den_);
    }
    Polynomial g = gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = num_.is_zero() ? Polynomial(1) : den_ * o.den_;
        return *this;
    }
    Polynomial b1 = divide_exact(den_, g);
    Polynomial d1 = divide_exact(o.den_, g);
    Polynomial num = num_ * d1 + o.num_ * b1;
    if (num.is_zero()) {
        return *this = MotiveScalar();
    }
    Polynomial den = b1 * d1 * g;
    Polynomial g2 = gcd(polynomial_part(num), g);
    if (!g2.is_constant()) {
        num = divide_laurent(num, g2);
        den = divide_exact(den, g2);
    }
    num_ = std::move(num);
    den_ = std::move(den);
    return *this;
}

MotiveScalar &MotiveScalar::operator-=(const MotiveScalar &o) { return *this += -o; }

MotiveScalar &MotiveScalar::operator*=(const MotiveScalar &o)
{
    if (is_zero() || o.is_zero()) {
        return *this = MotiveScalar();
    }
    Polynomial a = num_;
    Polynomial b = den_;
    Polynomial c = o.num_;
    Polynomial d = o.den_;
    if (!d.is_constant()) {
        Polynomial g1 = gcd(polynomial_part(a), d);
        if (!g1.is_constant()) {
            a = divide_laurent(a, g1);
            d = divide_exact(d, g1);
        }
    }
    if (!b.is_constant()) {
        Polynomial g2 = gcd(polynomial_part(c), b);
        if (!g2.is_constant()) {
            c = divide_laurent(c, g2);
            b = divide_exact(b, g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    return *this;
}

MotiveScalar &MotiveScalar::operator/=(const MotiveScalar &o) { return *this *= o.inverse(); }

void ScalarSum::add(const Polynomial &num, const Polynomial &den)
{
    if (num.is_zero()) {
        return;
    }
    if (den == den_) {
        num_ += num;
        return;
    }
    Polynomial g = gcd(den_, den);
    if (g.is_constant()) {
        num_ = num_ * den + num * den_;
        den_ *= den;
        return;
    }
    Polynomial d1 = divide_exact(den, g);
    num_ = num_ * d1 + num * divide_exact(den_, g);
    den_ *= d1;
}

ScalarSum &ScalarSum::operator+=(const MotiveScalar &a)
{
    add(a.numerator(), a.denominator());
    return *this;
}

ScalarSum &ScalarSum::operator-=(const MotiveScalar &a)
{
    add(-a.numerator(), a.denominator());
    return *this;
}

void ScalarSum::add_product(const MotiveScalar &a, const MotiveScalar &b, const Rational &c)
{
    if (a.is_zero() || b.is_zero() || sgn(c) == 0) {
        return;
    }
    add(a.numerator() * b.numerator() * c, a.denominator() * b.denominator());
}

MotiveScalar ScalarSum::result() const { return MotiveScalar::normalize(num_, den_); }

Polynomial adams(int k, const Polynomial &p)
{
    if (k <= 0) {
        throw std::invalid_argument("Adams operation requires k >= 1");
    }
    if (k == 1) {
        return p;
    }
    return p.map_monomials([k](const Monomial &m) {
        std::vector<VarPower> out;
        out.reserve(m.factors().size());
        for (const auto &f : m.factors()) {
            switch (f.var->kind) {
            case SymbolKind::U:
                out.push_back({f.var, f.exp * k});
                break;
            case SymbolKind::Atom:
                out.push_back({atom_var(f.var->base, f.var->weight * k), f.exp});
                break;
            case SymbolKind::Chi:
                out.push_back(f);
                break;
            }
        }
        return Monomial::from_factors(std::move(out));
    });
}

MotiveScalar adams(int k, const MotiveScalar &a)
{
    if (k <= 0) {
        throw std::invalid_argument("Adams operation requires k >= 1");
    }
    if (k == 1) {
        return a;
    }
    return MotiveScalar::normalize(adams(k, a.numerator()), adams(k, a.denominator()));
}

EulerConfig EulerConfig::numeric(std::string base, const Rational &chi)
{
    EulerConfig cfg;
    cfg.assignments.emplace(std::move(base), chi);
    return cfg;
}

EulerConfig EulerConfig::symbolic(std::string base)
{
    EulerConfig cfg;
    cfg.assignments.emplace(std::move(base), std::nullopt);
    return cfg;
}

EulerConfig &EulerConfig::set(std::string base, std::optional<Rational> chi)
{
    assignments[std::move(base)] = std::move(chi);
    return *this;
}

namespace {

// Replaces atoms by their Euler values; u and chi symbols pass through.
Polynomial specialize_atoms(const Polynomial &p, const EulerConfig &cfg)
{
    std::vector<Polynomial::Term> out;
    out.reserve(p.size());
    for (const auto &t : p.terms()) {
        Rational c = t.coeff;
        std::vector<VarPower> kept;
        for (const auto &f : t.mono.factors()) {
            if (f.var->kind != SymbolKind::Atom) {
                kept.push_back(f);
                continue;
            }
            auto it = cfg.assignments.find(f.var->base);
            if (it == cfg.assignments.end()) {
                throw std::invalid_argument("no Euler characteristic assigned to '" + f.var->base + "'");
            }
            if (it->second) {
                if (sgn(*it->second) == 0 && f.exp < 0) {
                    throw std::domain_error("pole at Euler point");
                }
                c *= rational_pow(*it->second, f.exp);
            } else {
                kept.push_back({chi_var(f.var->base), f.exp});
            }
        }
        out.push_back({Monomial::from_factors(std::move(kept)), std::move(c)});
    }
    return Polynomial::from_terms(std::move(out));
}

struct EpsilonLead {
    int valuation;
    Polynomial coeff;
};

// Leading term of p(1 + eps) as a series in eps, after clearing negative u-powers
// (a unit at u = 1, so neither valuation nor leading coefficient changes).
EpsilonLead expand_at_one(const Polynomial &p)
{
    Var u = u_var();
    Polynomial shifted = p * Monomial::power(u, -p.min_degree(u));
    std::vector<Polynomial> by_degree = shifted.coefficients_in(u);
    for (std::size_t j = 0; j < by_degree.size(); ++j) {
        Polynomial t;
        for (std::size_t e = j; e < by_degree.size(); ++e) {
            if (by_degree[e].is_zero()) {
                continue;
            }
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), e, j);
            t += by_degree[e] * Rational(binom);
        }
        if (!t.is_zero()) {
            return {static_cast<int>(j), std::move(t)};
        }
    }
    return {-1, Polynomial()};
}

} // namespace

MotiveScalar euler_specialize(const MotiveScalar &a, const EulerConfig &cfg)
{
    Polynomial num = specialize_atoms(a.numerator(), cfg);
    Polynomial den = specialize_atoms(a.denominator(), cfg);
    if (den.is_zero()) {
        throw std::domain_error("pole at Euler point");
    }
    if (num.is_zero()) {
        return MotiveScalar();
    }
    EpsilonLead n = expand_at_one(num);
    EpsilonLead d = expand_at_one(den);
    if (n.valuation > d.valuation) {
        return MotiveScalar();
    }
    if (n.valuation < d.valuation) {
        throw std::domain_error("pole at Euler point");
    }
    return MotiveScalar::normalize(n.coeff, d.coeff);
}

EvaluationPoint make_point() { return EvaluationPoint(&var_less); }

Rational eval_at(const Polynomial &p, const EvaluationPoint &point)
{
    Rational total(0);
    for (const auto &t : p.terms()) {
        Rational term = t.coeff;
        for (const auto &f : t.mono.factors()) {
            auto it = point.find(f.var);
            if (it == point.end()) {
                throw std::invalid_argument("no value assigned to symbol " + f.var->name());
            }
            term *= rational_pow(it->second, f.exp);
        }
        total += term;
    }
    return total;
}

Rational eval_at(const MotiveScalar &a, const EvaluationPoint &point)
{
    Rational den = eval_at(a.denominator(), point);
    if (sgn(den) == 0) {
        throw std::domain_error("evaluation pole");
    }
    return eval_at(a.numerator(), point) / den;
}

} // namespace motivic
