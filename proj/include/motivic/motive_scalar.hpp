#pragma once

#include "motivic/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace motivic {

/// An element of the coefficient field: a reduced fraction of Laurent
/// polynomials over Q in u = -L^{1/2} and Adams atoms.
///
/// Canonical form: the denominator is a polynomial with no monomial factor
/// and leading coefficient +1, coprime to the numerator. Monomial units
/// (including negative powers) live in the numerator. Two scalars are equal
/// iff their canonical forms coincide.
class MotiveScalar {
public:
    MotiveScalar() : den_(1) {}
    MotiveScalar(const Rational &c) : num_(c), den_(1) {}
    MotiveScalar(long c) : MotiveScalar(Rational(c)) {}
    MotiveScalar(int c) : MotiveScalar(Rational(c)) {}
    MotiveScalar(Polynomial p) : num_(std::move(p)), den_(1) {}

    /// u^exp.
    static MotiveScalar u(int exp = 1);
    /// L^{halves/2} = (-u)^halves.
    static MotiveScalar lefschetz_half_power(int halves);
    /// psi^weight([base]).
    static MotiveScalar atom(std::string_view base, int weight = 1);
    /// Canonicalizes num/den. Throws std::domain_error("division by zero polynomial").
    static MotiveScalar normalize(const Polynomial &num, const Polynomial &den);

    const Polynomial &numerator() const noexcept { return num_; }
    const Polynomial &denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return den_.is_constant() && num_ == Polynomial(1); }
    bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Throws std::domain_error if the value is not a rational constant.
    Rational to_rational() const;
    /// True when the denominator is 1.
    bool is_laurent_polynomial() const noexcept { return den_.is_constant(); }

    /// Throws std::domain_error on zero.
    MotiveScalar inverse() const;
    MotiveScalar pow(int k) const;

    MotiveScalar operator-() const;
    MotiveScalar &operator+=(const MotiveScalar &o);
    MotiveScalar &operator-=(const MotiveScalar &o);
    MotiveScalar &operator*=(const MotiveScalar &o);
    MotiveScalar &operator/=(const MotiveScalar &o);

    friend MotiveScalar operator+(MotiveScalar a, const MotiveScalar &b) { return a += b; }
    friend MotiveScalar operator-(MotiveScalar a, const MotiveScalar &b) { return a -= b; }
    friend MotiveScalar operator*(MotiveScalar a, const MotiveScalar &b) { return a *= b; }
    friend MotiveScalar operator/(MotiveScalar a, const MotiveScalar &b) { return a /= b; }
    friend bool operator==(const MotiveScalar &, const MotiveScalar &) = default;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Accumulates a sum over a running common denominator and reduces once,
/// in result(). Cheaper than repeated += when many terms are summed.
class ScalarSum {
public:
    ScalarSum &operator+=(const MotiveScalar &a);
    ScalarSum &operator-=(const MotiveScalar &a);
    /// Adds c * a * b without reducing the product.
    void add_product(const MotiveScalar &a, const MotiveScalar &b, const Rational &c = Rational(1));
    MotiveScalar result() const;

private:
    void add(const Polynomial &num, const Polynomial &den);

    Polynomial num_;
    Polynomial den_ = Polynomial(1);
};

/// The Adams operation psi^k: u -> u^k, (base, j) -> (base, j*k), extended
/// to fractions. Throws std::invalid_argument for k <= 0.
MotiveScalar adams(int k, const MotiveScalar &a);
Polynomial adams(int k, const Polynomial &p);

/// Euler characteristic assignments per generator. A missing value
/// (std::nullopt) marks the generator symbolic: it specializes to chi(base).
struct EulerConfig {
    std::map<std::string, std::optional<Rational>, std::less<>> assignments;

    static EulerConfig numeric(std::string base, const Rational &chi);
    static EulerConfig symbolic(std::string base);
    EulerConfig &set(std::string base, std::optional<Rational> chi);
};

/// Limit u -> 1 with every atom (base, k) replaced by chi(base).
///
/// The result is a rational number, or a rational function in the chi(base)
/// symbols when some generator is symbolic. Throws std::domain_error
/// ("pole at Euler point") when the denominator vanishes to higher order,
/// and std::invalid_argument when a generator has no assignment.
MotiveScalar euler_specialize(const MotiveScalar &a, const EulerConfig &cfg);

using EvaluationPoint = std::map<Var, Rational, decltype(&var_less)>;
EvaluationPoint make_point();

/// Exact evaluation. Throws std::domain_error("evaluation pole") when the
/// denominator vanishes and std::invalid_argument for unassigned symbols.
Rational eval_at(const MotiveScalar &a, const EvaluationPoint &point);
Rational eval_at(const Polynomial &p, const EvaluationPoint &point);

} // namespace motivic
