#pragma once

#include "motivic/symbol.hpp"

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <compare>
#include <functional>
#include <span>
#include <vector>

namespace motivic {

using Rational = mpq_class;

struct VarPower {
    Var var;
    int exp;

    friend bool operator==(const VarPower &, const VarPower &) = default;
};

/// A Laurent monomial: a product of symbols raised to nonzero integer powers.
/// Factors are kept sorted in the canonical symbol order.
class Monomial {
public:
    Monomial() = default;

    static Monomial power(Var v, int exp);

    /// Builds from arbitrary factors; merges duplicates and drops zero exponents.
    static Monomial from_factors(std::vector<VarPower> factors);

    std::span<const VarPower> factors() const noexcept { return {factors_.data(), factors_.size()}; }
    int exponent(Var v) const noexcept;
    bool is_one() const noexcept { return factors_.empty(); }
    bool is_polynomial() const noexcept;
    int total_degree() const noexcept;

    Monomial inverse() const;
    Monomial pow(int k) const;

    /// Componentwise minimum of exponents (absent symbols count as exponent 0).
    static Monomial componentwise_min(const Monomial &a, const Monomial &b);

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend Monomial operator/(const Monomial &a, const Monomial &b) { return a * b.inverse(); }
    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    // a few factors inline, so typical monomials need no heap allocation
    boost::container::small_vector<VarPower, 4> factors_;
};

/// Lexicographic monomial order with symbols ranked by `compare_vars`.
std::strong_ordering compare(const Monomial &a, const Monomial &b) noexcept;

struct MonomialLess {
    bool operator()(const Monomial &a, const Monomial &b) const noexcept { return compare(a, b) < 0; }
};

/// Sparse multivariate Laurent polynomial over Q.
///
/// Terms are stored in strictly decreasing monomial order with nonzero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coeff;

        friend bool operator==(const Term &, const Term &) = default;
    };

    Polynomial() = default;
    Polynomial(const Rational &c);
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial variable(Var v, int exp = 1);
    static Polynomial term(const Monomial &m, const Rational &c);
    /// Sorts and combines arbitrary terms.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    /// Constant term value; zero when absent.
    Rational constant_term() const;
    const Term &leading() const { return terms_.front(); }

    /// True when no term has a negative exponent.
    bool is_polynomial() const noexcept;

    /// Symbols in canonical order.
    std::vector<Var> variables() const;
    bool contains(Var v) const noexcept;
    int max_degree(Var v) const noexcept;
    int min_degree(Var v) const noexcept;

    /// Largest monomial dividing every term (exponents may be negative).
    Monomial monomial_content() const;

    /// Coefficients as a polynomial in `x`, indexed by degree. Requires min_degree(x) >= 0.
    std::vector<Polynomial> coefficients_in(Var x) const;
    static Polynomial from_coefficients(Var x, std::span<const Polynomial> coeffs);

    /// Applies `f` to every monomial. `f` must be injective on monomials for the
    /// result to stay well defined term-by-term; terms are re-sorted.
    Polynomial map_monomials(const std::function<Monomial(const Monomial &)> &f) const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator+=(Polynomial &&o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Polynomial &o);
    Polynomial &operator*=(const Rational &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator+(Polynomial a, Polynomial &&b) { return a += std::move(b); }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
    friend Polynomial operator*(const Polynomial &a, const Monomial &m);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    Polynomial pow(unsigned k) const;

private:
    std::vector<Term> terms_;
};

/// Exact quotient a / b for polynomials (nonnegative exponents).
/// Throws std::domain_error when b does not divide a.
Polynomial divide_exact(const Polynomial &a, const Polynomial &b);

/// Greatest common divisor over Q of two polynomials with nonnegative exponents,
/// normalized so the leading coefficient is 1. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &a, const Polynomial &b);

/// Scales so the leading coefficient is 1 (zero stays zero).
Polynomial make_monic(const Polynomial &p);

} // namespace motivic
