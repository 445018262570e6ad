#pragma once

#include "motivic/motive_scalar.hpp"

#include <span>
#include <string>
#include <vector>

namespace motivic {

/// Truncated power series sum_{n=0..N} c_n q^n with scalar coefficients.
///
/// Arithmetic is exact modulo q^{N+1}. Binary operations require equal
/// order; re-truncation is always explicit through `truncate`.
class QSeries {
public:
    explicit QSeries(std::size_t order = 0);
    /// order = coeffs.size() - 1; throws on an empty vector.
    explicit QSeries(std::vector<MotiveScalar> coeffs);

    static QSeries one(std::size_t order);
    static QSeries monomial(std::size_t order, std::size_t degree, MotiveScalar coeff);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const MotiveScalar &operator[](std::size_t n) const { return coeffs_.at(n); }
    void set(std::size_t n, MotiveScalar c) { coeffs_.at(n) = std::move(c); }
    std::span<const MotiveScalar> coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept;

    /// Drops coefficients above `new_order`; throws if new_order > order().
    QSeries truncate(std::size_t new_order) const;
    /// f(q) -> f(-q).
    QSeries negate_variable() const;
    QSeries map(const std::function<MotiveScalar(const MotiveScalar &)> &f) const;

    QSeries operator-() const;
    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    QSeries &operator*=(const MotiveScalar &c);

    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(QSeries a, const MotiveScalar &c) { return a *= c; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    friend bool operator==(const QSeries &, const QSeries &) = default;

private:
    std::vector<MotiveScalar> coeffs_;
};

/// exp(f); requires f[0] = 0, else std::domain_error("exp/log domain").
QSeries series_exp(const QSeries &f);
/// log(f) = sum (-1)^{n-1} (f-1)^n / n; requires f[0] = 1.
QSeries series_log(const QSeries &f);

/// The unique h with den * h = num mod q^{N+1}, for q-polynomials given by
/// coefficient lists. Throws std::domain_error("non-unit denominator") when den[0] = 0.
QSeries expand_rational(std::span<const MotiveScalar> num, std::span<const MotiveScalar> den, std::size_t order);

/// a_n = sum_{k | n} (1/k) psi^k(b_{n/k}), so that exp(sum a_n q^n) = Exp(sum b_m q^m).
QSeries exp_coeff_bridge(const QSeries &b);
/// Inverse of `exp_coeff_bridge` (triangular in n).
QSeries bridge_inverse(const QSeries &a);

/// Power-structure exponential Exp(sum b_m q^m) = prod (1 - q^m)^{-b_m}.
QSeries plethystic_exp(const QSeries &f);
/// Inverse of `plethystic_exp`; requires f[0] = 1.
QSeries plethystic_log(const QSeries &f);

/// Coefficientwise Euler specialization.
QSeries euler_specialize(const QSeries &f, const EulerConfig &cfg);

/// `(c_0) q^0 + (c_1) q^1 + ... + O(q^{N+1})`, skipping zero coefficients.
std::string to_string(const QSeries &f);

} // namespace motivic
