#pragma once

#include "motivic/motive_scalar.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace motivic {

/// Canonical text forms.
///
/// A monomial prints as `coeff * u^e * base.k^e ...` with factors in the
/// canonical symbol order; exponents of 1 are omitted, a coefficient of 1 is
/// omitted when factors follow, and negative or fractional coefficients are
/// parenthesized: `(-1) * u^-3 * X.1`, `(1/2) * X.2`. Terms are joined by
/// ` + ` in decreasing monomial order. A scalar with denominator 1 prints as
/// its numerator, otherwise as `(num) / (den)`. Zero prints as `0`.
std::string to_string(const Rational &r);
std::string to_string(const Monomial &m);
std::string to_string(const Polynomial &p);
std::string to_string(const MotiveScalar &s);

/// Error raised for malformed text, carrying the byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// `p`, `-p`, or `p/q`.
Rational parse_rational(std::string_view text);

/// Parses a scalar expression: rationals, `u`, atoms `base.k`, `chi(base)`,
/// `L`, `L^n`, `L^{a/2}` (rewritten to (-u)^a), with `+ - * /`, integer
/// powers `^e` and parentheses. The canonical output of `to_string` parses
/// back to the same scalar.
MotiveScalar parse_scalar(std::string_view text);

/// Same grammar plus the series variable `q`; returns coefficients by q-degree.
/// Division is only allowed by q-free expressions.
std::vector<MotiveScalar> parse_q_polynomial(std::string_view text);

} // namespace motivic
