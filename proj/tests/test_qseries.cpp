#include "motivic/qseries.hpp"
#include "motivic/text.hpp"

#include "printers.hpp"

using namespace motivic;

namespace {

MotiveScalar S(const char *text) { return parse_scalar(text); }

QSeries series(std::initializer_list<const char *> coeffs)
{
    std::vector<MotiveScalar> c;
    for (const char *t : coeffs) {
        c.push_back(parse_scalar(t));
    }
    return QSeries(std::move(c));
}

// exp by the defining sum of powers, sum_m f^m / m!, independent of the recurrence.
QSeries naive_exp(const QSeries &f)
{
    QSeries total = QSeries::one(f.order());
    QSeries power = QSeries::one(f.order());
    Rational factorial(1);
    for (std::size_t m = 1; m <= f.order(); ++m) {
        power = power * f;
        factorial *= static_cast<long>(m);
        total += power * MotiveScalar(Rational(1) / factorial);
    }
    return total;
}

// Coefficients of (1 - q)^{-c}: c (c+1) ... (c+n-1) / n!.
QSeries binomial_series(const Rational &c, std::size_t order)
{
    QSeries out(order);
    Rational coeff(1);
    for (std::size_t n = 0; n <= order; ++n) {
        out.set(n, MotiveScalar(coeff));
        coeff *= (c + static_cast<long>(n));
        coeff /= static_cast<long>(n + 1);
    }
    return out;
}

} // namespace

TEST_CASE("series exp and log examples")
{
    CHECK(series_exp(QSeries(3)) == QSeries::one(3));
    CHECK(series_log(series({"1", "X.1", "0", "0"})) == series({"0", "X.1", "-X.1^2/2", "X.1^3/3"}));

    QSeries f = series({"0", "u", "u^2/2"});
    CHECK(series_exp(f) == series({"1", "u", "u^2"}));
    CHECK(series_exp(f) == naive_exp(f));

    QSeries g = series({"0", "X.1/(u - 1)", "u*X.2", "1/(u + 1)", "X.1*X.2"});
    CHECK(series_exp(g) == naive_exp(g));
    CHECK(series_log(series_exp(g)) == g);

    CHECK_THROWS_WITH_AS(series_exp(series({"1", "u"})), doctest::Contains("exp/log domain"), std::domain_error);
    CHECK_THROWS_WITH_AS(series_log(series({"2", "u"})), doctest::Contains("exp/log domain"), std::domain_error);
}

TEST_CASE("orders are never mixed silently")
{
    CHECK_THROWS_AS(QSeries::one(2) * QSeries::one(3), std::invalid_argument);
    CHECK_THROWS_AS(QSeries::one(2) + QSeries::one(3), std::invalid_argument);
    CHECK(QSeries::one(3).truncate(2) * QSeries::one(2) == QSeries::one(2));
    CHECK_THROWS_AS(QSeries::one(2).truncate(3), std::invalid_argument);
}

TEST_CASE("rational expansion")
{
    // -L^{-3/2}[X] q / ((1 + L^{1/2} q)(1 + L^{-1/2} q))
    auto num = parse_q_polynomial("-L^{-3/2}*X.1*q");
    auto den = parse_q_polynomial("(1 + L^{1/2}*q)*(1 + L^{-1/2}*q)");
    QSeries h = expand_rational(num, den, 3);
    CHECK(h[0].is_zero());
    for (int n = 1; n <= 3; ++n) {
        MotiveScalar expected = MotiveScalar::u(-3) * MotiveScalar::atom("X") *
                                (MotiveScalar::u(n) - MotiveScalar::u(-n)) / (S("u - u^-1"));
        CHECK(h[static_cast<std::size_t>(n)] == expected);
    }

    CHECK(expand_rational(parse_q_polynomial("q"), parse_q_polynomial("1 - q"), 4) ==
          series({"0", "1", "1", "1", "1"}));
    CHECK(expand_rational(parse_q_polynomial("1"), parse_q_polynomial("1"), 2) == QSeries::one(2));
    CHECK_THROWS_WITH_AS(expand_rational(parse_q_polynomial("1"), parse_q_polynomial("q"), 2),
                         "non-unit denominator", std::domain_error);

    // den * h = num mod q^{N+1}
    auto den2 = parse_q_polynomial("u - X.1*q + (u^2 + 1)*q^3");
    auto num2 = parse_q_polynomial("X.2 + q^2/(u - 1)");
    QSeries h2 = expand_rational(num2, den2, 6);
    QSeries den_series(6);
    for (std::size_t i = 0; i < den2.size(); ++i) {
        den_series.set(i, den2[i]);
    }
    QSeries num_series(6);
    for (std::size_t i = 0; i < num2.size(); ++i) {
        num_series.set(i, num2[i]);
    }
    CHECK(den_series * h2 == num_series);
}

TEST_CASE("power structure exponential")
{
    // (1 - q)^{-[X]} = sum [Sym^n X] q^n with [Sym^2 X] = (X.1^2 + X.2)/2
    CHECK(plethystic_exp(series({"0", "X.1", "0"})) == series({"1", "X.1", "(X.1^2 + X.2)/2"}));
    CHECK(plethystic_exp(QSeries(4)) == QSeries::one(4));
    CHECK(plethystic_exp(series({"0", "u", "0"})) == series({"1", "u", "u^2"}));
    CHECK(plethystic_exp(series({"0", "u", "0"})) == series_exp(series({"0", "u", "u^2/2"})));
    CHECK_THROWS_AS(plethystic_exp(series({"1", "u"})), std::domain_error);
}

TEST_CASE("power structure logarithm")
{
    CHECK(plethystic_log(series({"1", "X.1", "(X.1^2 + X.2)/2"})) == series({"0", "X.1", "0"}));
    CHECK(plethystic_log(QSeries::one(3)) == QSeries(3));
    for (const Rational &c : {Rational(3), Rational(-7, 2), Rational(-200)}) {
        QSeries expected(3);
        expected.set(1, MotiveScalar(c));
        CHECK(plethystic_log(binomial_series(c, 3)) == expected);
    }
    CHECK_THROWS_AS(plethystic_log(series({"0", "u"})), std::domain_error);
}

TEST_CASE("Adams bridge")
{
    CHECK(exp_coeff_bridge(series({"0", "X.1", "0"})) == series({"0", "X.1", "X.2/2"}));
    QSeries a = exp_coeff_bridge(series({"0", "5/3", "0", "0", "0"}));
    for (long n = 1; n <= 4; ++n) {
        CHECK(a[static_cast<std::size_t>(n)] == MotiveScalar(Rational(5, 3) / n));
    }
    CHECK(exp_coeff_bridge(QSeries(3)) == QSeries(3));

    QSeries b = series({"0", "u*X.1", "X.1/(u + 1)", "u^-2", "X.2*X.1"});
    CHECK(series_exp(exp_coeff_bridge(b)) == plethystic_exp(b));
    CHECK(bridge_inverse(exp_coeff_bridge(b)) == b);
}

TEST_CASE("Euler specialization commutes with the power structure")
{
    // chi((1 - q)^{-[X]}) = (1 - q)^{-chi(X)}
    EulerConfig cfg = EulerConfig::numeric("X", Rational(-6));
    QSeries lhs = euler_specialize(plethystic_exp(series({"0", "X.1", "0", "0", "0", "0"})), cfg);
    CHECK(lhs == binomial_series(Rational(-6), 5));

    QSeries f = series({"0", "u^-3*X.1", "X.1*(u - u^-1)/(u^2 - u^-2)", "X.1^2"});
    QSeries specialized = euler_specialize(f, cfg);
    CHECK(euler_specialize(plethystic_exp(f), cfg) == plethystic_exp(specialized));
}

TEST_CASE("series text form")
{
    CHECK(to_string(series({"1", "0", "-u^-3*X.1"})) == "(1) q^0 + ((-1) * u^-3 * X.1) q^2 + O(q^3)");
    CHECK(series({"1", "u"}).negate_variable() == series({"1", "-u"}));
}
