#include "motivic/text.hpp"
#include "motivic/torus.hpp"

#include "printers.hpp"

using namespace motivic;

namespace {

MotiveScalar S(const char *text) { return parse_scalar(text); }

const Window small_window{-2, 0, {1}, std::nullopt};

GradedClass g0(int n) { return GradedClass::gamma0(n, 1); }
GradedClass g1(int a, int beta) { return GradedClass::gamma1(a, {beta}); }

TorusElement mono(const GradedClass &v, const MotiveScalar &c = MotiveScalar(1), const Window &w = small_window)
{
    return TorusElement::monomial(w, v, c);
}

// Plain double sum over both supports; independent of the product's own loop.
MotiveScalar coefficient_by_pairs(const TorusElement &x, const TorusElement &y, const GradedClass &w,
                                  const PairingForm &form)
{
    MotiveScalar total;
    for (const auto &[v1, c1] : x.terms()) {
        for (const auto &[v2, c2] : y.terms()) {
            if (v1.rank + v2.rank <= 1 && v1 + v2 == w) {
                total += c1 * c2 * MotiveScalar::lefschetz_half_power(static_cast<int>(form(v1, v2)));
            }
        }
    }
    return total;
}

} // namespace

TEST_CASE("twisted product on monomials")
{
    const auto form = PairingForm::standard();
    CHECK(star_mul(mono(g0(1)), mono(g1(0, 1)), form) == mono(g1(-1, 1), S("-u")));
    CHECK(star_mul(mono(g1(0, 1)), mono(g0(1)), form) == mono(g1(-1, 1), S("-u^-1")));
    CHECK(star_mul(mono(g1(0, 1), S("X.1")), TorusElement::one(small_window), form) == mono(g1(0, 1), S("X.1")));
    CHECK(star_mul(TorusElement::one(small_window), mono(g0(2), S("X.2")), form) == mono(g0(2), S("X.2")));

    // chi = 0 inside Gamma^0
    CHECK(star_mul(mono(g0(1)), mono(g0(1)), form) == mono(g0(2)));
}

TEST_CASE("untwisted product")
{
    CHECK(untwisted_mul(mono(g0(1)), mono(g1(0, 1))) == mono(g1(-1, 1)));
    CHECK(untwisted_mul(mono(g0(1), S("X.1")), mono(g1(0, 0), S("u^2"))) == mono(g1(-1, 0), S("u^2*X.1")));

    TorusElement x = mono(g0(1), S("X.1")) + mono(g1(0, 1), S("u"));
    TorusElement y = mono(g0(1), S("1/(u+1)")) + mono(g0(0), S("X.2"));
    CHECK(untwisted_mul(x, y) == untwisted_mul(y, x));
}

TEST_CASE("products are graded by class")
{
    const auto form = PairingForm::standard();
    TorusElement x = mono(g0(0), S("X.1")) + mono(g0(1), S("u")) + mono(g0(2), S("2"));
    TorusElement y = mono(g1(-1, 1), S("X.2")) + mono(g0(1), S("u^-1 - 1")) + mono(g1(0, 1), S("1/(u-1)"));
    TorusElement p = star_mul(x, y, form);
    for (const GradedClass &w : small_window.classes()) {
        CHECK(p.extract(w) == coefficient_by_pairs(x, y, w, form));
    }
}

TEST_CASE("terms leaving the window are dropped and flagged")
{
    TorusElement p = star_mul(mono(g0(2)), mono(g1(-1, 0)), PairingForm::standard());
    CHECK(p.is_zero());
    CHECK(p.truncated());

    TorusElement q = star_mul(mono(g0(1)), mono(g1(0, 0)), PairingForm::standard());
    CHECK_FALSE(q.truncated());
}

TEST_CASE("brackets")
{
    const auto form = PairingForm::standard();
    CHECK(bracket(mono(g0(2)), mono(g1(0, 1)), form) == mono(g1(-2, 1), S("u^2 - u^-2")));
    CHECK(bracket(mono(g0(1)), mono(g0(2)), form).is_zero());

    TorusElement e = mono(g0(1), S("X.1")) + mono(g0(2), S("u"));
    TorusElement x = mono(g1(0, 1), S("X.2")) + mono(g1(-1, 0), S("1/(u+1)"));
    CHECK(bracket(e, x, form) == -bracket(x, e, form));

    // {x^(-n,0,0), x^v} = ((-u)^n - (-u)^-n) x^(-n,0,0) . x^v
    for (int n = 1; n <= 2; ++n) {
        MotiveScalar factor = MotiveScalar::lefschetz_half_power(n) - MotiveScalar::lefschetz_half_power(-n);
        CHECK(bracket(mono(g0(n)), mono(g1(0, 0)), form) == untwisted_mul(mono(g0(n)), mono(g1(0, 0))) * factor);
    }
}

TEST_CASE("adjoint exponential")
{
    const auto form = PairingForm::standard();
    const MotiveScalar c = S("X.1");
    const MotiveScalar step = S("u^-1 - u");

    TorusElement x = mono(g1(0, 0));
    CHECK(exp_adjoint(TorusElement(small_window), x, form) == x);

    // two brackets by hand: each one contributes c (L^{1/2} - L^{-1/2})
    TorusElement expected = x + mono(g1(-1, 0), c * step) +
                            mono(g1(-2, 0), c * c * step * step * MotiveScalar(Rational(1, 2)));
    CHECK(exp_adjoint(mono(g0(1), c), x, form) == expected);

    TorusElement central = mono(g0(1), S("X.2")) + mono(g0(2), S("u"));
    CHECK(exp_adjoint(mono(g0(1), c), central, form) == central);

    CHECK_THROWS_WITH_AS(exp_adjoint(TorusElement::one(small_window), x, form), doctest::Contains("non-nilpotent"),
                         std::domain_error);
    CHECK_THROWS_AS(exp_adjoint(x, x, form), std::domain_error);

    CHECK(exp_adjoint(mono(g0(1), c), x, PairingForm::trivial()) == x);
}

TEST_CASE("exp and log in the commutative sector")
{
    const MotiveScalar c = S("X.1");
    CHECK(exp_gamma0(TorusElement(small_window)) == TorusElement::one(small_window));

    TorusElement one_plus = TorusElement::one(small_window) + mono(g0(1), c);
    CHECK(log_gamma0(one_plus) == mono(g0(1), c) - mono(g0(2), c * c * MotiveScalar(Rational(1, 2))));

    TorusElement e = mono(g0(1), S("u/(u+1)")) + mono(g0(2), S("X.2"));
    CHECK(log_gamma0(exp_gamma0(e)) == e);
    CHECK(gamma0_to_series(exp_gamma0(e)) == series_exp(gamma0_to_series(e)));
    CHECK(series_to_gamma0(gamma0_to_series(e), small_window) == e);

    CHECK_THROWS_AS(exp_gamma0(TorusElement::one(small_window)), std::domain_error);
    CHECK_THROWS_AS(log_gamma0(mono(g0(1))), std::domain_error);
    CHECK_THROWS_AS(log_gamma0(mono(g1(0, 0))), std::domain_error);
}

TEST_CASE("extraction")
{
    CHECK(TorusElement::one(small_window).extract(g0(0)).is_one());
    CHECK(TorusElement(small_window).extract(g1(0, 1)).is_zero());
    CHECK(mono(g1(-1, 1)).extract(g1(-1, 1)).is_one());
    CHECK_THROWS_WITH_AS(TorusElement(small_window).extract(g1(1, 0)), doctest::Contains("outside truncation window"),
                         std::out_of_range);
    CHECK_THROWS_AS(TorusElement(small_window).extract(g0(3)), std::out_of_range);
    CHECK_THROWS_AS(mono(g1(3, 0)), std::out_of_range);
}

TEST_CASE("classes and windows")
{
    CHECK_THROWS_AS(GradedClass::gamma0(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GradedClass::gamma1(0, {-1}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(g1(0, 0) + g1(-1, 1), doctest::Contains("leaves"), std::domain_error);
    CHECK_THROWS_AS(star_mul(mono(g1(0, 0)), mono(g1(-1, 0)), PairingForm::standard()), std::domain_error);

    Window other{-3, 0, {1}, std::nullopt};
    CHECK_THROWS_AS(star_mul(mono(g0(1)), mono(g1(0, 0), MotiveScalar(1), other), PairingForm::standard()),
                    std::invalid_argument);
    CHECK_THROWS_AS(TorusElement(Window{1, 0, {1}, std::nullopt}), std::invalid_argument);

    // rank 1: 3 values of a times 2 of beta; rank 0: depth 2 gives n = 0, 1, 2
    CHECK(small_window.classes().size() == 9);
    CHECK(Window{-2, 0, {1}, 0}.classes().size() == 7);
}

TEST_CASE("matrix pairings")
{
    // coordinates (a, beta, rank); the standard form and a beta-dependent one
    PairingForm standard = PairingForm::from_matrix({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}});
    PairingForm skewed = PairingForm::from_matrix({{0, 0, -1}, {0, 0, 3}, {1, -3, 0}});
    for (const GradedClass &v : small_window.classes()) {
        for (const GradedClass &w : small_window.classes()) {
            CHECK(standard(v, w) == PairingForm::standard()(v, w));
            CHECK(skewed(v, w) == -skewed(w, v));
        }
        if (v.rank == 1) {
            for (int n = 1; n <= 2; ++n) {
                CHECK(skewed(g0(n), v) == n);
            }
        }
    }
    CHECK(bracket(mono(g0(2)), mono(g1(0, 1)), skewed) == mono(g1(-2, 1), S("u^2 - u^-2")));

    CHECK_THROWS_WITH_AS(PairingForm::from_matrix({{0, 0, -1}, {0, 0, 1}, {1, 0, 0}}),
                         doctest::Contains("antisymmetric"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(PairingForm::from_matrix({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}), doctest::Contains("chi((-n,0,0)"),
                         std::invalid_argument);
    CHECK_THROWS_AS(PairingForm::from_matrix({{0, 0, -1}, {0, 0}, {1, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(PairingForm::from_matrix({{0}}), std::invalid_argument);

    PairingForm wide = PairingForm::from_matrix({{0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}});
    CHECK_THROWS_AS(star_mul(mono(g0(1)), mono(g1(0, 0)), wide), std::invalid_argument);
}
