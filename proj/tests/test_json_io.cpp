#include "motivic/json_io.hpp"
#include "motivic/text.hpp"

#include "printers.hpp"

using namespace motivic;
using io::Json;

namespace {

MotiveScalar S(const char *text) { return parse_scalar(text); }

} // namespace

TEST_CASE("rationals")
{
    CHECK(io::rational_from_json(Json(-3)) == Rational(-3));
    CHECK(io::rational_from_json(Json("6/4")) == Rational(3, 2));
    CHECK(io::to_json(Rational(5)) == Json(5));
    CHECK(io::to_json(Rational(-1, 3)) == Json("-1/3"));
    CHECK_THROWS_AS(io::rational_from_json(Json(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(io::rational_from_json(Json("1/0")), std::exception);
}

TEST_CASE("series round trip")
{
    QSeries f(3);
    f.set(1, S("-u^-3*X.1"));
    f.set(3, S("(u + X.2)/(u^2 + 1)"));
    Json j = io::to_json(f);
    CHECK(j["order"] == 3);
    CHECK(j["coeffs"][0] == "0");
    CHECK(j["coeffs"][1] == "(-1) * u^-3 * X.1");
    CHECK(io::series_from_json(j) == f);

    // short coefficient lists pad with zeros; numbers are accepted as scalars
    QSeries g = io::series_from_json(Json::parse(R"({"order": 2, "coeffs": [1, "u"]})"));
    CHECK(g[0].is_one());
    CHECK(g[1] == S("u"));
    CHECK(g[2].is_zero());
    CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"order": 0, "coeffs": [1, 2]})")), std::invalid_argument);
    CHECK_THROWS_AS(io::series_from_json(Json::parse(R"({"coeffs": []})")), std::invalid_argument);
}

TEST_CASE("classes, windows and pairings")
{
    GradedClass v = GradedClass::gamma1(-2, {1, 0});
    CHECK(io::to_json(v) == Json::parse(R"({"a": -2, "beta": [1, 0], "rank": 1})"));
    CHECK(io::class_from_json(io::to_json(v)) == v);
    CHECK_THROWS_AS(io::class_from_json(Json::parse(R"({"a": 1, "beta": [0], "rank": 0})")), std::invalid_argument);

    Window w{-4, 2, {2}, std::nullopt};
    CHECK(io::to_json(w) == Json::parse(R"({"a_min": -4, "a_max": 2, "beta_max": [2]})"));
    CHECK(io::window_from_json(io::to_json(w)) == w);
    Window deep{-1, 0, {}, 3};
    CHECK(io::window_from_json(io::to_json(deep)) == deep);
    CHECK_THROWS_AS(io::window_from_json(Json::parse(R"({"a_min": 1, "a_max": 0, "beta_max": []})")),
                    std::invalid_argument);

    CHECK(io::pairing_from_json(io::to_json(PairingForm::standard())).mode() == PairingForm::Mode::Standard);
    CHECK(io::pairing_from_json(io::to_json(PairingForm::trivial())).mode() == PairingForm::Mode::Trivial);
    PairingForm m = PairingForm::from_matrix({{0, 0, -1}, {0, 0, 3}, {1, -3, 0}});
    Json mj = io::to_json(m);
    CHECK(mj["mode"] == "matrix");
    CHECK(io::pairing_from_json(mj).matrix() == m.matrix());
    CHECK_THROWS_AS(io::pairing_from_json(Json::parse(R"({"mode": "skew"})")), std::invalid_argument);
    CHECK_THROWS_AS(io::pairing_from_json(Json::parse(R"({"mode": "matrix", "matrix": [[0, 1], [1, 0]]})")),
                    std::invalid_argument);
}

TEST_CASE("torus elements")
{
    Window w{-2, 0, {1}, std::nullopt};
    TorusElement x = TorusElement::monomial(w, GradedClass::gamma1(-1, {1}), S("X.1/(u+1)")) +
                     TorusElement::monomial(w, GradedClass::gamma0(2, 1), S("u"));
    Json j = io::to_json(x);
    REQUIRE(j.size() == 2);
    // class order puts rank 0 first
    CHECK(j[0]["class"]["rank"] == 0);
    CHECK(j[1]["coeff"] == to_string(S("X.1/(u+1)")));
    CHECK(io::element_from_json(j, w) == x);
    CHECK_THROWS_AS(io::element_from_json(Json::parse(R"([{"class": {"a": 3, "beta": [0], "rank": 1}, "coeff": "1"}])"), w),
                    std::out_of_range);
}

TEST_CASE("wall-crossing report schema")
{
    GeometryConfig cfg;
    cfg.window = Window{-1, 0, {0}, std::nullopt};
    Json j = io::to_json(wallcross_verify(cfg));
    CHECK(j["pass"] == true);
    CHECK(j["beta_graded"] == true);
    CHECK(j["config"]["chi"] == "symbolic");
    CHECK(j["config"]["window"]["a_min"] == -1);
    CHECK(j["truncated_flags"].contains("lhs"));
    REQUIRE(j["per_class"].size() == 2);
    for (const Json &row : j["per_class"]) {
        CHECK(row["equal"] == true);
        CHECK(row["lhs"] == row["rhs"]);
    }
    CHECK(j["per_class"][0]["lhs"] == "P[1,0].1 + (-1) * u^-3 * P[0,0].1 * X.1");
}

TEST_CASE("suite result schema")
{
    verify::SuiteResult r{"ring", 9, {{"law", 3, 1, std::nullopt}, {"other", 2, 0, std::string("x = 1")}}};
    Json j = io::to_json(r);
    CHECK(j["suite"] == "ring");
    CHECK(j["seed"] == 9);
    CHECK(j["pass"] == false);
    CHECK_FALSE(j["properties"][0].contains("counterexample"));
    CHECK(j["properties"][1]["counterexample"] == "x = 1");
}
