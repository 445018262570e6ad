#include "motivic/json_io.hpp"

#include "motivic/text.hpp"

#include <stdexcept>

namespace motivic::io {

namespace {

const Json &field(const Json &j, const char *key)
{
    if (!j.is_object()) {
        throw std::invalid_argument(std::string("expected an object with field '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    }
    return *it;
}

int int_from_json(const Json &j, const char *what)
{
    Rational r = rational_from_json(j);
    if (r.get_den() != 1 || !r.get_num().fits_sint_p()) {
        throw std::invalid_argument(std::string(what) + " must be an integer");
    }
    return static_cast<int>(r.get_num().get_si());
}

std::vector<int> ints_from_json(const Json &j, const char *what)
{
    if (!j.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be an array");
    }
    std::vector<int> out;
    for (const Json &x : j) {
        out.push_back(int_from_json(x, what));
    }
    return out;
}

MotiveScalar scalar_from_json(const Json &j)
{
    if (j.is_string()) {
        return parse_scalar(j.get<std::string>());
    }
    return MotiveScalar(rational_from_json(j));
}

} // namespace

Rational rational_from_json(const Json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw std::invalid_argument("expected an exact rational (integer or \"p/q\"), got " + j.dump());
}

Json to_json(const Rational &r)
{
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) {
        return r.get_num().get_si();
    }
    return to_string(r);
}

Json to_json(const QSeries &f)
{
    Json coeffs = Json::array();
    for (const MotiveScalar &c : f.coefficients()) {
        coeffs.push_back(to_string(c));
    }
    return {{"order", f.order()}, {"coeffs", coeffs}};
}

QSeries series_from_json(const Json &j)
{
    const int order = int_from_json(field(j, "order"), "order");
    const Json &coeffs = field(j, "coeffs");
    if (order < 0 || !coeffs.is_array() || coeffs.size() > static_cast<std::size_t>(order) + 1) {
        throw std::invalid_argument("series needs order >= 0 and at most order + 1 coefficients");
    }
    QSeries f(static_cast<std::size_t>(order));
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        f.set(n, scalar_from_json(coeffs[n]));
    }
    return f;
}

Json to_json(const GradedClass &v) { return {{"a", v.a}, {"beta", v.beta}, {"rank", v.rank}}; }

GradedClass class_from_json(const Json &j)
{
    GradedClass v{int_from_json(field(j, "a"), "a"), ints_from_json(field(j, "beta"), "beta"),
                  int_from_json(field(j, "rank"), "rank")};
    v.validate();
    return v;
}

Json to_json(const Window &w)
{
    Json j = {{"a_min", w.a_min}, {"a_max", w.a_max}, {"beta_max", w.beta_max}};
    if (w.gamma0_depth) {
        j["gamma0_depth"] = *w.gamma0_depth;
    }
    return j;
}

Window window_from_json(const Json &j)
{
    Window w{int_from_json(field(j, "a_min"), "a_min"), int_from_json(field(j, "a_max"), "a_max"),
             ints_from_json(field(j, "beta_max"), "beta_max"), std::nullopt};
    if (j.contains("gamma0_depth")) {
        w.gamma0_depth = int_from_json(j["gamma0_depth"], "gamma0_depth");
    }
    w.validate();
    return w;
}

Json to_json(const PairingForm &p)
{
    switch (p.mode()) {
    case PairingForm::Mode::Standard:
        return {{"mode", "standard"}};
    case PairingForm::Mode::Trivial:
        return {{"mode", "trivial"}};
    case PairingForm::Mode::Matrix:
        break;
    }
    return {{"mode", "matrix"}, {"matrix", p.matrix()}};
}

PairingForm pairing_from_json(const Json &j)
{
    const Json &mode = field(j, "mode");
    if (mode == "standard") {
        return PairingForm::standard();
    }
    if (mode == "trivial") {
        return PairingForm::trivial();
    }
    if (mode != "matrix") {
        throw std::invalid_argument("pairing mode must be standard, trivial or matrix, got " + mode.dump());
    }
    const Json &rows = field(j, "matrix");
    if (!rows.is_array()) {
        throw std::invalid_argument("pairing matrix must be an array of rows");
    }
    PairingForm::Matrix m;
    for (const Json &row : rows) {
        std::vector<int> entries = ints_from_json(row, "pairing matrix row");
        m.emplace_back(entries.begin(), entries.end());
    }
    return PairingForm::from_matrix(std::move(m));
}

Json to_json(const TorusElement &x)
{
    Json out = Json::array();
    for (const auto &[v, c] : x.terms()) {
        out.push_back({{"class", to_json(v)}, {"coeff", to_string(c)}});
    }
    return out;
}

TorusElement element_from_json(const Json &j, const Window &window)
{
    if (!j.is_array()) {
        throw std::invalid_argument("torus element must be an array of terms");
    }
    TorusElement x(window);
    for (const Json &term : j) {
        x.add_term(class_from_json(field(term, "class")), scalar_from_json(field(term, "coeff")));
    }
    return x;
}

Json to_json(const GeometryConfig &cfg)
{
    return {{"generator", cfg.generator},
            {"chi", cfg.chi ? to_json(*cfg.chi) : Json("symbolic")},
            {"order", cfg.order},
            {"curve_rank", cfg.curve_rank()},
            {"window", to_json(cfg.window)},
            {"pairing", to_json(cfg.pairing)},
            {"pt", cfg.pt_mode == GeometryConfig::PtMode::Symbolic ? "symbolic" : "unit"}};
}

Json to_json(const WallcrossReport &r)
{
    Json rows = Json::array();
    for (const ClassCheck &c : r.per_class) {
        rows.push_back(
            {{"class", to_json(c.cls)}, {"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}, {"equal", c.equal}});
    }
    return {{"config", to_json(r.config)},
            {"per_class", rows},
            {"pass", r.pass},
            {"beta_graded", r.beta_graded},
            {"truncated_flags", {{"lhs", r.lhs_truncated}, {"rhs", r.rhs_truncated}}}};
}

Json to_json(const verify::SuiteResult &r)
{
    Json props = Json::array();
    for (const verify::PropertyResult &p : r.properties) {
        Json row = {{"name", p.name}, {"cases", p.cases}, {"skipped", p.skipped}, {"pass", p.passed()}};
        if (p.counterexample) {
            row["counterexample"] = *p.counterexample;
        }
        props.push_back(row);
    }
    return {{"suite", r.suite}, {"seed", r.seed}, {"pass", r.passed()}, {"properties", props}};
}

} // namespace motivic::io
