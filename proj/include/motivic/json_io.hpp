#pragma once

#include "motivic/dtpt.hpp"
#include "motivic/verify.hpp"

#include <json.hpp>

namespace motivic::io {

/// Key order is kept as written so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Scalars travel as strings in the text grammar. Rationals are accepted as
/// JSON integers or as "p/q" strings.
Rational rational_from_json(const Json &j);
Json to_json(const Rational &r);

/// {"order": N, "coeffs": ["c_0", ..., "c_N"]}
Json to_json(const QSeries &f);
QSeries series_from_json(const Json &j);

/// {"a": a, "beta": [...], "rank": r}
Json to_json(const GradedClass &v);
GradedClass class_from_json(const Json &j);

/// {"a_min", "a_max", "beta_max": [...]} plus "gamma0_depth" when set.
Json to_json(const Window &w);
Window window_from_json(const Json &j);

/// {"mode": "standard" | "trivial" | "matrix", "matrix": [[...]]}; the
/// matrix is present only in matrix mode.
Json to_json(const PairingForm &p);
PairingForm pairing_from_json(const Json &j);

/// [{"class": ..., "coeff": "..."}, ...] in class order.
Json to_json(const TorusElement &x);
TorusElement element_from_json(const Json &j, const Window &window);

Json to_json(const GeometryConfig &cfg);

/// {"config", "per_class": [{"class", "lhs", "rhs", "equal"}], "pass",
///  "beta_graded", "truncated_flags": {"lhs", "rhs"}}
Json to_json(const WallcrossReport &r);

/// {"suite", "seed", "pass", "properties": [{"name", "cases", "skipped",
///  "pass", "counterexample"?}]}
Json to_json(const verify::SuiteResult &r);

} // namespace motivic::io
