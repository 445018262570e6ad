#pragma once

#include "motivic/motive_scalar.hpp"
#include "motivic/qseries.hpp"
#include "motivic/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace motivic {

/// Numerical data of the threefold and the truncation used by the pipeline.
struct GeometryConfig {
    enum class PtMode {
        Symbolic, ///< every PT coefficient is an opaque atom P[n,beta]
        Unit,     ///< PT series = 1 (only P[0,0] = 1)
    };

    std::string generator = "X";
    /// Euler characteristic of the threefold; empty means symbolic chi(X).
    std::optional<Rational> chi;
    /// q-order N for the degree-0 series and N_n^mot tables.
    std::size_t order = 6;
    /// Truncation of the graded algebra; its beta_max fixes the curve rank.
    Window window{-6, 2, {2}, std::nullopt};
    PairingForm pairing = PairingForm::standard();
    PtMode pt_mode = PtMode::Symbolic;
    std::string pt_prefix = "P";

    std::size_t curve_rank() const noexcept { return window.curve_rank(); }
    EulerConfig euler_config() const;
    /// Throws std::invalid_argument for N < 1 or an invalid window.
    void validate() const;
};

/// L^{-3/2}[X] = -u^{-3} X.1.
MotiveScalar degree0_seed(const GeometryConfig &cfg);

/// (L^{n/2} - L^{-n/2}) / (L^{1/2} - L^{-1/2}) for n >= 1.
MotiveScalar bracket_weight(int n);

/// Expansion of -L^{-3/2}[X] q / ((1 + L^{1/2} q)(1 + L^{-1/2} q)) to order N.
QSeries bbs_argument(const GeometryConfig &cfg, std::size_t order);

/// sum_{n<=N} DT^mot_{n,0} q^n, from sum DT_{n,0} (-q)^n = Exp(bbs_argument).
QSeries bbs_degree0_series(const GeometryConfig &cfg, std::size_t order);

/// N_1^mot .. N_N^mot by taking log of the degree-0 series and dividing
/// the q^n coefficient by `bracket_weight(n)`.
std::vector<MotiveScalar> n_invariants_from_series(const GeometryConfig &cfg, std::size_t order);

/// N_n^mot = sum_{k|n} ((-1)^{k-1}/k) (L^{1/2}-L^{-1/2})/(L^{k/2}-L^{-k/2}) psi^k(L^{-3/2}[X]).
/// Throws std::invalid_argument for n <= 0.
MotiveScalar n_invariant_closed_form(const GeometryConfig &cfg, int n);

/// -chi sum_{k|n} 1/k^2; symbolic chi yields a multiple of chi(X).
MotiveScalar euler_n_invariant(const GeometryConfig &cfg, int n);

/// M(q)^c with M(q) = prod (1 - q^k)^{-k}, via log M = sum sigma_2(n)/n q^n.
QSeries macmahon_power(const Rational &c, std::size_t order);

/// sum_{(n,beta) in window} P[n,beta] x^{(-n,beta,1)} (or x^0 with unit PT).
TorusElement pt_element(const GeometryConfig &cfg);
/// The PT atom P[n,beta] for class (-n, beta, 1).
MotiveScalar pt_atom(const GeometryConfig &cfg, int n, const std::vector<int> &beta);
/// sum_{1<=n<=depth} N_n^mot / (L^{1/2} - L^{-1/2}) x^{(-n,0,0)}.
TorusElement epsilon_element(const GeometryConfig &cfg);
/// sum_{0<=n<=depth} DT^mot_{n,0} x^{(-n,0,0)}.
TorusElement degree0_element(const GeometryConfig &cfg);

struct ClassCheck {
    GradedClass cls;
    MotiveScalar lhs; ///< from exp({eps,-}) applied to the PT element
    MotiveScalar rhs; ///< degree-0 series times the PT element, untwisted
    bool equal = false;
};

struct WallcrossReport {
    GeometryConfig config;
    std::vector<ClassCheck> per_class; ///< every rank 1 class of the window, sorted
    bool pass = false;
    /// Each lhs coefficient involves only PT atoms of its own curve class.
    bool beta_graded = false;
    bool lhs_truncated = false;
    bool rhs_truncated = false;
};

/// Replays the wall-crossing: builds A_PT and eps, computes
/// A_DT = exp({eps,-})(A_PT), and compares it class by class with the
/// untwisted product of the degree-0 series and A_PT. Throws
/// std::invalid_argument when the rank 0 depth is below a_max - a_min.
WallcrossReport wallcross_verify(const GeometryConfig &cfg);

/// exp({eps,-})(A) against E * A * E^{-1} with E = exp(eps) in Gamma^0.
bool conjugation_form_holds(const GeometryConfig &cfg, const TorusElement &a);

struct FactorizationRow {
    int n = 0;
    std::vector<int> beta;
    MotiveScalar dt;  ///< DT^mot_{n,beta} from the wall-crossing
    MotiveScalar dt0; ///< DT^mot_{n,0} (degree-0 series)
    MotiveScalar pt;  ///< PT^mot_{n,beta}
};

/// Aligned coefficients of DT, DT_0 and PT over the window.
std::vector<FactorizationRow> dt_pt_factorization_coefficients(const GeometryConfig &cfg);

} // namespace motivic
