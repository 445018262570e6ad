#pragma once

#include "motivic/dtpt.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace motivic::verify {

/// Seeded generator. Integers come from mt19937_64 by plain modulo reduction,
/// so a seed reproduces the same draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi);
    bool chance(int percent) { return uniform(0, 99) < percent; }

private:
    std::mt19937_64 engine_;
};

struct ScalarShape {
    int max_terms = 3;
    int u_range = 3;       ///< u exponents in [-u_range, u_range]
    int atom_count = 2;    ///< atoms X.1 .. X.atom_count
    int max_atom_exp = 2;
    long coeff_bound = 4;  ///< numerators in [-bound, bound], denominators in [1, 3]
    int fraction_percent = 40;
    /// Denominators are products of u^j +- 1 instead of random polynomials.
    bool u_denominators = false;
    int max_den_factors = 2;
    int max_den_degree = 3; ///< j in u^j +- 1
    int density_percent = 60; ///< chance that a series coefficient is nonzero
};

Polynomial random_laurent(Rng &rng, const ScalarShape &shape);
MotiveScalar random_scalar(Rng &rng, const ScalarShape &shape);
/// Random series of the given order with zero constant term.
QSeries random_series(Rng &rng, std::size_t order, const ScalarShape &shape);

enum class Sector { Gamma0, Gamma1 };
/// Random element supported in one sector of the window; rank 0 terms avoid
/// the zero class when `nilpotent` is set.
TorusElement random_element(Rng &rng, const Window &window, Sector sector, const ScalarShape &shape,
                            bool nilpotent = false, int max_terms = 3);

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t skipped = 0;
    std::optional<std::string> counterexample; ///< minimized, set on failure
    bool passed() const { return !counterexample; }
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;
    bool passed() const;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t cases = 0; ///< 0 selects the suite default
    GeometryConfig geometry;
};

/// Normalization, field laws, Adams laws, euler o adams, and agreement of
/// canonical equality with a 5-point evaluation oracle (default 200 cases).
SuiteResult ring_suite(const SuiteOptions &opts);
/// Log o Exp, Exp additivity, the Adams bridge against a product-form Exp,
/// and log o exp on random series of order 8 with up to 3 atoms (default 50 cases).
SuiteResult plethystic_suite(const SuiteOptions &opts);
/// Associativity, commutator identity, Jacobi, antisymmetry, grading,
/// pairing validation and the adjoint action (default 25 cases).
SuiteResult torus_suite(const SuiteOptions &opts);
/// The wall-crossing replay for symbolic and unit PT data, beta-grading,
/// conjugation form, and dual computation of N_n^mot.
SuiteResult wallcross_suite(const SuiteOptions &opts);

/// "ring", "plethystic", "torus", "wallcross"; "all" runs them in that order.
/// Throws std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suites(const std::string &name, const SuiteOptions &opts);

const std::vector<std::string> &suite_names();

} // namespace motivic::verify
