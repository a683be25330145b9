#pragma once

// Exact verification suites over finite parameter grids. A failed check
// carries the first counterexample in the grid's canonical order, so a
// failure is always reproducible; exceptions raised while evaluating a case
// (non-integral multiplicity, non-dominant weight) become failures too.

#include "rankone/exact.hpp"
#include "rankone/geometry.hpp"
#include "rankone/spectra.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rankone::verify {

struct Counterexample {
  std::map<std::string, std::string> inputs;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::string grid;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::size_t cases = 0;
  double elapsed_ms = 0;
};

/// `check` returns nullopt when case i holds.
using CaseCheck = std::function<std::optional<Counterexample>(std::size_t)>;

struct Failure {
  std::size_t index;
  Counterexample counterexample;
  bool exception = false; // raised rather than returned
};

/// Evaluates cases 0..count-1 across OpenMP threads and returns the failure
/// with the smallest index; an exception thrown by `check` counts as a
/// failure of that case.
std::optional<Failure> first_failure(std::size_t count, const CaseCheck &check);

namespace serial {
std::optional<Failure> first_failure(std::size_t count, const CaseCheck &check);
}

/// (p, q) pairs of [0, p_max] x [0, q_max] ordered by p + q, then p.
std::vector<std::pair<std::int64_t, std::int64_t>> degree_ordered_grid(std::int64_t p_max,
                                                                       std::int64_t q_max);

CheckReport check_round_sphere(const SphereModel &model, std::int64_t k_max,
                               const FormulaHooks &hooks = {});

CheckReport check_unified_vs_table(const SphereModel &model, std::int64_t p_max,
                                   std::int64_t q_max, const FormulaHooks &hooks = {});

CheckReport check_parametrized_identity(const SphereModel &model, std::int64_t p_max,
                                        std::int64_t q_max);

CheckReport check_minkowski_inclusions(const AmbientSpace &ambient, const Rational &slope_squared,
                                       const Rational &cutoff);

CheckReport check_oracles(const SphereModel &model, std::int64_t p_max, std::int64_t q_max,
                          const std::vector<Rational> &t_samples, const FormulaHooks &hooks = {});

/// Kernel identity, positivity bounds on a (bound+1)^2 grid, closed-form vs
/// brute-force Morse index and kernel dimension on `slopes`, and the index
/// jump by m_{p,0} across the first `resonances` resonant slopes.
CheckReport check_jacobi(const AmbientSpace &ambient, const std::vector<Rational> &slopes,
                         std::int64_t bound = 100, std::int64_t resonances = 10,
                         const FormulaHooks &hooks = {});

/// Float consistency of H, |A|^2, V on an evenly spaced radius grid, and
/// strict monotonicity of H.
CheckReport check_float_geometry(const AmbientSpace &ambient, std::size_t points = 1000,
                                 double tolerance = 1e-12);

/// Slopes straddling the first `count` resonant slopes (and, for hyperbolic
/// ambients, `random_count` seeded random rationals in (0, 1)).
std::vector<Rational> jacobi_slope_grid(const AmbientSpace &ambient, std::int64_t count,
                                        std::size_t random_count = 50);

enum class Profile { Quick, Full };

struct RunOptions {
  Profile profile = Profile::Quick;
  std::optional<std::string> only;
  FormulaHooks hooks;
};

/// Check family names accepted by RunOptions::only.
const std::vector<std::string> &check_names();

/// Throws std::invalid_argument for an unknown `only` name.
std::vector<CheckReport> run_all(const RunOptions &options);

bool all_passed(const std::vector<CheckReport> &reports);

// Deliberately broken primitives for mutation testing of the suite itself.
namespace mutants {
/// Off by one in the fibre factor's binomial (and in the d = 1 threshold).
Integer chi_off_by_one(int d, std::int64_t q);
/// Zero convention shifted from a < b to a <= b.
Integer binomial_off_by_one(std::int64_t a, std::int64_t b);

FormulaHooks hooks(std::string_view name); // "chi" or "binomial"
} // namespace mutants

} // namespace rankone::verify
