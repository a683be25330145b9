#include "rankone/verify.hpp"

#include "rankone/lie_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace rankone::verify {

namespace {

using Clock = std::chrono::steady_clock;
using Inputs = std::map<std::string, std::string>;

Rational as_rational(std::int64_t v) { return Rational(Integer(static_cast<long>(v))); }

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const Integer &v) { return v.get_str(); }
std::string str(const Rational &v) { return to_exact_string(v); }

std::string model_label(const SphereModel &model)
{
  return std::string(1, model.algebra().letter()) + ",n=" + std::to_string(model.n());
}

Inputs model_inputs(const SphereModel &model)
{
  return {{"d", str(model.d())}, {"n", str(model.n())}, {"N", str(model.N())}};
}

Inputs ambient_inputs(const AmbientSpace &ambient)
{
  Inputs in = model_inputs(ambient.model);
  in["ambient"] = ambient.name();
  in["sign"] = ambient.sign == CurvatureSign::Projective ? "proj" : "hyp";
  return in;
}

Counterexample mismatch(Inputs inputs, std::string expected, std::string actual,
                        std::string detail)
{
  return {std::move(inputs), std::move(expected), std::move(actual), std::move(detail)};
}

// Runs `count` cases; exceptions are attributed to the case via `describe`.
struct Phase {
  std::size_t count;
  CaseCheck check;
  std::function<Inputs(std::size_t)> describe;
};

CheckReport run_phases(std::string name, std::string grid, const std::vector<Phase> &phases)
{
  const auto start = Clock::now();
  CheckReport report;
  report.name = std::move(name);
  report.grid = std::move(grid);
  for (const auto &phase : phases) {
    report.cases += phase.count;
    if (auto failure = first_failure(phase.count, phase.check)) {
      report.passed = false;
      Counterexample ce = std::move(failure->counterexample);
      if (failure->exception) {
        Inputs described = phase.describe(failure->index);
        described.insert(ce.inputs.begin(), ce.inputs.end());
        ce.inputs = std::move(described);
      }
      report.counterexample = std::move(ce);
      break;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

std::optional<Failure> evaluate_case(std::size_t i, const CaseCheck &check)
{
  try {
    if (auto ce = check(i))
      return Failure{i, std::move(*ce), false};
  } catch (const std::exception &e) {
    return Failure{i, Counterexample{{}, "no exception", "exception", e.what()}, true};
  }
  return std::nullopt;
}

using Grid = std::vector<std::pair<std::int64_t, std::int64_t>>;

Inputs pq_inputs(const SphereModel &model, std::int64_t p, std::int64_t q)
{
  Inputs in = model_inputs(model);
  in["p"] = str(p);
  in["q"] = str(q);
  return in;
}

std::function<Inputs(std::size_t)> describe_grid(const SphereModel &model, const Grid &grid)
{
  return [model, grid](std::size_t i) { return pq_inputs(model, grid[i].first, grid[i].second); };
}

std::string grid_label(const SphereModel &model, std::int64_t p_max, std::int64_t q_max)
{
  return model_label(model) + ", p<=" + str(p_max) + ", q<=" + str(q_max);
}

// Basic spectrum of KP^n with 1 <= sec <= 4, per field.
Rational base_eigenvalue(const SphereModel &model, std::int64_t j)
{
  switch (model.field()) {
  case Field::Complex:
    return as_rational(4 * j * (j + model.n()));
  case Field::Quaternion:
    return as_rational(4 * j * (j + 2 * model.n() + 1));
  case Field::Octonion:
    return as_rational(4 * j * (j + 7));
  }
  throw DomainError("unknown field");
}

// k >= 0 with k(k + N - 2) = K, if any.
std::optional<Integer> round_degree(const Integer &K, int N)
{
  if (sgn(K) < 0)
    return std::nullopt;
  const Integer disc = Integer((N - 2) * (N - 2)) + 4 * K;
  if (!mpz_perfect_square_p(disc.get_mpz_t()))
    return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  const Integer twice_k = root - (N - 2);
  if (sgn(twice_k) < 0 || mpz_odd_p(twice_k.get_mpz_t()))
    return std::nullopt;
  return Integer(twice_k / 2);
}

} // namespace

std::optional<Failure> first_failure(std::size_t count, const CaseCheck &check)
{
  std::atomic<std::size_t> best{count};
  std::optional<Failure> found;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i >= best.load())
      continue;
    auto failure = evaluate_case(i, check);
    if (!failure)
      continue;
#pragma omp critical(rankone_first_failure)
    {
      if (i < best.load()) {
        best.store(i);
        found = std::move(failure);
      }
    }
  }
  return found;
}

namespace serial {
std::optional<Failure> first_failure(std::size_t count, const CaseCheck &check)
{
  for (std::size_t i = 0; i < count; ++i)
    if (auto failure = evaluate_case(i, check))
      return failure;
  return std::nullopt;
}
} // namespace serial

Grid degree_ordered_grid(std::int64_t p_max, std::int64_t q_max)
{
  Grid grid;
  for (std::int64_t s = 0; s <= p_max + q_max; ++s)
    for (std::int64_t p = std::max<std::int64_t>(0, s - q_max); p <= std::min(s, p_max); ++p)
      grid.emplace_back(p, s - p);
  return grid;
}

CheckReport check_round_sphere(const SphereModel &model, std::int64_t k_max,
                               const FormulaHooks &hooks)
{
  const std::int64_t N = model.N();
  Phase phase;
  phase.count = static_cast<std::size_t>(std::max<std::int64_t>(k_max + 1, 0));
  phase.describe = [model](std::size_t k) {
    Inputs in = model_inputs(model);
    in["k"] = str(static_cast<std::int64_t>(k));
    return in;
  };
  phase.check = [model, N, hooks](std::size_t kk) -> std::optional<Counterexample> {
    const auto k = static_cast<std::int64_t>(kk);
    const Rational round = as_rational(k * (k + N - 2));
    Integer total(0);
    for (std::int64_t p = 0; 2 * p <= k; ++p) {
      const std::int64_t q = k - 2 * p;
      const auto [a, b] = eigen_coefficients(model, p, q);
      const Rational value = evaluate_term(a, b, Rational(1));
      if (value != round) {
        Inputs in = pq_inputs(model, p, q);
        in["k"] = str(k);
        in["t2"] = "1/1";
        return mismatch(std::move(in), str(round), str(value),
                        "eigenvalue at t^2 = 1 differs from k(k+N-2)");
      }
      total += multiplicity(model, p, q, hooks);
    }
    const Integer expected = round_multiplicity(N - 1, k);
    if (total != expected) {
      Inputs in = model_inputs(model);
      in["k"] = str(k);
      return mismatch(std::move(in), str(expected), str(total),
                      "sum of m_{p,q} over 2p+q=k differs from the harmonic count");
    }
    return std::nullopt;
  };
  return run_phases("round_sphere[" + model_label(model) + "]",
                    model_label(model) + ", k<=" + str(k_max), {phase});
}

CheckReport check_unified_vs_table(const SphereModel &model, std::int64_t p_max,
                                   std::int64_t q_max, const FormulaHooks &hooks)
{
  const Grid grid = degree_ordered_grid(p_max, q_max);
  Phase phase{grid.size(), {}, describe_grid(model, grid)};
  phase.check = [model, grid, hooks](std::size_t i) -> std::optional<Counterexample> {
    const auto [p, q] = grid[i];
    const TableRow row = table_formulas(model, p, q);
    const auto [a, b] = eigen_coefficients(model, p, q);
    if (a != row.a || b != row.b)
      return mismatch(pq_inputs(model, p, q), "a=" + str(row.a) + ",b=" + str(row.b),
                      "a=" + str(a) + ",b=" + str(b), "eigenvalue coefficients differ");
    const Integer m = multiplicity(model, p, q, hooks);
    if (m != row.multiplicity)
      return mismatch(pq_inputs(model, p, q), str(row.multiplicity), str(m),
                      "unified multiplicity differs from the per-field row");
    return std::nullopt;
  };
  return run_phases("unified_vs_table[" + model_label(model) + "]",
                    grid_label(model, p_max, q_max), {phase});
}

CheckReport check_parametrized_identity(const SphereModel &model, std::int64_t p_max,
                                        std::int64_t q_max)
{
  const Grid grid = degree_ordered_grid(p_max, q_max);
  const std::int64_t N = model.N();
  const std::int64_t d = model.d();
  Phase phase{grid.size(), {}, describe_grid(model, grid)};
  phase.check = [model, grid, N, d](std::size_t i) -> std::optional<Counterexample> {
    const auto [p, q] = grid[i];
    const std::int64_t k = 2 * p + q;
    const std::int64_t fibre = q * (q + 2 * d - 2);
    const auto [a, b] = eigen_coefficients(model, p, q);
    if (a != k * (k + N - 2) - fibre)
      return mismatch(pq_inputs(model, p, q), str(k * (k + N - 2) - fibre), str(a),
                      "a != (2p+q)(2p+q+N-2) - q(q+2d-2)");
    if (b != fibre)
      return mismatch(pq_inputs(model, p, q), str(fibre), str(b), "b != q(q+2d-2)");
    return std::nullopt;
  };
  return run_phases("parametrized_identity[" + model_label(model) + "]",
                    grid_label(model, p_max, q_max), {phase});
}

CheckReport check_minkowski_inclusions(const AmbientSpace &ambient, const Rational &slope_squared,
                                       const Rational &cutoff)
{
  const SphereModel &model = ambient.model;
  const RadiusParams params = radius_params(ambient, slope_squared);
  const bool projective = ambient.sign == CurvatureSign::Projective;
  const MergedSpectrum spectrum = enumerate_spectrum(model, params.t_squared, cutoff);
  const int N = model.N();
  const std::int64_t d = model.d();

  std::vector<Rational> base;
  for (std::int64_t j = 0; base_eigenvalue(model, j) <= cutoff; ++j)
    base.push_back(base_eigenvalue(model, j));

  const std::string grid = ambient.name() + ", s^2=" + str(slope_squared) +
                           ", cutoff=" + str(cutoff);
  Inputs common = ambient_inputs(ambient);
  common["s2"] = str(slope_squared);
  common["t2"] = str(params.t_squared);

  // (a) the base spectrum is contained in every g(t) spectrum, as basic values.
  Phase basic;
  basic.count = base.size();
  basic.describe = [common](std::size_t j) {
    Inputs in = common;
    in["j"] = str(static_cast<std::int64_t>(j));
    return in;
  };
  basic.check = [&](std::size_t j) -> std::optional<Counterexample> {
    const auto it = std::lower_bound(
        spectrum.entries.begin(), spectrum.entries.end(), base[j],
        [](const SpectrumEntry &e, const Rational &v) { return e.value < v; });
    const bool present =
        it != spectrum.entries.end() && it->value == base[j] &&
        std::any_of(it->contributors.begin(), it->contributors.end(),
                    [](const SpectralTerm &t) { return t.basic; });
    if (present)
      return std::nullopt;
    Inputs in = basic.describe(j);
    return mismatch(std::move(in), "basic value " + str(base[j]), "absent",
                    "base eigenvalue missing from the enumerated spectrum");
  };

  // (b) every value is k(k+N-2) +- j(j+2d-2) s^2. Since lambda = a + b/t^2 with
  // b = J, the fibre part J/t^2 <= cutoff bounds the search: J <= cutoff t^2.
  const Rational j_window = cutoff * params.t_squared;
  Phase sums;
  sums.count = spectrum.entries.size();
  sums.describe = [&, common](std::size_t i) {
    Inputs in = common;
    in["value"] = str(spectrum.entries[i].value);
    return in;
  };
  sums.check = [&](std::size_t i) -> std::optional<Counterexample> {
    const Rational &value = spectrum.entries[i].value;
    for (std::int64_t j = 0;; ++j) {
      const std::int64_t J = j * (j + 2 * d - 2);
      if (as_rational(J) > j_window)
        break;
      const Rational K = projective ? Rational(value - as_rational(J) * slope_squared)
                                    : Rational(value + as_rational(J) * slope_squared);
      if (K.get_den() != 1)
        continue;
      if (round_degree(K.get_num(), N))
        return std::nullopt;
    }
    return mismatch(sums.describe(i), "k(k+N-2) " + std::string(projective ? "+" : "-") +
                                          " j(j+2d-2) s^2",
                    "no (k, j) in window", "value not in the Minkowski combination");
  };

  return run_phases("minkowski_inclusions[" + ambient.name() + "]", grid, {basic, sums});
}

CheckReport check_oracles(const SphereModel &model, std::int64_t p_max, std::int64_t q_max,
                          const std::vector<Rational> &t_samples, const FormulaHooks &hooks)
{
  const Grid grid = degree_ordered_grid(p_max, q_max);
  Phase phase{grid.size(), {}, describe_grid(model, grid)};
  phase.check = [model, grid, t_samples, hooks](std::size_t i) -> std::optional<Counterexample> {
    const auto [p, q] = grid[i];
    const Integer weyl = oracle_multiplicity(model, p, q);
    const Integer m = multiplicity(model, p, q, hooks);
    if (weyl != m)
      return mismatch(pq_inputs(model, p, q), str(weyl), str(m),
                      "Weyl-dimension multiplicity differs from the closed form");
    const auto [a, b] = eigen_coefficients(model, p, q);
    for (const auto &t2 : t_samples) {
      const Rational casimir = oracle_eigenvalue(model, p, q, t2);
      const Rational closed = evaluate_term(a, b, t2);
      if (casimir != closed) {
        Inputs in = pq_inputs(model, p, q);
        in["t2"] = str(t2);
        return mismatch(std::move(in), str(casimir), str(closed),
                        "Casimir eigenvalue differs from a + b/t^2");
      }
    }
    return std::nullopt;
  };
  std::string samples;
  for (const auto &t2 : t_samples)
    samples += (samples.empty() ? "" : ",") + str(t2);
  return run_phases("oracles[" + model_label(model) + "]",
                    grid_label(model, p_max, q_max) + ", t^2 in {" + samples + "}", {phase});
}

CheckReport check_jacobi(const AmbientSpace &ambient, const std::vector<Rational> &slopes,
                         std::int64_t bound, std::int64_t resonances, const FormulaHooks &hooks)
{
  const SphereModel &model = ambient.model;
  const bool projective = ambient.sign == CurvatureSign::Projective;
  const std::int64_t N = model.N();
  const std::int64_t d = model.d();
  const std::int64_t n = model.n();
  const Inputs common = ambient_inputs(ambient);

  Phase kernel;
  kernel.count = 1;
  kernel.describe = [common](std::size_t) { return common; };
  kernel.check = [&](std::size_t) -> std::optional<Counterexample> {
    const JacobiTerm term = jacobi_term(ambient, 0, 1);
    if (term.A != 0 || term.B != 0)
      return mismatch(common, "A=0,B=0", "A=" + str(term.A) + ",B=" + str(term.B),
                      "(0,1) branch is not identically zero");
    const Integer m = multiplicity(model, 0, 1, hooks);
    if (m != N)
      return mismatch(common, str(N), str(m), "m_{0,1} differs from N");
    return std::nullopt;
  };

  // Positivity: every branch other than (0,1) and (p,0) is bounded below on
  // the whole slope range; (p,0) branches decrease through s^2_p (projective).
  Grid grid = degree_ordered_grid(bound, bound);
  grid.erase(grid.begin()); // (0, 0)
  Phase bounds;
  bounds.count = grid.size();
  bounds.describe = [model, grid, common](std::size_t i) {
    Inputs in = pq_inputs(model, grid[i].first, grid[i].second);
    in.insert(common.begin(), common.end());
    return in;
  };
  bounds.check = [&, grid](std::size_t i) -> std::optional<Counterexample> {
    const auto [p, q] = grid[i];
    const JacobiTerm t = jacobi_term(ambient, p, q);
    auto fail = [&](std::string expected, std::string detail) {
      return mismatch(bounds.describe(i), std::move(expected),
                      "A=" + str(t.A) + ",B=" + str(t.B), std::move(detail));
    };
    if (projective) {
      if (q == 0) {
        if (t.B >= 0 || Rational(as_rational(t.A) / as_rational(-t.B)) != resonant_slope(model, p))
          return fail("B<0, root s^2_p", "(p,0) branch does not cross zero at s^2_p");
      } else if (q == 1) {
        if (t.B != 0 || t.A < 0)
          return fail("B=0, A>=0", "q=1 branch is not a nonnegative constant");
      } else if (p == 0) {
        if (t.B < 0 || t.A < N + 1)
          return fail("B>=0, A>=N+1", "(0,q) branch below N+1");
      } else if (t.B < 0 || t.A < 2 * N + 4) {
        return fail("B>=0, A>=2N+4", "(p,q) branch below 2N+4");
      }
    } else {
      const std::int64_t low = std::min(t.A, t.A + t.B);
      if (q == 0) {
        if (t.B <= 0 || t.A < N + 1)
          return fail("B>0, A>=N+1", "(p,0) branch not increasing from N+1");
      } else if (q == 1) {
        if (t.B != 0 || t.A < 0)
          return fail("B=0, A>=0", "q=1 branch is not a nonnegative constant");
      } else if (p == 0) {
        if (low < 2 * d * n)
          return fail("min(A, A+B)>=2dn", "(0,q) branch below 2dn on [0,1]");
      } else if (low < N + 1) {
        return fail("min(A, A+B)>=N+1", "(p,q) branch below N+1 on [0,1]");
      }
    }
    return std::nullopt;
  };

  Phase counts;
  counts.count = slopes.size();
  counts.describe = [&, common](std::size_t i) {
    Inputs in = common;
    in["s2"] = str(slopes[i]);
    return in;
  };
  counts.check = [&](std::size_t i) -> std::optional<Counterexample> {
    const Rational &s2 = slopes[i];
    const JacobiCount brute = brute_force_jacobi_count(ambient, s2);
    const Integer index = morse_index(ambient, s2);
    if (index != brute.negative)
      return mismatch(counts.describe(i), "brute force " + str(brute.negative),
                      "closed form " + str(index), "Morse index disagrees");
    const Integer kernel = kernel_dimension(ambient, s2);
    if (kernel != brute.zero)
      return mismatch(counts.describe(i), "brute force " + str(brute.zero),
                      "closed form " + str(kernel), "kernel dimension disagrees");
    if (!resonant_index(ambient, s2) && kernel != N)
      return mismatch(counts.describe(i), str(N), str(kernel),
                      "kernel exceeds N off the resonant set");
    if (!projective && index != 0)
      return mismatch(counts.describe(i), "0", str(index), "hyperbolic sphere unstable");
    return std::nullopt;
  };

  // Index jump across each resonant slope; neighbouring slopes are at least
  // 2N/(2d-1) > 1 apart, so +-1/1000 stays between them.
  Phase jumps;
  jumps.count = projective ? static_cast<std::size_t>(std::max<std::int64_t>(resonances, 0)) : 0;
  jumps.describe = [&, common](std::size_t i) {
    Inputs in = common;
    in["p"] = str(static_cast<std::int64_t>(i) + 1);
    return in;
  };
  jumps.check = [&](std::size_t i) -> std::optional<Counterexample> {
    const auto p = static_cast<std::int64_t>(i) + 1;
    const Rational s2 = resonant_slope(model, p);
    const Rational eps = make_rational(1, 1000);
    const Rational below = s2 - eps;
    const Rational above = s2 + eps;
    const Integer jump = brute_force_jacobi_count(ambient, above).negative -
                         brute_force_jacobi_count(ambient, below).negative;
    const Integer expected = multiplicity(model, p, 0, hooks);
    if (jump != expected)
      return mismatch(jumps.describe(i), str(expected), str(jump),
                      "Morse index jump across s^2_p differs from m_{p,0}");
    if (morse_index(ambient, s2) != morse_index(ambient, below))
      return mismatch(jumps.describe(i), str(morse_index(ambient, below)),
                      str(morse_index(ambient, s2)), "index changes before the crossing");
    if (p == 1 && morse_index(ambient, below) != 0)
      return mismatch(jumps.describe(i), "0", str(morse_index(ambient, below)),
                      "index nonzero below s^2_1");
    return std::nullopt;
  };

  return run_phases("jacobi[" + ambient.name() + "]",
                    ambient.name() + ", (p,q)<=" + str(bound) + ", " + str(
                        static_cast<std::int64_t>(slopes.size())) + " slopes, " +
                        str(projective ? resonances : 0) + " resonances",
                    {kernel, bounds, counts, jumps});
}

CheckReport check_float_geometry(const AmbientSpace &ambient, std::size_t points,
                                 double tolerance)
{
  const bool projective = ambient.sign == CurvatureSign::Projective;
  const double top = projective ? std::numbers::pi / 2 : 5.0;
  const SphereModel &model = ambient.model;
  const double N = model.N();
  const double fibre = 2 * model.d() - 1;
  const Inputs common = ambient_inputs(ambient);
  auto radius = [=](std::size_t i) { return (static_cast<double>(i) + 0.5) / points * top; };

  static constexpr std::pair<std::int64_t, std::int64_t> branches[] = {
      {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {2, 3}, {5, 4}};

  Phase phase;
  phase.count = points;
  phase.describe = [=](std::size_t i) {
    Inputs in = common;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", radius(i));
    in["r"] = buf;
    return in;
  };
  phase.check = [&](std::size_t i) -> std::optional<Counterexample> {
    const double r = radius(i);
    auto close = [&](double x, double y, double scale) {
      return std::abs(x - y) <= tolerance * std::max({std::abs(x), std::abs(y), scale});
    };
    auto fail = [&](double expected, double actual, std::string detail) {
      char e[32], a[32];
      std::snprintf(e, sizeof e, "%.17g", expected);
      std::snprintf(a, sizeof a, "%.17g", actual);
      return mismatch(phase.describe(i), e, a, std::move(detail));
    };

    double sum_sq = 0;
    double sum = 0;
    for (const auto &e : shape_eigenvalues(ambient, r)) {
      sum_sq += e.multiplicity * e.value * e.value;
      sum += e.multiplicity * e.value;
    }
    const double norm = second_fundamental_norm_sq(ambient, r);
    if (!close(norm, sum_sq, 1.0))
      return fail(sum_sq, norm, "|A|^2 differs from the weighted sum of squared curvatures");
    const double H = mean_curvature(ambient, r);
    if (!close(H, sum, 1.0))
      return fail(sum, H, "H differs from the trace of the shape operator");
    const double V = potential(ambient, r);
    if (!close(V, ricci_constant(ambient) + norm, 1.0))
      return fail(ricci_constant(ambient) + norm, V, "V differs from Ric + |A|^2");

    const double c = projective ? std::cos(r) : std::cosh(r);
    const double sn = projective ? std::sin(r) : std::sinh(r);
    const double s2 = slope_squared_of(ambient, r);
    const double alpha2V = sn * sn * V;
    const double affine = projective ? (N - 1) + fibre * s2 : (N - 1) - fibre * s2;
    if (!close(alpha2V, affine, 1.0))
      return fail(affine, alpha2V, "alpha^2 V differs from (N-1) +- (2d-1) s^2");

    for (const auto &[p, q] : branches) {
      const JacobiTerm t = jacobi_term(ambient, p, q);
      const auto [a, b] = eigen_coefficients(model, p, q);
      const double lambda = a + b / (c * c);
      const double mu = lambda - alpha2V;
      const double exact_form = t.A + t.B * s2;
      if (!close(mu, exact_form, std::max({std::abs(lambda), std::abs(alpha2V), 1.0})))
        return fail(exact_form, mu, "float Jacobi value differs from A + B s^2 at (p,q)=(" +
                                        str(p) + "," + str(q) + ")");
    }

    if (i + 1 < points && !(mean_curvature(ambient, radius(i + 1)) < H))
      return fail(H, mean_curvature(ambient, radius(i + 1)), "H not strictly decreasing");
    return std::nullopt;
  };
  char grid[96];
  std::snprintf(grid, sizeof grid, "%s, %zu radii in (0, %.6g)", ambient.name().c_str(), points,
                top);
  return run_phases("float_geometry[" + ambient.name() + "]", grid, {phase});
}

std::vector<Rational> jacobi_slope_grid(const AmbientSpace &ambient, std::int64_t count,
                                        std::size_t random_count)
{
  std::vector<Rational> out{make_rational(1, 2)};
  if (ambient.sign == CurvatureSign::Projective) {
    const Rational eps = make_rational(1, 1000);
    for (const auto &s2 : resonant_slopes(ambient, count)) {
      out.push_back(s2 - eps);
      out.push_back(s2);
      out.push_back(s2 + eps);
    }
    return out;
  }
  std::mt19937_64 rng(0x5eed0001u + static_cast<unsigned>(ambient.model.N()));
  std::uniform_int_distribution<std::int64_t> den_dist(2, 1'000'000);
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::int64_t den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(1, den - 1);
    out.push_back(make_rational(num_dist(rng), den));
  }
  return out;
}

const std::vector<std::string> &check_names()
{
  static const std::vector<std::string> names{
      "round_sphere", "unified_vs_table", "parametrized_identity", "minkowski_inclusions",
      "oracles",      "jacobi",           "float_geometry"};
  return names;
}

std::vector<CheckReport> run_all(const RunOptions &options)
{
  const auto &names = check_names();
  if (options.only && std::find(names.begin(), names.end(), *options.only) == names.end())
    throw std::invalid_argument("unknown check name: " + *options.only);
  auto wanted = [&](const std::string &name) { return !options.only || *options.only == name; };

  const bool full = options.profile == Profile::Full;
  const auto models = models_up_to(4);
  std::vector<AmbientSpace> ambients;
  for (const auto &m : models)
    for (auto sign : {CurvatureSign::Projective, CurvatureSign::Hyperbolic})
      ambients.push_back({m, sign});

  std::vector<CheckReport> reports;
  if (wanted("round_sphere"))
    for (const auto &m : models)
      reports.push_back(check_round_sphere(m, full ? 60 : 30, options.hooks));
  if (wanted("unified_vs_table"))
    for (const auto &m : models_up_to(full ? 8 : 4))
      reports.push_back(check_unified_vs_table(m, full ? 100 : 30, full ? 100 : 30, options.hooks));
  if (wanted("parametrized_identity"))
    for (const auto &m : models_up_to(full ? 8 : 4))
      reports.push_back(check_parametrized_identity(m, full ? 100 : 30, full ? 100 : 30));
  if (wanted("minkowski_inclusions"))
    for (const auto &a : ambients)
      reports.push_back(check_minkowski_inclusions(
          a, a.sign == CurvatureSign::Projective ? Rational(1) : make_rational(1, 2),
          Rational(full ? 200 : 100)));
  if (wanted("oracles")) {
    std::vector<Rational> samples{Rational(1), make_rational(1, 2), Rational(2)};
    if (full) {
      samples.push_back(make_rational(1, 4));
      samples.push_back(make_rational(9, 4));
    }
    for (const auto &m : models)
      reports.push_back(check_oracles(m, full ? 60 : 30, full ? 60 : 30, samples, options.hooks));
  }
  if (wanted("jacobi"))
    for (const auto &a : ambients)
      reports.push_back(check_jacobi(a, jacobi_slope_grid(a, 10), full ? 100 : 30, 10,
                                     options.hooks));
  if (wanted("float_geometry"))
    for (const auto &a : ambients)
      reports.push_back(check_float_geometry(a));
  return reports;
}

bool all_passed(const std::vector<CheckReport> &reports)
{
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport &r) { return r.passed; });
}

namespace mutants {

Integer chi_off_by_one(int d, std::int64_t q)
{
  if (d == 1)
    return Integer(q >= 2 ? 2 : 1);
  const Rational factor = Rational(1) + make_rational(q, d - 1);
  return require_integer(factor * to_rational(binomial(q + 2 * d - 2, q)), "mutant chi");
}

Integer binomial_off_by_one(std::int64_t a, std::int64_t b)
{
  if (b < 0 || a <= b)
    return Integer(0);
  return binomial(a, b);
}

FormulaHooks hooks(std::string_view name)
{
  FormulaHooks h;
  if (name == "chi")
    h.chi = &chi_off_by_one;
  else if (name == "binomial")
    h.binomial = &binomial_off_by_one;
  else
    throw std::invalid_argument("unknown mutant: " + std::string(name));
  return h;
}

} // namespace mutants

} // namespace rankone::verify
