#include "rankone/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iterator>
#include <map>
#include <sstream>
#include <utility>

namespace rankone {

DivisionAlgebra DivisionAlgebra::of(Field tag)
{
  switch (tag) {
  case Field::Complex:
    return {tag, 1};
  case Field::Quaternion:
    return {tag, 2};
  case Field::Octonion:
    return {tag, 4};
  }
  throw DomainError("unknown division algebra");
}

char DivisionAlgebra::letter() const
{
  switch (tag) {
  case Field::Complex:
    return 'c';
  case Field::Quaternion:
    return 'h';
  case Field::Octonion:
    return 'o';
  }
  return '?';
}

std::string DivisionAlgebra::symbol() const
{
  switch (tag) {
  case Field::Complex:
    return "C";
  case Field::Quaternion:
    return "H";
  case Field::Octonion:
    return "Ca";
  }
  return "?";
}

SphereModel::SphereModel(Field field, int n) : algebra_(DivisionAlgebra::of(field)), n_(n)
{
  if (n < 1)
    throw DomainError("base projective index n must be >= 1, got " + std::to_string(n));
  if (field == Field::Octonion && n != 1)
    throw DomainError("the octonionic fibration exists only for n = 1, got " +
                      std::to_string(n));
}

std::string SphereModel::base_name() const
{
  if (field() == Field::Octonion)
    return "S^8(1/2)";
  return algebra_.symbol() + "P^" + std::to_string(n_);
}

std::string SphereModel::sphere_name() const { return "S^" + std::to_string(sphere_dim()); }

std::vector<SphereModel> models_up_to(int max_n)
{
  std::vector<SphereModel> out;
  for (Field f : {Field::Complex, Field::Quaternion})
    for (int n = 1; n <= max_n; ++n)
      out.emplace_back(f, n);
  out.emplace_back(Field::Octonion, 1);
  return out;
}

Coefficients eigen_coefficients(const SphereModel &model, std::int64_t p, std::int64_t q)
{
  const std::int64_t d = model.d();
  const std::int64_t n = model.n();
  return {4 * p * (p + q + d * (n + 1) - 1) + 2 * d * n * q, q * (q + 2 * d - 2)};
}

Integer chi(int d, std::int64_t q)
{
  if (d != 1 && d != 2 && d != 4)
    throw DomainError("chi is defined for d in {1, 2, 4}, got " + std::to_string(d));
  if (d == 1)
    return Integer(q == 0 ? 1 : 2);
  Rational value = (1 + make_rational(q, d - 1)) * Rational(binomial(q + 2 * d - 3, q));
  return require_integer(value, "chi(d, q)");
}

Integer multiplicity(const SphereModel &model, std::int64_t p, std::int64_t q,
                     const FormulaHooks &hooks)
{
  const std::int64_t d = model.d();
  const std::int64_t n = model.n();
  const std::int64_t D = d * (n + 1); // N / 2

  const Integer fibre_den = hooks.binomial(p + q + d - 1, p + q);
  if (fibre_den == 0) {
    std::ostringstream msg;
    msg << "multiplicity(" << p << "," << q << "): vanishing denominator C(" << p + q + d - 1
        << "," << p + q << ")";
    throw IntegralityError(msg.str());
  }
  Rational value = make_rational(2 * p + q + D - 1, D - 1);
  value *= Rational(hooks.binomial(p + q + D - 2, p + q) * hooks.binomial(p + d * n - 1, p));
  value /= Rational(fibre_den);
  value *= Rational(hooks.chi(static_cast<int>(d), q));

  Integer m = require_integer(value, "multiplicity");
  if (m <= 0)
    throw IntegralityError("multiplicity is not positive: " + m.get_str());
  return m;
}

TableRow table_formulas(const SphereModel &model, std::int64_t p, std::int64_t q)
{
  const std::int64_t n = model.n();
  TableRow row;
  Rational m;
  switch (model.field()) {
  case Field::Complex: {
    // S^{2n+1} over CP^n
    row.a = 4 * p * (p + q + n) + 2 * n * q;
    row.b = q * q;
    m = Rational(q == 0 ? 1 : 2) * make_rational(2 * p + q + n, n) *
        Rational(binomial(p + q + n - 1, p + q) * binomial(p + n - 1, p));
    break;
  }
  case Field::Quaternion: {
    // S^{4n+3} over HP^n
    row.a = 4 * p * (p + q + 2 * n + 1) + 4 * n * q;
    row.b = q * (q + 2);
    m = make_rational((2 * p + q + 2 * n + 1) * (q + 1) * (q + 1), (2 * n + 1) * (p + q + 1)) *
        Rational(binomial(p + q + 2 * n, p + q) * binomial(p + 2 * n - 1, p));
    break;
  }
  case Field::Octonion: {
    // S^15 over S^8(1/2)
    row.a = 4 * p * (p + q + 7) + 8 * q;
    row.b = q * (q + 6);
    m = make_rational(2 * p + q + 7, 7) * make_rational(q + 3, 3) *
        Rational(binomial(p + q + 6, p + q) * binomial(p + 3, p) * binomial(q + 5, q)) /
        Rational(binomial(p + q + 3, p + q));
    break;
  }
  }
  row.multiplicity = require_integer(m, "table multiplicity");
  return row;
}

SpectralTerm make_term(const SphereModel &model, std::int64_t p, std::int64_t q,
                       const FormulaHooks &hooks)
{
  const auto [a, b] = eigen_coefficients(model, p, q);
  return {p, q, a, b, multiplicity(model, p, q, hooks), q == 0};
}

Rational evaluate_term(std::int64_t a, std::int64_t b, const Rational &t_squared)
{
  if (sgn(t_squared) <= 0)
    throw DomainError("t^2 must be positive, got " + to_exact_string(t_squared));
  Rational out = Rational(Integer(static_cast<long>(a))) +
                 Rational(Integer(static_cast<long>(b))) / t_squared;
  return out;
}

Rational evaluate_term(const SpectralTerm &term, const Rational &t_squared)
{
  return evaluate_term(term.a, term.b, t_squared);
}

Integer round_multiplicity(std::int64_t sphere_dim, std::int64_t k)
{
  return binomial(k + sphere_dim, sphere_dim) - binomial(k + sphere_dim - 2, sphere_dim);
}

std::size_t MergedSpectrum::term_count() const
{
  std::size_t count = 0;
  for (const auto &e : entries)
    count += e.contributors.size();
  return count;
}

namespace {

using ValuedTerm = std::pair<Rational, SpectralTerm>;

void check_enumeration_args(const Rational &t_squared, const Rational &cutoff)
{
  if (sgn(t_squared) <= 0)
    throw DomainError("t^2 must be positive, got " + to_exact_string(t_squared));
  if (sgn(cutoff) < 0)
    throw DomainError("cutoff must be nonnegative, got " + to_exact_string(cutoff));
}

[[noreturn]] void throw_term_limit(std::size_t limit)
{
  throw ResourceLimitError("spectrum enumeration exceeds the term limit of " +
                           std::to_string(limit) + "; lower the cutoff or raise the limit");
}

// Largest p with the basic eigenvalue a(p, 0) <= cutoff; a(p, 0) >= 4p^2 so
// the loop stops after at most sqrt(cutoff)/2 steps.
std::int64_t max_p(const SphereModel &model, const Rational &cutoff, std::size_t limit)
{
  std::int64_t p = 0;
  while (Rational(Integer(static_cast<long>(eigen_coefficients(model, p + 1, 0).a))) <= cutoff) {
    if (static_cast<std::size_t>(++p) >= limit)
      throw_term_limit(limit);
  }
  return p;
}

// Appends every (p, q) for this p with a + b/t^2 <= cutoff. The value is
// strictly increasing in q, so the loop stops at the first overshoot.
template <class Guard>
void collect_row(const SphereModel &model, std::int64_t p, const Rational &t_squared,
                 const Rational &cutoff, std::vector<ValuedTerm> &out, Guard &&guard)
{
  for (std::int64_t q = 0;; ++q) {
    const auto [a, b] = eigen_coefficients(model, p, q);
    Rational value = evaluate_term(a, b, t_squared);
    if (value > cutoff)
      return;
    if (!guard())
      return;
    out.emplace_back(std::move(value), make_term(model, p, q));
  }
}

MergedSpectrum merge(const SphereModel &model, const Rational &t_squared, const Rational &cutoff,
                     std::vector<ValuedTerm> terms)
{
  std::sort(terms.begin(), terms.end(), [](const ValuedTerm &x, const ValuedTerm &y) {
    if (int c = cmp(x.first, y.first); c != 0)
      return c < 0;
    return std::pair(x.second.p, x.second.q) < std::pair(y.second.p, y.second.q);
  });

  MergedSpectrum out{model, t_squared, cutoff, {}};
  for (auto &[value, term] : terms) {
    if (out.entries.empty() || out.entries.back().value != value)
      out.entries.push_back({value, Integer(0), {}});
    auto &entry = out.entries.back();
    entry.multiplicity += term.multiplicity;
    entry.contributors.push_back(std::move(term));
  }
  return out;
}

} // namespace

MergedSpectrum serial::enumerate_spectrum(const SphereModel &model, const Rational &t_squared,
                                          const Rational &cutoff, const EnumerationLimits &limits)
{
  check_enumeration_args(t_squared, cutoff);
  const std::int64_t p_last = max_p(model, cutoff, limits.max_terms);

  std::vector<ValuedTerm> terms;
  std::size_t count = 0;
  auto guard = [&] {
    if (++count > limits.max_terms)
      throw_term_limit(limits.max_terms);
    return true;
  };
  for (std::int64_t p = 0; p <= p_last; ++p)
    collect_row(model, p, t_squared, cutoff, terms, guard);
  return merge(model, t_squared, cutoff, std::move(terms));
}

MergedSpectrum enumerate_spectrum(const SphereModel &model, const Rational &t_squared,
                                  const Rational &cutoff, const EnumerationLimits &limits)
{
  check_enumeration_args(t_squared, cutoff);
  const std::int64_t p_last = max_p(model, cutoff, limits.max_terms);
  if (static_cast<std::size_t>(p_last) + 1 > limits.max_terms)
    throw_term_limit(limits.max_terms);

  std::vector<std::vector<ValuedTerm>> rows(static_cast<std::size_t>(p_last) + 1);
  std::atomic<std::size_t> count{0};
  std::atomic<bool> exceeded{false};
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t p = 0; p <= p_last; ++p) {
    auto guard = [&] {
      if (exceeded.load(std::memory_order_relaxed))
        return false;
      if (count.fetch_add(1, std::memory_order_relaxed) + 1 > limits.max_terms) {
        exceeded.store(true, std::memory_order_relaxed);
        return false;
      }
      return true;
    };
    try {
      collect_row(model, p, t_squared, cutoff, rows[static_cast<std::size_t>(p)], guard);
    } catch (...) {
#pragma omp critical(rankone_enumerate_failure)
      if (!failure)
        failure = std::current_exception();
      exceeded.store(true, std::memory_order_relaxed);
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  if (exceeded)
    throw_term_limit(limits.max_terms);

  std::vector<ValuedTerm> terms;
  terms.reserve(count.load());
  for (auto &row : rows)
    std::move(row.begin(), row.end(), std::back_inserter(terms));
  return merge(model, t_squared, cutoff, std::move(terms));
}

std::vector<SpectralTerm> serial::evaluate_grid(const SphereModel &model, std::int64_t p_max,
                                                std::int64_t q_max, const FormulaHooks &hooks)
{
  std::vector<SpectralTerm> out;
  out.reserve(static_cast<std::size_t>((p_max + 1) * (q_max + 1)));
  for (std::int64_t p = 0; p <= p_max; ++p)
    for (std::int64_t q = 0; q <= q_max; ++q)
      out.push_back(make_term(model, p, q, hooks));
  return out;
}

std::vector<SpectralTerm> evaluate_grid(const SphereModel &model, std::int64_t p_max,
                                        std::int64_t q_max, const FormulaHooks &hooks)
{
  const std::int64_t width = q_max + 1;
  const std::int64_t total = (p_max + 1) * width;
  std::vector<SpectralTerm> out(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i)
    out[static_cast<std::size_t>(i)] = make_term(model, i / width, i % width, hooks);
  return out;
}

FloatSpectrum enumerate_spectrum_float(const SphereModel &model, double t_squared, double cutoff,
                                       const EnumerationLimits &limits)
{
  if (!(t_squared > 0) || !std::isfinite(t_squared))
    throw DomainError("t^2 must be positive and finite");
  if (!(cutoff >= 0) || !std::isfinite(cutoff))
    throw DomainError("cutoff must be nonnegative and finite");

  // Group by (a, b): identical coefficient pairs coincide for every t.
  std::map<std::pair<std::int64_t, std::int64_t>, FloatSpectrumEntry> groups;
  std::size_t count = 0;
  for (std::int64_t p = 0; static_cast<double>(eigen_coefficients(model, p, 0).a) <= cutoff; ++p) {
    for (std::int64_t q = 0;; ++q) {
      const auto [a, b] = eigen_coefficients(model, p, q);
      const double value = static_cast<double>(a) + static_cast<double>(b) / t_squared;
      if (value > cutoff)
        break;
      if (++count > limits.max_terms)
        throw_term_limit(limits.max_terms);
      auto &entry = groups[{a, b}];
      entry.value = value;
      entry.contributors.push_back(make_term(model, p, q));
      entry.multiplicity += entry.contributors.back().multiplicity;
    }
  }

  FloatSpectrum out{model, t_squared, cutoff, {}, {}};
  for (auto &[key, entry] : groups) {
    std::sort(entry.contributors.begin(), entry.contributors.end(),
              [](const SpectralTerm &x, const SpectralTerm &y) {
                return std::pair(x.p, x.q) < std::pair(y.p, y.q);
              });
    out.entries.push_back(std::move(entry));
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const FloatSpectrumEntry &x, const FloatSpectrumEntry &y) {
              if (x.value != y.value)
                return x.value < y.value;
              const auto &cx = x.contributors.front();
              const auto &cy = y.contributors.front();
              return std::pair(cx.p, cx.q) < std::pair(cy.p, cy.q);
            });

  for (std::size_t i = 1; i < out.entries.size(); ++i) {
    const auto &lo = out.entries[i - 1];
    const auto &hi = out.entries[i];
    const double scale = std::max(std::abs(lo.value), std::abs(hi.value));
    if (hi.value - lo.value <= near_collision_gap * scale) {
      const auto &x = lo.contributors.front();
      const auto &y = hi.contributors.front();
      std::ostringstream msg;
      msg.precision(17);
      msg << "near-collision at float precision: (" << x.p << "," << x.q << ") and (" << y.p
          << "," << y.q << ") at " << lo.value << " are not merged";
      out.warnings.push_back(msg.str());
    }
  }
  return out;
}

} // namespace rankone
