#include "rankone/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rankone {

namespace {

bool projective(const AmbientSpace &ambient) { return ambient.sign == CurvatureSign::Projective; }

Rational as_rational(std::int64_t v) { return Rational(Integer(static_cast<long>(v))); }

} // namespace

std::string AmbientSpace::name() const
{
  const char kind = projective(*this) ? 'P' : 'H';
  return model.algebra().symbol() + kind + "^" + std::to_string(model.n() + 1);
}

void require_legal_slope(const AmbientSpace &ambient, const Rational &slope_squared)
{
  if (sgn(slope_squared) <= 0)
    throw DomainError("slope s^2 must be positive (s^2 = 0 is the degenerate radius r = 0), got " +
                      to_exact_string(slope_squared));
  if (!projective(ambient) && slope_squared >= 1)
    throw DomainError("hyperbolic slope tanh^2 r must lie in (0, 1), got " +
                      to_exact_string(slope_squared));
}

void require_legal_radius(const AmbientSpace &ambient, double radius)
{
  const bool ok = projective(ambient) ? (radius > 0 && radius < std::numbers::pi / 2)
                                      : (radius > 0 && std::isfinite(radius));
  if (!ok)
    throw DomainError(projective(ambient) ? "projective radius must lie in (0, pi/2)"
                                          : "hyperbolic radius must be positive and finite");
}

RadiusParams radius_params(const AmbientSpace &ambient, const Rational &slope_squared)
{
  require_legal_slope(ambient, slope_squared);
  const Rational one(1);
  RadiusParams out;
  out.inv_t_squared = projective(ambient) ? Rational(one + slope_squared) : Rational(one - slope_squared);
  out.t_squared = one / out.inv_t_squared;
  out.alpha_squared = slope_squared * out.t_squared;
  return out;
}

RadiusParams radius_params(const AmbientSpace &ambient, const RadiusSpec &radius)
{
  return radius_params(ambient, radius.slope_squared);
}

double slope_squared_of(const AmbientSpace &ambient, double radius)
{
  require_legal_radius(ambient, radius);
  const double s = projective(ambient) ? std::tan(radius) : std::tanh(radius);
  return s * s;
}

double radius_of(const AmbientSpace &ambient, double slope_squared)
{
  const double s = std::sqrt(slope_squared);
  return projective(ambient) ? std::atan(s) : std::atanh(s);
}

std::vector<ShapeEigenvalue> shape_eigenvalues(const AmbientSpace &ambient, double radius)
{
  require_legal_radius(ambient, radius);
  const int d = ambient.model.d();
  const int n = ambient.model.n();
  if (projective(ambient))
    return {{2.0 / std::tan(2 * radius), 2 * d - 1}, {1.0 / std::tan(radius), 2 * d * n}};
  return {{2.0 / std::tanh(2 * radius), 2 * d - 1}, {1.0 / std::tanh(radius), 2 * d * n}};
}

double mean_curvature(const AmbientSpace &ambient, double radius)
{
  require_legal_radius(ambient, radius);
  const double N = ambient.model.N();
  const double fibre = 2 * ambient.model.d() - 1;
  if (projective(ambient))
    return (N - 1) / std::tan(radius) - fibre * std::tan(radius);
  return (N - 1) / std::tanh(radius) + fibre * std::tanh(radius);
}

double second_fundamental_norm_sq(const AmbientSpace &ambient, double radius)
{
  require_legal_radius(ambient, radius);
  const double d = ambient.model.d();
  const double n = ambient.model.n();
  const double c1 = projective(ambient) ? 1.0 / std::tan(radius) : 1.0 / std::tanh(radius);
  const double c2 = projective(ambient) ? 1.0 / std::tan(2 * radius) : 1.0 / std::tanh(2 * radius);
  return 2 * d * n * c1 * c1 + 4 * (2 * d - 1) * c2 * c2;
}

int ricci_constant(const AmbientSpace &ambient)
{
  const int d = ambient.model.d();
  const int n = ambient.model.n();
  const int value = 2 * d * n + 4 * (2 * d - 1);
  return projective(ambient) ? value : -value;
}

double potential(const AmbientSpace &ambient, double radius)
{
  require_legal_radius(ambient, radius);
  const double N = ambient.model.N();
  const double fibre = 2 * ambient.model.d() - 1;
  if (projective(ambient)) {
    const double csc = 1.0 / std::sin(radius);
    const double sec = 1.0 / std::cos(radius);
    return (N - 1) * csc * csc + fibre * sec * sec;
  }
  const double csch = 1.0 / std::sinh(radius);
  const double sech = 1.0 / std::cosh(radius);
  return (N - 1) * csch * csch - fibre * sech * sech;
}

Rational scaled_potential(const AmbientSpace &ambient, const Rational &slope_squared)
{
  require_legal_slope(ambient, slope_squared);
  const Rational shift = as_rational(2 * ambient.model.d() - 1) * slope_squared;
  const Rational base = as_rational(ambient.model.N() - 1);
  return projective(ambient) ? Rational(base + shift) : Rational(base - shift);
}

Rational JacobiTerm::value_at(const Rational &slope_squared) const
{
  return as_rational(A) + as_rational(B) * slope_squared;
}

JacobiTerm jacobi_term(const AmbientSpace &ambient, std::int64_t p, std::int64_t q)
{
  if (p == 0 && q == 0)
    throw DomainError("(p, q) = (0, 0) is excluded: the Jacobi operator acts on mean-zero "
                      "functions");
  const auto [a, b] = eigen_coefficients(ambient.model, p, q);
  const std::int64_t N = ambient.model.N();
  const std::int64_t fibre = 2 * ambient.model.d() - 1;
  JacobiTerm out;
  out.p = p;
  out.q = q;
  out.A = a + b - (N - 1);
  out.B = projective(ambient) ? b - fibre : fibre - b;
  out.multiplicity = multiplicity(ambient.model, p, q);
  return out;
}

Rational resonant_slope(const SphereModel &model, std::int64_t p)
{
  const std::int64_t N = model.N();
  return make_rational(4 * p * (p - 1) + N * (2 * p - 1) + 1, 2 * model.d() - 1);
}

std::vector<Rational> resonant_slopes(const AmbientSpace &ambient, std::int64_t count)
{
  std::vector<Rational> out;
  if (!projective(ambient))
    return out;
  for (std::int64_t p = 1; p <= count; ++p)
    out.push_back(resonant_slope(ambient.model, p));
  return out;
}

Integer morse_index(const AmbientSpace &ambient, const Rational &slope_squared)
{
  require_legal_slope(ambient, slope_squared);
  Integer index(0);
  if (!projective(ambient))
    return index;
  for (std::int64_t p = 1; resonant_slope(ambient.model, p) < slope_squared; ++p)
    index += multiplicity(ambient.model, p, 0);
  return index;
}

std::optional<std::int64_t> resonant_index(const AmbientSpace &ambient,
                                           const Rational &slope_squared)
{
  require_legal_slope(ambient, slope_squared);
  if (!projective(ambient))
    return std::nullopt;
  for (std::int64_t p = 1;; ++p) {
    const Rational s = resonant_slope(ambient.model, p);
    if (s == slope_squared)
      return p;
    if (s > slope_squared)
      return std::nullopt;
  }
}

Integer kernel_dimension(const AmbientSpace &ambient, const Rational &slope_squared)
{
  Integer dim(ambient.model.N());
  if (auto p = resonant_index(ambient, slope_squared))
    dim += multiplicity(ambient.model, *p, 0);
  return dim;
}

JacobiCount brute_force_jacobi_count(const AmbientSpace &ambient, const Rational &slope_squared)
{
  const RadiusParams params = radius_params(ambient, slope_squared);
  const Rational shift = scaled_potential(ambient, slope_squared);
  // Branches above alpha^2 V are positive, so the window [0, alpha^2 V]
  // holds every nonpositive one.
  const MergedSpectrum spectrum = enumerate_spectrum(ambient.model, params.t_squared, shift);

  JacobiCount out{Integer(0), Integer(0)};
  for (const auto &entry : spectrum.entries) {
    const int sign = sgn(Rational(entry.value - shift));
    for (const auto &term : entry.contributors) {
      if (term.p == 0 && term.q == 0)
        continue;
      if (sign < 0)
        out.negative += term.multiplicity;
      else if (sign == 0)
        out.zero += term.multiplicity;
    }
  }
  return out;
}

std::vector<JacobiTerm> lowest_jacobi_terms(const AmbientSpace &ambient,
                                            const Rational &slope_squared, std::size_t count)
{
  const RadiusParams params = radius_params(ambient, slope_squared);
  Rational cutoff = scaled_potential(ambient, slope_squared) + 1;
  std::vector<JacobiTerm> out;
  if (count == 0)
    return out;
  for (;;) {
    const MergedSpectrum spectrum = enumerate_spectrum(ambient.model, params.t_squared, cutoff);
    if (spectrum.term_count() > count) { // (0, 0) is always present
      for (const auto &entry : spectrum.entries)
        for (const auto &term : entry.contributors) {
          if (term.p == 0 && term.q == 0)
            continue;
          if (out.size() == count)
            return out;
          out.push_back(jacobi_term(ambient, term.p, term.q));
        }
      return out;
    }
    cutoff *= 2;
  }
}

JacobiReport classify(const AmbientSpace &ambient, const Rational &slope_squared)
{
  require_legal_slope(ambient, slope_squared);
  JacobiReport report{ambient, {slope_squared, radius_of(ambient, to_double(slope_squared))},
                      {}, morse_index(ambient, slope_squared),
                      kernel_dimension(ambient, slope_squared), false, false, false, false, {}};

  if (projective(ambient)) {
    for (std::int64_t p = 1; resonant_slope(ambient.model, p) < slope_squared; ++p) {
      JacobiTerm term = jacobi_term(ambient, p, 0);
      Rational value = term.value_at(slope_squared);
      report.negative_terms.push_back({std::move(term), std::move(value)});
    }
  }

  const Integer N(ambient.model.N());
  const auto hit = resonant_index(ambient, slope_squared);
  report.stable = report.morse_index == 0;
  report.degenerate_beyond_killing = report.kernel_dimension > N;
  report.resonant = hit.has_value();
  report.boundary_case = hit.has_value();

  report.notes.push_back("(p,q)=(0,0) excluded: the second variation acts on mean-zero functions");
  report.notes.push_back("(p,q)=(0,1) spans the N-dimensional Killing-field kernel");
  if (hit) {
    report.notes.push_back("s^2 equals the resonant slope s^2_" + std::to_string(*hit) +
                           ": the Morse index jumps by m_{" + std::to_string(*hit) +
                           ",0} across it with equivariantly nondegenerate neighbours, so the "
                           "radius is resonant");
    report.notes.push_back("boundary case: the crossing branch is zero and is not counted as "
                           "negative; the sphere is degenerate here");
  } else {
    report.notes.push_back("kernel equals the Killing-field kernel (dimension N): equivariantly "
                           "nondegenerate, hence locally rigid and non-resonant");
  }
  return report;
}

} // namespace rankone
