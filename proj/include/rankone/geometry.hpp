#pragma once

// Distance spheres S(r) in KP^{n+1} (1 <= sec <= 4) and KH^{n+1}
// (-4 <= sec <= -1): curvature data, the Jacobi spectrum, Morse index and
// resonance.
//
// The exact radius coordinate is the slope s^2 = tan^2 r (projective) or
// tanh^2 r (hyperbolic). Every stability quantity is affine in s^2, so all
// verdicts are decided in exact arithmetic; trigonometric evaluations are
// display and cross-check only.

#include "rankone/exact.hpp"
#include "rankone/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankone {

enum class CurvatureSign { Projective, Hyperbolic };

struct AmbientSpace {
  SphereModel model;
  CurvatureSign sign;

  /// "CP^2", "HH^3", "CaP^2", ...
  std::string name() const;
};

struct RadiusSpec {
  Rational slope_squared;
  std::optional<double> float_radius;
};

struct RadiusParams {
  Rational t_squared;
  Rational alpha_squared;
  Rational inv_t_squared;
};

/// Throws DomainError unless s^2 > 0 (and s^2 < 1 for hyperbolic ambients).
void require_legal_slope(const AmbientSpace &ambient, const Rational &slope_squared);

/// Throws DomainError unless 0 < r < pi/2 (projective) or r > 0 (hyperbolic).
void require_legal_radius(const AmbientSpace &ambient, double radius);

/// Projective: 1/t^2 = 1 + s^2, alpha^2 = s^2/(1+s^2).
/// Hyperbolic: 1/t^2 = 1 - s^2, alpha^2 = s^2/(1-s^2).
RadiusParams radius_params(const AmbientSpace &ambient, const Rational &slope_squared);
RadiusParams radius_params(const AmbientSpace &ambient, const RadiusSpec &radius);

/// tan^2 r or tanh^2 r.
double slope_squared_of(const AmbientSpace &ambient, double radius);
/// Inverse of slope_squared_of.
double radius_of(const AmbientSpace &ambient, double slope_squared);

struct ShapeEigenvalue {
  double value;
  int multiplicity;
};

/// Principal curvatures w.r.t. the outward normal: 2cot(2r) (x 2d-1) and
/// cot(r) (x 2dn), with coth in the hyperbolic case.
std::vector<ShapeEigenvalue> shape_eigenvalues(const AmbientSpace &ambient, double radius);

double mean_curvature(const AmbientSpace &ambient, double radius);
double second_fundamental_norm_sq(const AmbientSpace &ambient, double radius);
/// Einstein constant: +-(2dn + 4(2d-1)).
int ricci_constant(const AmbientSpace &ambient);
/// V(r) = Ric(n) + |A_r|^2, the constant shift in J_r = Delta_r - V(r).
double potential(const AmbientSpace &ambient, double radius);

/// alpha^2 V(r) = (N-1) +- (2d-1) s^2, exactly.
Rational scaled_potential(const AmbientSpace &ambient, const Rational &slope_squared);

/// One branch of the scaled Jacobi operator alpha^2 J_r:
/// mu_{p,q}(s^2) = lambda^{(p,q)}(t) - alpha^2 V(r) = A + B s^2.
struct JacobiTerm {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t A = 0;
  std::int64_t B = 0;
  Integer multiplicity;

  Rational value_at(const Rational &slope_squared) const;
};

/// Throws DomainError for (p, q) = (0, 0): the second variation acts on
/// mean-zero functions.
JacobiTerm jacobi_term(const AmbientSpace &ambient, std::int64_t p, std::int64_t q);

/// s^2_p = (4p(p-1) + N(2p-1) + 1) / (2d-1), the root of the (p, 0) branch.
Rational resonant_slope(const SphereModel &model, std::int64_t p);

/// s^2_1 .. s^2_count for projective ambients; empty for hyperbolic ones.
std::vector<Rational> resonant_slopes(const AmbientSpace &ambient, std::int64_t count);

/// Closed form: sum of m_{p,0} over p >= 1 with s^2_p < s^2 (projective), 0
/// (hyperbolic).
Integer morse_index(const AmbientSpace &ambient, const Rational &slope_squared);

/// N, plus m_{p,0} when s^2 hits a resonant slope exactly.
Integer kernel_dimension(const AmbientSpace &ambient, const Rational &slope_squared);

/// Index of the resonant slope equal to s^2, if any.
std::optional<std::int64_t> resonant_index(const AmbientSpace &ambient,
                                           const Rational &slope_squared);

struct JacobiCount {
  Integer negative;
  Integer zero;
};

/// Counts negative and zero Jacobi eigenvalues by enumerating the Laplace
/// spectrum of g(t) up to alpha^2 V and evaluating lambda - alpha^2 V
/// directly. Independent of the closed forms above.
JacobiCount brute_force_jacobi_count(const AmbientSpace &ambient, const Rational &slope_squared);

/// The `count` lowest Jacobi branches at s^2 (excluding (0, 0)), by value.
std::vector<JacobiTerm> lowest_jacobi_terms(const AmbientSpace &ambient,
                                            const Rational &slope_squared, std::size_t count);

struct NegativeBranch {
  JacobiTerm term;
  Rational value;
};

struct JacobiReport {
  AmbientSpace ambient;
  RadiusSpec radius;
  std::vector<NegativeBranch> negative_terms;
  Integer morse_index;
  Integer kernel_dimension;
  bool stable = false;
  bool degenerate_beyond_killing = false;
  bool resonant = false;
  /// Exactly on a resonant slope: index counted by strict negativity.
  bool boundary_case = false;
  std::vector<std::string> notes;
};

JacobiReport classify(const AmbientSpace &ambient, const Rational &slope_squared);

} // namespace rankone
