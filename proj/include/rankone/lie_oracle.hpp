#pragma once

// Root-system machinery used to re-derive multiplicities and eigenvalues
// independently of the closed forms in spectra.hpp: Weyl's dimension
// formula, the Casimir scalar <L, L + 2 rho>, and the canonical-variation
// eigenvalue (r^2 - s^2) lambda_fibre + s^2 lambda_group.
//
// Weights are stored in doubled epsilon-coordinates so that the half-integral
// spin weights of Spin(9) and Spin(8) are exact integers.

#include "rankone/exact.hpp"
#include "rankone/spectra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rankone {

enum class RootFamily {
  A,           // u(n+1), epsilon_i - epsilon_j
  C,           // sp(rank), epsilon_i +- epsilon_j and 2 epsilon_i
  B4,          // spin(9)
  D4,          // spin(8)
  FiberCircle, // u(1), no roots
  FiberSp1,    // sp(1), the single root 2 epsilon_1
};

struct Weight {
  std::vector<std::int64_t> twice; // 2 * epsilon-coordinates

  static Weight from_integers(std::vector<std::int64_t> coords);
  /// Coordinates given in halves: from_halves({1, 1, 1, 1}) is omega_4.
  static Weight from_halves(std::vector<std::int64_t> halves);

  std::size_t rank() const { return twice.size(); }
  Rational coord(std::size_t i) const;

  friend bool operator==(const Weight &, const Weight &) = default;
};

Weight operator+(const Weight &x, const Weight &y);
Weight operator*(std::int64_t k, const Weight &w);

class RootSystem {
public:
  /// u(n+1): rank n+1, Gram scale 2.
  static RootSystem unitary(int n);
  /// sp(rank): Gram scale 1.
  static RootSystem symplectic(int rank);
  static RootSystem spin9();
  static RootSystem spin8();
  /// u(1) acting on the last coordinate of u(n+1); Gram scale 2.
  static RootSystem circle();
  static RootSystem sp1();

  RootFamily family() const { return family_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Weight> &positive_roots() const { return roots_; }
  /// Half the sum of the positive roots.
  const Weight &rho() const { return rho_; }
  /// g with <eps_i, eps_j> = g delta_ij.
  const Rational &gram_diag() const { return gram_; }

  /// Same roots with a different Gram scale.
  RootSystem with_gram(Rational gram) const;

  /// Dominant and integral for this family.
  bool is_dominant(const Weight &w) const;

  /// Rational inner product <x, y> under the Gram scale.
  Rational inner(const Weight &x, const Weight &y) const;

private:
  RootSystem(RootFamily family, std::size_t rank, std::vector<Weight> roots, Rational gram);

  RootFamily family_;
  std::size_t rank_;
  std::vector<Weight> roots_;
  Weight rho_;
  Rational gram_;
};

/// prod_{alpha > 0} <L + rho, alpha> / <rho, alpha>. Throws DomainError on a
/// non-dominant weight, IntegralityError if the product is not an integer.
Integer weyl_dimension(const RootSystem &rs, const Weight &highest);

/// <L, L + 2 rho>_0 under the system's Gram scale.
Rational casimir_scalar(const RootSystem &rs, const Weight &highest);

/// (r^2 - s^2) lambda_fibre + s^2 lambda_group. Throws DomainError unless
/// r^2, s^2 > 0.
Rational canonical_variation(const Rational &lambda_fibre, const Rational &lambda_group,
                             const Rational &r_squared, const Rational &s_squared);

struct SphericalWeight {
  Weight g_weight;
  Rational fiber_casimir;
  std::int64_t fiber_degeneracy;
  std::string citation;
};

/// Root system of the transitive group: U(n+1), Sp(n+1) or Spin(9).
RootSystem group_root_system(const SphereModel &model);

/// Highest weights of the spherical representations carrying the (p, q)
/// branch, with the fibre Casimir and the fibre-isotypic degeneracy.
std::vector<SphericalWeight> spherical_weights(const SphereModel &model, std::int64_t p,
                                               std::int64_t q);

/// sum over spherical weights of degeneracy * dim V.
Integer oracle_multiplicity(const SphereModel &model, std::int64_t p, std::int64_t q);

/// Canonical-variation eigenvalue at the (r, s) that realise g(t).
Rational oracle_eigenvalue(const SphereModel &model, std::int64_t p, std::int64_t q,
                           const Rational &t_squared);

} // namespace rankone
