#pragma once

// Laplace spectrum of the Berger-type spheres (S^{N-1}, g(t)) fibred over
// KP^n with fibre S^{2d-1}_t.
//
// Every eigenvalue branch is stored symbolically as lambda = a + b / t^2
// with integer a, b >= 0, so merging coincident eigenvalues at a rational
// t^2 is an exact comparison.

#include "rankone/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rankone {

enum class Field { Complex, Quaternion, Octonion };

struct DivisionAlgebra {
  Field tag;
  int d; // complex dimension: 1, 2, 4

  static DivisionAlgebra of(Field tag);
  /// 'c', 'h', 'o'
  char letter() const;
  /// "C", "H", "Ca"
  std::string symbol() const;
};

/// One Hopf fibration S^{2d-1} -> S^{N-1} -> KP^n, N = 2d(n+1).
class SphereModel {
public:
  /// Throws DomainError for n < 1 or octonions with n != 1.
  SphereModel(Field field, int n);

  const DivisionAlgebra &algebra() const { return algebra_; }
  Field field() const { return algebra_.tag; }
  int d() const { return algebra_.d; }
  int n() const { return n_; }
  int N() const { return 2 * algebra_.d * (n_ + 1); }
  int fiber_dim() const { return 2 * algebra_.d - 1; }
  int sphere_dim() const { return N() - 1; }

  /// "CP^1", "HP^3", "S^8(1/2)" for the octonionic base.
  std::string base_name() const;
  /// "S^15" etc.
  std::string sphere_name() const;

  friend bool operator==(const SphereModel &, const SphereModel &) = default;

private:
  DivisionAlgebra algebra_;
  int n_;
};

/// Models with n <= max_n for C and H, plus the single octonionic model.
std::vector<SphereModel> models_up_to(int max_n);

struct Coefficients {
  std::int64_t a;
  std::int64_t b;
};

struct SpectralTerm {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  Integer multiplicity;
  bool basic = false;
};

/// a = 4p(p+q+d(n+1)-1) + 2dnq, b = q(q+2d-2).
Coefficients eigen_coefficients(const SphereModel &model, std::int64_t p, std::int64_t q);

/// Fibre factor of the multiplicity; chi(1, q) is the continuous extension
/// (1 for q = 0, 2 otherwise). Throws DomainError for d not in {1, 2, 4}.
Integer chi(int d, std::int64_t q);

/// The two primitives the unified multiplicity formula is built from. The
/// verification suite swaps these for deliberately broken variants to prove
/// its checks are not vacuous.
struct FormulaHooks {
  Integer (*chi)(int d, std::int64_t q) = &rankone::chi;
  Integer (*binomial)(std::int64_t a, std::int64_t b) = &rankone::binomial;
};

/// Unified multiplicity m_{p,q}; m_{0,0} = 1. Throws IntegralityError if the
/// rational expression fails to reduce to a positive integer.
Integer multiplicity(const SphereModel &model, std::int64_t p, std::int64_t q,
                     const FormulaHooks &hooks = {});

struct TableRow {
  std::int64_t a;
  std::int64_t b;
  Integer multiplicity;
};

/// Per-field closed forms (complex, quaternionic and octonionic rows), written
/// independently of the unified expressions.
TableRow table_formulas(const SphereModel &model, std::int64_t p, std::int64_t q);

SpectralTerm make_term(const SphereModel &model, std::int64_t p, std::int64_t q,
                       const FormulaHooks &hooks = {});

/// a + b / t^2. Throws DomainError for t^2 <= 0.
Rational evaluate_term(const SpectralTerm &term, const Rational &t_squared);
Rational evaluate_term(std::int64_t a, std::int64_t b, const Rational &t_squared);

/// Dimension of degree-k spherical harmonics on the round S^L:
/// C(k+L, L) - C(k+L-2, L).
Integer round_multiplicity(std::int64_t sphere_dim, std::int64_t k);

struct SpectrumEntry {
  Rational value;
  Integer multiplicity;
  std::vector<SpectralTerm> contributors; // sorted by (p, q)
};

struct MergedSpectrum {
  SphereModel model;
  Rational t_squared;
  Rational cutoff;
  std::vector<SpectrumEntry> entries; // strictly increasing values

  std::size_t term_count() const;
};

struct EnumerationLimits {
  std::size_t max_terms = 1'000'000;
};

/// All (p, q) with a + b/t^2 <= cutoff, merged by exact equality. The p range
/// is partitioned across OpenMP threads; the result is identical to
/// serial::enumerate_spectrum.
MergedSpectrum enumerate_spectrum(const SphereModel &model, const Rational &t_squared,
                                  const Rational &cutoff, const EnumerationLimits &limits = {});

/// Evaluates m_{p,q} on the rectangle [0, p_max] x [0, q_max], row-major in p.
std::vector<SpectralTerm> evaluate_grid(const SphereModel &model, std::int64_t p_max,
                                        std::int64_t q_max, const FormulaHooks &hooks = {});

namespace serial {

/// Reference single-threaded kernels kept for testing and benchmarking.
MergedSpectrum enumerate_spectrum(const SphereModel &model, const Rational &t_squared,
                                  const Rational &cutoff, const EnumerationLimits &limits = {});
std::vector<SpectralTerm> evaluate_grid(const SphereModel &model, std::int64_t p_max,
                                        std::int64_t q_max, const FormulaHooks &hooks = {});

} // namespace serial

// Floating display mode, for irrational t (e.g. t = cos r at a float radius).
// Only terms with identical (a, b) are merged; values that land within a
// relative gap of 1e-12 of each other are reported, not merged.

struct FloatSpectrumEntry {
  double value;
  Integer multiplicity;
  std::vector<SpectralTerm> contributors;
};

struct FloatSpectrum {
  SphereModel model;
  double t_squared;
  double cutoff;
  std::vector<FloatSpectrumEntry> entries;
  std::vector<std::string> warnings;
};

inline constexpr double near_collision_gap = 1e-12;

FloatSpectrum enumerate_spectrum_float(const SphereModel &model, double t_squared, double cutoff,
                                       const EnumerationLimits &limits = {});

} // namespace rankone
