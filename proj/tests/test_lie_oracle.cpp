#include "oracles.hpp"

#include "rankone/lie_oracle.hpp"

#include <doctest.h>

using namespace rankone;

namespace {

Rational R(std::int64_t v) { return Rational(Integer(static_cast<long>(v))); }

Weight omega1() { return Weight::from_integers({1, 0, 0, 0}); }
Weight omega2() { return Weight::from_integers({1, 1, 0, 0}); }
Weight omega3() { return Weight::from_integers({1, 1, 1, 0}); }
Weight omega4() { return Weight::from_halves({1, 1, 1, 1}); }

} // namespace

TEST_SUITE("lie_oracle")
{
  TEST_CASE("rho is half the sum of the positive roots")
  {
    CHECK(RootSystem::spin9().rho() == Weight::from_halves({7, 5, 3, 1}));
    CHECK(RootSystem::spin8().rho() == Weight::from_integers({3, 2, 1, 0}));
    CHECK(RootSystem::symplectic(2).rho() == Weight::from_integers({2, 1}));
    CHECK(RootSystem::unitary(2).rho() == Weight::from_integers({1, 0, -1}));
    CHECK(RootSystem::spin9().positive_roots().size() == 16);
    CHECK(RootSystem::symplectic(3).positive_roots().size() == 9);
  }

  TEST_CASE("Spin(9) dimensions")
  {
    const RootSystem b4 = RootSystem::spin9();
    CHECK(weyl_dimension(b4, omega1()) == 9);
    CHECK(weyl_dimension(b4, omega2()) == 36);
    CHECK(weyl_dimension(b4, omega3()) == 84);
    CHECK(weyl_dimension(b4, omega4()) == 16);
    CHECK(weyl_dimension(b4, 2 * omega4()) == 126);
    CHECK(weyl_dimension(b4, 2 * omega1()) == 44);
    CHECK(weyl_dimension(b4, omega1() + omega4()) == 128);
  }

  TEST_CASE("Sp(2) and U(n+1) dimensions")
  {
    const RootSystem c2 = RootSystem::symplectic(2);
    CHECK(weyl_dimension(c2, Weight::from_integers({1, 0})) == 4);
    CHECK(weyl_dimension(c2, Weight::from_integers({1, 1})) == 5);
    CHECK(weyl_dimension(c2, Weight::from_integers({2, 0})) == 10);

    // dim of l e1 - k e_{n+1} on U(n+1): ((k+l+n)/n) C(k+n-1,k) C(l+n-1,l)
    for (int n = 1; n <= 4; ++n) {
      const RootSystem a = RootSystem::unitary(n);
      for (std::int64_t k = 0; k <= 6; ++k)
        for (std::int64_t l = 0; l <= 6; ++l) {
          std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
          c.front() = l;
          c.back() -= k;
          const Rational expected = make_rational(k + l + n, n) *
                                    Rational(oracle::pascal(k + n - 1, k)) *
                                    Rational(oracle::pascal(l + n - 1, l));
          CHECK(Rational(weyl_dimension(a, Weight::from_integers(c))) == expected);
        }
    }
  }

  TEST_CASE("Gram scale cancels in dimensions")
  {
    const RootSystem b4 = RootSystem::spin9();
    CHECK(weyl_dimension(b4.with_gram(make_rational(7, 3)), omega3()) == 84);
    CHECK_THROWS_AS(b4.with_gram(Rational(0)), DomainError);
  }

  TEST_CASE("non-dominant weights are rejected")
  {
    const RootSystem b4 = RootSystem::spin9();
    CHECK_THROWS_AS(weyl_dimension(b4, Weight::from_integers({0, 1, 0, 0})), DomainError);
    CHECK_THROWS_AS(weyl_dimension(b4, Weight::from_halves({2, 1, 1, 1})), DomainError);
    CHECK_THROWS_AS(weyl_dimension(b4, Weight::from_integers({1, 0, 0})), DomainError);
    CHECK_THROWS_AS(casimir_scalar(RootSystem::symplectic(2), Weight::from_integers({0, -1})),
                    DomainError);
    CHECK(RootSystem::spin8().is_dominant(Weight::from_halves({1, 1, 1, -1})));
  }

  TEST_CASE("Casimir scalars")
  {
    for (int n = 1; n <= 4; ++n) {
      const RootSystem a = RootSystem::unitary(n);
      for (std::int64_t k = 0; k <= 5; ++k)
        for (std::int64_t l = 0; l <= 5; ++l) {
          std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
          c.front() = l;
          c.back() -= k;
          CHECK(casimir_scalar(a, Weight::from_integers(c)) ==
                R(2 * l * (n + l) + 2 * k * (n + k)));
        }
    }
    const RootSystem b4 = RootSystem::spin9();
    const RootSystem d4 = RootSystem::spin8();
    for (std::int64_t p = 0; p <= 8; ++p)
      for (std::int64_t q = 0; q <= 8; ++q)
        CHECK(casimir_scalar(b4, p * omega1() + q * omega4()) ==
              R(p * p + p * (q + 7) + q * q + 8 * q));
    for (std::int64_t q = 0; q <= 8; ++q)
      CHECK(casimir_scalar(d4, q * Weight::from_halves({1, 1, 1, -1})) == R(q * (q + 6)));
  }

  TEST_CASE("canonical variation")
  {
    CHECK(canonical_variation(R(5), R(11), R(3), R(3)) == R(33));
    const Rational t2 = make_rational(1, 4);
    for (std::int64_t p = 0; p <= 4; ++p)
      for (std::int64_t q = 0; q <= 4; ++q) {
        const Rational v = canonical_variation(R(q * (q + 6)), R(p * p + p * (q + 7) + q * q + 8 * q),
                                               Rational(1) / t2, R(4));
        CHECK(v == R(4 * p * (p + q + 7) + 8 * q) + R(q * (q + 6)) / t2);
      }
    CHECK_THROWS_AS(canonical_variation(R(1), R(1), R(0), R(1)), DomainError);
  }

  TEST_CASE("spherical weights")
  {
    const SphereModel c2{Field::Complex, 2};
    const auto w = spherical_weights(c2, 1, 2);
    REQUIRE(w.size() == 2);
    CHECK(w[0].g_weight == Weight::from_integers({1, 0, -3}));
    CHECK(w[1].g_weight == Weight::from_integers({3, 0, -1}));
    CHECK(w[0].fiber_casimir == 8);
    CHECK(w[1].fiber_casimir == 8);

    const SphereModel h1{Field::Quaternion, 1};
    const auto wh = spherical_weights(h1, 0, 1);
    REQUIRE(wh.size() == 1);
    CHECK(wh[0].g_weight == Weight::from_integers({1, 0}));
    CHECK(wh[0].fiber_degeneracy == 2);
    CHECK(oracle_multiplicity(h1, 0, 1) == 8);

    const SphereModel o1{Field::Octonion, 1};
    CHECK(spherical_weights(o1, 0, 1)[0].g_weight == omega4());
    CHECK(oracle_multiplicity(o1, 0, 1) == 16);
    CHECK(oracle_multiplicity(o1, 0, 2) == 126);
  }

  TEST_CASE("oracle multiplicities and eigenvalues")
  {
    const SphereModel c1{Field::Complex, 1};
    const SphereModel h1{Field::Quaternion, 1};
    const SphereModel o1{Field::Octonion, 1};
    // 2 * dim V_{2,1} = 2 * 4; with m_{0,3} = 8 this fills the 16 cubic harmonics on S^3
    CHECK(oracle_multiplicity(c1, 1, 1) == 8);
    CHECK(oracle_multiplicity(c1, 1, 1) + oracle_multiplicity(c1, 0, 3) == 16);
    CHECK(oracle_multiplicity(h1, 1, 1) == 32);
    CHECK(oracle_eigenvalue(c1, 0, 1, make_rational(1, 4)) == 6);
    CHECK(oracle_eigenvalue(o1, 1, 0, make_rational(3, 7)) == 32);
    CHECK(oracle_eigenvalue(o1, 1, 0, Rational(5)) == 32);
    CHECK(oracle_eigenvalue(h1, 0, 1, Rational(1)) == 7);
    CHECK_THROWS_AS(oracle_eigenvalue(h1, 0, 1, Rational(0)), DomainError);
  }

  TEST_CASE("quaternionic calibration against a hand-expanded Casimir")
  {
    // On Sp(n+1), rho = (n+1, n, ..., 1), so for (p+q, p, 0, ...):
    // <L, L+2rho> = (p+q)(p+q+2n+2) + p(p+2n).
    for (int n = 1; n <= 20; ++n) {
      const SphereModel m{Field::Quaternion, n};
      for (std::int64_t p = 0; p <= 20; ++p)
        for (std::int64_t q = 0; q <= 20; ++q) {
          const std::int64_t casimir = (p + q) * (p + q + 2 * n + 2) + p * (p + 2 * n);
          const Rational t2 = make_rational(2, 5);
          const Rational expected =
              (Rational(1) / t2 - 2) * R(q * (q + 2)) + 2 * R(casimir);
          const auto [a, b] = eigen_coefficients(m, p, q);
          CHECK(expected == R(a) + R(b) / t2);
          CHECK(oracle_eigenvalue(m, p, q, t2) == expected);
        }
    }
  }
}
