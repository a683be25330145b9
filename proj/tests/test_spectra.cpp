#include "oracles.hpp"

#include "rankone/parallel.hpp"
#include "rankone/spectra.hpp"

#include <doctest.h>

using namespace rankone;

namespace {

const SphereModel C1{Field::Complex, 1};
const SphereModel C2{Field::Complex, 2};
const SphereModel H1{Field::Quaternion, 1};
const SphereModel O1{Field::Octonion, 1};

bool same(const MergedSpectrum &x, const MergedSpectrum &y)
{
  if (x.entries.size() != y.entries.size())
    return false;
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    const auto &a = x.entries[i];
    const auto &b = y.entries[i];
    if (a.value != b.value || a.multiplicity != b.multiplicity ||
        a.contributors.size() != b.contributors.size())
      return false;
    for (std::size_t j = 0; j < a.contributors.size(); ++j)
      if (a.contributors[j].p != b.contributors[j].p || a.contributors[j].q != b.contributors[j].q ||
          a.contributors[j].multiplicity != b.contributors[j].multiplicity)
        return false;
  }
  return true;
}

} // namespace

TEST_SUITE("spectra")
{
  TEST_CASE("models")
  {
    CHECK(C1.N() == 4);
    CHECK(H1.N() == 8);
    CHECK(O1.N() == 16);
    CHECK(O1.base_name() == "S^8(1/2)");
    CHECK(C2.base_name() == "CP^2");
    CHECK(H1.sphere_name() == "S^7");
    CHECK_THROWS_AS(SphereModel(Field::Octonion, 2), DomainError);
    CHECK_THROWS_AS(SphereModel(Field::Complex, 0), DomainError);
    CHECK(models_up_to(4).size() == 9);
  }

  TEST_CASE("eigen_coefficients")
  {
    auto [a1, b1] = eigen_coefficients(C1, 0, 1);
    CHECK(a1 == 2);
    CHECK(b1 == 1);
    auto [a2, b2] = eigen_coefficients(H1, 0, 1);
    CHECK(a2 == 4);
    CHECK(b2 == 3);
    auto [a3, b3] = eigen_coefficients(O1, 1, 0);
    CHECK(a3 == 32);
    CHECK(b3 == 0);
  }

  TEST_CASE("chi")
  {
    CHECK(chi(1, 0) == 1);
    CHECK(chi(1, 5) == 2);
    CHECK(chi(2, 3) == 16);
    // (1 + 2/3) * 21, evaluated by hand
    CHECK(chi(4, 2) == 35);
    for (std::int64_t q = 0; q <= 30; ++q)
      CHECK(chi(2, q) == Integer((q + 1) * (q + 1)));
    CHECK_THROWS_AS(chi(3, 1), DomainError);
  }

  TEST_CASE("multiplicity anchors")
  {
    CHECK(multiplicity(O1, 0, 1) == 16);
    CHECK(multiplicity(C1, 1, 0) == 3);
    CHECK(multiplicity(O1, 0, 2) == 126);
    CHECK(multiplicity(O1, 1, 0) == 9);
    CHECK(multiplicity(O1, 0, 2) + multiplicity(O1, 1, 0) == oracle::harmonics(16, 2));
    CHECK(multiplicity(C1, 0, 0) == 1);
    for (const auto &m : models_up_to(4))
      CHECK(multiplicity(m, 0, 1) == m.N());
  }

  TEST_CASE("table rows")
  {
    CHECK(table_formulas(C2, 0, 1).multiplicity == 6);
    const TableRow h = table_formulas(H1, 0, 1);
    CHECK(h.a == 4);
    CHECK(h.b == 3);
    CHECK(h.multiplicity == 8);
    const TableRow o = table_formulas(O1, 0, 0);
    CHECK(o.a == 0);
    CHECK(o.b == 0);
    CHECK(o.multiplicity == 1);
  }

  TEST_CASE("round multiplicity against monomial counting")
  {
    CHECK(round_multiplicity(15, 2) == 135);
    CHECK(round_multiplicity(3, 1) == 4);
    for (std::int64_t L = 1; L <= 20; ++L) {
      CHECK(round_multiplicity(L, 0) == 1);
      for (std::int64_t k = 0; k <= 25; ++k)
        CHECK(round_multiplicity(L, k) == oracle::harmonics(L + 1, k));
    }
  }

  TEST_CASE("round sphere sums at t^2 = 1 against monomial counting")
  {
    for (const auto &m : models_up_to(3))
      for (std::int64_t k = 0; k <= 20; ++k) {
        Integer total(0);
        for (std::int64_t p = 0; 2 * p <= k; ++p) {
          total += multiplicity(m, p, k - 2 * p);
          CHECK(evaluate_term(make_term(m, p, k - 2 * p), Rational(1)) ==
                Rational(k * (k + m.N() - 2)));
        }
        CHECK(total == oracle::harmonics(m.N(), k));
      }
  }

  TEST_CASE("evaluate_term")
  {
    CHECK(evaluate_term(2, 1, Rational(1)) == 3);
    CHECK(evaluate_term(2, 1, make_rational(1, 2)) == 4);
    CHECK(evaluate_term(0, 0, make_rational(7, 3)) == 0);
    CHECK_THROWS_AS(evaluate_term(2, 1, Rational(0)), DomainError);
    CHECK_THROWS_AS(evaluate_term(2, 1, Rational(-1)), DomainError);
  }

  TEST_CASE("enumerate_spectrum merges coincident values")
  {
    const auto s3 = enumerate_spectrum(C1, Rational(1), Rational(3));
    REQUIRE(s3.entries.size() == 2);
    CHECK(s3.entries[0].value == 0);
    CHECK(s3.entries[0].multiplicity == 1);
    CHECK(s3.entries[1].value == 3);
    CHECK(s3.entries[1].multiplicity == 4);

    const auto s8 = enumerate_spectrum(C1, Rational(1), Rational(8));
    REQUIRE(s8.entries.size() == 3);
    const auto &top = s8.entries.back();
    CHECK(top.value == 8);
    CHECK(top.multiplicity == 9);
    REQUIRE(top.contributors.size() == 2);
    CHECK(top.contributors[0].p == 0);
    CHECK(top.contributors[0].q == 2);
    CHECK(top.contributors[1].p == 1);
    CHECK(top.contributors[1].q == 0);

    for (const auto &m : models_up_to(2)) {
      const auto zero = enumerate_spectrum(m, make_rational(1, 3), Rational(0));
      REQUIRE(zero.entries.size() == 1);
      CHECK(zero.entries[0].multiplicity == 1);
    }
  }

  TEST_CASE("octonionic (0,1) at t^2 = 1/4")
  {
    const auto s = enumerate_spectrum(O1, make_rational(1, 4), Rational(40));
    bool found = false;
    for (const auto &e : s.entries)
      for (const auto &t : e.contributors)
        if (t.p == 0 && t.q == 1) {
          CHECK(e.value == 36);
          found = true;
        }
    CHECK(found);
  }

  TEST_CASE("enumeration covers exactly the window")
  {
    // Direct scan of a box large enough to contain the window.
    const Rational t2 = make_rational(2, 3);
    const Rational cutoff(150);
    for (const auto &m : models_up_to(2)) {
      const auto s = enumerate_spectrum(m, t2, cutoff);
      std::size_t expected = 0;
      for (std::int64_t p = 0; p <= 40; ++p)
        for (std::int64_t q = 0; q <= 40; ++q) {
          const auto [a, b] = eigen_coefficients(m, p, q);
          if (evaluate_term(a, b, t2) <= cutoff)
            ++expected;
        }
      CHECK(s.term_count() == expected);
      for (std::size_t i = 1; i < s.entries.size(); ++i)
        CHECK(s.entries[i - 1].value < s.entries[i].value);
    }
  }

  TEST_CASE("term cap")
  {
    CHECK_THROWS_AS(enumerate_spectrum(C1, Rational(1), Rational(100000), {100}),
                    ResourceLimitError);
  }

  TEST_CASE("parallel kernels match the serial reference")
  {
    const int before = thread_count();
    for (int threads : {1, 3, 4}) {
      set_thread_count(threads);
      for (const auto &m : models_up_to(3)) {
        for (const Rational &t2 : {Rational(1), make_rational(1, 4), make_rational(9, 4)}) {
          const auto par = enumerate_spectrum(m, t2, Rational(400));
          const auto ser = serial::enumerate_spectrum(m, t2, Rational(400));
          CHECK(same(par, ser));
        }
        const auto gp = evaluate_grid(m, 25, 25);
        const auto gs = serial::evaluate_grid(m, 25, 25);
        REQUIRE(gp.size() == gs.size());
        for (std::size_t i = 0; i < gp.size(); ++i) {
          CHECK(gp[i].p == gs[i].p);
          CHECK(gp[i].q == gs[i].q);
          CHECK(gp[i].multiplicity == gs[i].multiplicity);
        }
      }
    }
    set_thread_count(before);
  }

  TEST_CASE("float mode groups identical branches and flags near collisions")
  {
    // At t^2 = 1, (1,0) and (0,2) share the value 8 with different (a, b):
    // reported as a near collision, not merged.
    const auto f = enumerate_spectrum_float(C1, 1.0, 8.0);
    REQUIRE(f.entries.size() == 4);
    CHECK(f.entries[2].value == 8.0);
    CHECK(f.entries[3].value == 8.0);
    CHECK(f.entries[2].multiplicity + f.entries[3].multiplicity == 9);
    CHECK(f.warnings.size() == 1);

    const auto g = enumerate_spectrum_float(C1, 0.7, 30.0);
    for (const auto &e : g.entries)
      CHECK(e.contributors.size() == 1);
    CHECK_THROWS_AS(enumerate_spectrum_float(C1, 0.0, 8.0), DomainError);
  }
}
