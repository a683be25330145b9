#include "rankone/parallel.hpp"
#include "rankone/verify.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace rankone;
using namespace rankone::verify;

namespace {

const SphereModel C1{Field::Complex, 1};
const SphereModel H1{Field::Quaternion, 1};
const SphereModel O1{Field::Octonion, 1};

} // namespace

TEST_SUITE("verify")
{
  TEST_CASE("degree-ordered grid")
  {
    const auto g = degree_ordered_grid(2, 1);
    REQUIRE(g.size() == 6);
    CHECK(g[0] == std::pair<std::int64_t, std::int64_t>{0, 0});
    CHECK(g[1] == std::pair<std::int64_t, std::int64_t>{0, 1});
    CHECK(g[2] == std::pair<std::int64_t, std::int64_t>{1, 0});
    CHECK(g[3] == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(g[4] == std::pair<std::int64_t, std::int64_t>{2, 0});
    CHECK(g[5] == std::pair<std::int64_t, std::int64_t>{2, 1});
  }

  TEST_CASE("first_failure returns the smallest failing index")
  {
    const CaseCheck check = [](std::size_t i) -> std::optional<Counterexample> {
      if (i == 777)
        throw std::runtime_error("boom");
      if (i % 500 == 499)
        return Counterexample{{{"i", std::to_string(i)}}, "", "", ""};
      return std::nullopt;
    };
    const int before = thread_count();
    for (int threads : {1, 4}) {
      set_thread_count(threads);
      const auto par = first_failure(2000, check);
      const auto ser = verify::serial::first_failure(2000, check);
      REQUIRE(par);
      REQUIRE(ser);
      CHECK(par->index == 499);
      CHECK(ser->index == 499);
      const auto exc = first_failure(
          2000, [&](std::size_t i) { return i >= 700 ? check(i + 77) : std::nullopt; });
      REQUIRE(exc);
      CHECK(exc->index == 700);
      CHECK(exc->exception);
    }
    set_thread_count(before);
    CHECK_FALSE(first_failure(0, check));
  }

  TEST_CASE("individual checks pass on the spec examples")
  {
    const auto o = check_round_sphere(O1, 2);
    CHECK(o.passed);
    CHECK(o.cases == 3);
    CHECK(check_round_sphere(C1, 60).passed);
    CHECK(check_round_sphere(SphereModel(Field::Quaternion, 3), 40).passed);
    CHECK(check_unified_vs_table(O1, 40, 40).passed);
    CHECK(check_parametrized_identity(O1, 30, 30).passed);
    CHECK(check_parametrized_identity(SphereModel(Field::Complex, 2), 30, 30).passed);
    CHECK(check_parametrized_identity(H1, 30, 30).passed);
    CHECK(check_minkowski_inclusions({C1, CurvatureSign::Projective}, Rational(1), Rational(200))
              .passed);
    CHECK(check_minkowski_inclusions({O1, CurvatureSign::Hyperbolic}, make_rational(1, 2),
                                     Rational(200))
              .passed);
    CHECK(check_oracles(C1, 20, 20, {Rational(1), make_rational(1, 2), Rational(2)}).passed);
    CHECK(check_float_geometry({H1, CurvatureSign::Hyperbolic}).passed);
  }

  TEST_CASE("jacobi check on the CP^2 slope grid")
  {
    const AmbientSpace cp2{C1, CurvatureSign::Projective};
    std::vector<Rational> slopes;
    for (int s : {4, 5, 6, 20, 21, 22})
      slopes.push_back(Rational(s));
    CHECK(check_jacobi(cp2, slopes, 40, 10).passed);

    const AmbientSpace cah2{O1, CurvatureSign::Hyperbolic};
    const auto random = jacobi_slope_grid(cah2, 10, 50);
    CHECK(random.size() == 51);
    for (const auto &s : random) {
      CHECK(s > 0);
      CHECK(s < 1);
    }
    CHECK(random == jacobi_slope_grid(cah2, 10, 50));
    CHECK(check_jacobi(cah2, random, 40, 10).passed);
  }

  TEST_CASE("mutants are caught with a minimal counterexample")
  {
    const auto chi = check_unified_vs_table(C1, 30, 30, mutants::hooks("chi"));
    CHECK_FALSE(chi.passed);
    REQUIRE(chi.counterexample);
    CHECK(chi.counterexample->inputs.at("p") == "0");
    CHECK(chi.counterexample->inputs.at("q") == "1");

    const auto chi_h = check_unified_vs_table(H1, 30, 30, mutants::hooks("chi"));
    REQUIRE(chi_h.counterexample);
    CHECK(chi_h.counterexample->inputs.at("q") == "1");

    const auto bin = check_round_sphere(C1, 10, mutants::hooks("binomial"));
    CHECK_FALSE(bin.passed);
    REQUIRE(bin.counterexample);
    CHECK_FALSE(bin.counterexample->detail.empty());

    CHECK_THROWS_AS(mutants::hooks("nope"), std::invalid_argument);
  }

  TEST_CASE("run_all")
  {
    RunOptions quick;
    const auto reports = run_all(quick);
    CHECK(all_passed(reports));
    CHECK(reports.size() > 40);

    RunOptions one;
    one.profile = Profile::Full;
    one.only = "round_sphere";
    const auto rs = run_all(one);
    CHECK(rs.size() == 9);
    for (const auto &r : rs)
      CHECK(r.name.rfind("round_sphere", 0) == 0);

    RunOptions bad;
    bad.only = "nope";
    CHECK_THROWS_AS(run_all(bad), std::invalid_argument);

    RunOptions mutated;
    mutated.hooks = mutants::hooks("chi");
    CHECK_FALSE(all_passed(run_all(mutated)));
  }
}
