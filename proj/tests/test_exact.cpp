#include "oracles.hpp"

#include "rankone/exact.hpp"

#include <doctest.h>

using namespace rankone;

TEST_SUITE("exact")
{
  TEST_CASE("binomial matches Pascal's triangle and the zero convention")
  {
    for (std::int64_t a = 0; a <= 40; ++a)
      for (std::int64_t b = -2; b <= a + 2; ++b)
        CHECK(binomial(a, b) == oracle::pascal(a, b));
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(200, 100).get_str().size() == 59);
  }

  TEST_CASE("rational parsing is strict")
  {
    CHECK(parse_rational("1/4") == make_rational(1, 4));
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("36") == Rational(36));
    CHECK_THROWS_AS(parse_rational("0.25"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  }

  TEST_CASE("exact strings keep the denominator")
  {
    CHECK(to_exact_string(Rational(36)) == "36/1");
    CHECK(to_exact_string(make_rational(10, 4)) == "5/2");
    CHECK(to_exact_string(Rational(0)) == "0/1");
  }

  TEST_CASE("require_integer")
  {
    CHECK(require_integer(make_rational(12, 4), "x") == 3);
    CHECK_THROWS_AS(require_integer(make_rational(1, 2), "x"), IntegralityError);
  }

  TEST_CASE("exact_sqrt")
  {
    CHECK(exact_sqrt(0) == 0);
    CHECK(exact_sqrt(144) == 12);
    CHECK(exact_sqrt(145) == -1);
    CHECK(exact_sqrt(-4) == -1);
  }

  TEST_CASE("make_rational rejects a zero denominator")
  {
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  }
}
