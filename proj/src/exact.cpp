#include "rankone/exact.hpp"

#include <cctype>
#include <cmath>

namespace rankone {

Integer binomial(std::int64_t a, std::int64_t b)
{
  if (b < 0 || a < b)
    return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return out;
}

Rational make_rational(std::int64_t num, std::int64_t den)
{
  if (den == 0)
    throw DomainError("rational with zero denominator");
  Rational out{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  out.canonicalize();
  return out;
}

namespace {

bool is_integer_literal(std::string_view s)
{
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

Integer parse_integer(std::string_view s)
{
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text))
    throw std::invalid_argument("not an exact rational: '" + std::string(text) +
                                "' (expected a/b or an integer)");
  if (slash == std::string_view::npos)
    return Rational(parse_integer(num_text));

  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text))
    throw std::invalid_argument("not an exact rational: '" + std::string(text) +
                                "' (expected a/b or an integer)");
  Integer den = parse_integer(den_text);
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational out(parse_integer(num_text), den);
  out.canonicalize();
  return out;
}

std::string to_exact_string(const Rational &value)
{
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer require_integer(const Rational &value, std::string_view what)
{
  if (value.get_den() != 1)
    throw IntegralityError(std::string(what) + " is not an integer: " +
                           to_exact_string(value));
  return value.get_num();
}

std::int64_t exact_sqrt(std::int64_t value)
{
  if (value < 0)
    return -1;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(value)));
  while (root * root > value)
    --root;
  while ((root + 1) * (root + 1) <= value)
    ++root;
  return root * root == value ? root : -1;
}

} // namespace rankone
