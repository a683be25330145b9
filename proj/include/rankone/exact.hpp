#pragma once

// Exact integer and rational scalars backed by GMP, plus the handful of
// combinatorial helpers every other module leans on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankone {

using Integer = mpz_class;
using Rational = mpq_class;

/// Input outside the mathematical domain of an operation (t^2 <= 0, an
/// illegal slope, octonions with n != 1, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An exact expression that must reduce to an integer did not.
class IntegralityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A request would enumerate more terms than the configured cap allows.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// C(a, b) with C(a, b) = 0 whenever a < b or b < 0.
Integer binomial(std::int64_t a, std::int64_t b);

/// Canonical num/den; throws DomainError on a zero denominator.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a/b" or a bare integer "a". Decimal notation is rejected so that
/// no floating value is ever silently coerced into an exact one.
Rational parse_rational(std::string_view text);

/// Always "numerator/denominator", including "/1" for integers.
std::string to_exact_string(const Rational &value);

/// Returns the numerator of an integral rational; throws IntegralityError
/// naming `what` otherwise.
Integer require_integer(const Rational &value, std::string_view what);

inline Rational to_rational(const Integer &value) { return Rational(value); }

inline double to_double(const Rational &value) { return value.get_d(); }

/// Integer square root if `value` is a perfect square, -1 otherwise.
std::int64_t exact_sqrt(std::int64_t value);

} // namespace rankone
