#pragma once

// Reference values computed without the library's formulas.

#include "rankone/exact.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using rankone::Integer;

// Pascal's triangle row by row.
inline Integer pascal(std::int64_t a, std::int64_t b)
{
  if (b < 0 || a < b)
    return 0;
  std::vector<Integer> row{1};
  for (std::int64_t i = 1; i <= a; ++i) {
    std::vector<Integer> next(static_cast<std::size_t>(i + 1), 1);
    for (std::int64_t j = 1; j < i; ++j)
      next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

// Number of monomials of degree k in `vars` variables, by dynamic programming
// over the variables.
inline Integer monomials(std::int64_t vars, std::int64_t k)
{
  if (k < 0)
    return 0;
  std::vector<Integer> ways(static_cast<std::size_t>(k + 1), 0);
  ways[0] = 1;
  for (std::int64_t v = 0; v < vars; ++v)
    for (std::int64_t s = 1; s <= k; ++s)
      ways[s] += ways[s - 1];
  return ways[static_cast<std::size_t>(k)];
}

// Harmonic polynomials of degree k on R^N: kernel of the surjective Laplacian
// from degree k to degree k - 2.
inline Integer harmonics(std::int64_t N, std::int64_t k)
{
  return monomials(N, k) - monomials(N, k - 2);
}

} // namespace oracle
