#include "ballspec/binomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ballspec/errors.hpp"

namespace ballspec {

namespace {
__extension__ typedef unsigned __int128 u128;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  u128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // Intermediate values are C(n-k+i, i) <= C(n, k), so they fit whenever
    // the final result does.
    result = result * static_cast<u128>(n - k + i) / static_cast<u128>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("binomial", "C(" + std::to_string(n) + ", " + std::to_string(k) +
                                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

BigInt binomial_exact(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("binomial", "label sum exceeds 64 bits");
  return out;
}

}  // namespace ballspec
