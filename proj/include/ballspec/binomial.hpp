#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace ballspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(n, k) in 64-bit arithmetic, zero when n < k, n < 0 or k < 0.
/// Throws OverflowError instead of wrapping.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// C(n, k) with arbitrary precision; same zero convention.
BigInt binomial_exact(std::int64_t n, std::int64_t k);

/// a + b, throwing OverflowError on wrap.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace ballspec
