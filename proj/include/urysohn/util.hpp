#ifndef URYSOHN_UTIL_HPP
#define URYSOHN_UTIL_HPP

#include "urysohn/rational.hpp"

#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace urysohn {

/// Worker count: URYSOHN_THREADS if set, else hardware concurrency.
inline unsigned worker_count() {
  if (const char *env = std::getenv("URYSOHN_THREADS")) {
    long v = std::atol(env);
    if (v >= 1)
      return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Rewrites a list of rationals as integer numerators over one common
/// denominator. Throws if the result does not fit int64 (JSON boundary).
struct CommonDenominator {
  std::vector<std::int64_t> nums;
  std::int64_t den = 1;
};

inline CommonDenominator to_common_denominator(std::span<const Rational> values) {
  BigInt l = 1;
  for (const Rational &v : values)
    l = boost::multiprecision::lcm(l, BigInt(v.den()));
  CommonDenominator out;
  if (l > BigInt(INT64_MAX))
    throw std::runtime_error("common denominator exceeds int64; values too fine");
  out.den = l.convert_to<std::int64_t>();
  out.nums.reserve(values.size());
  for (const Rational &v : values) {
    BigInt n = v.num() * (l / v.den());
    if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN))
      throw std::runtime_error("numerator exceeds int64 over common denominator");
    out.nums.push_back(n.convert_to<std::int64_t>());
  }
  return out;
}

/// FNV-1a over raw bytes; stable across runs, used for dedup hashing.
inline std::uint64_t fnv1a(const void *data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto *p = static_cast<const unsigned char *>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace urysohn

#endif
