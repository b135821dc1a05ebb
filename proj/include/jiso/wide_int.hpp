// Exact integer arithmetic layer: arbitrary-precision integers for the
// reference paths, fixed-width 256-bit checked integers for the scan fast
// path, and integer square roots that never touch floating point for the
// final answer.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jiso {

namespace bmp = boost::multiprecision;

// Arbitrary precision (reference / slow path). cpp_int never overflows.
using BigInt = bmp::cpp_int;

// Fixed-width fast path. checked_int256_t throws std::overflow_error on
// overflow, which the scanner catches to promote a single n to BigInt.
using Int256 = bmp::checked_int256_t;
using UInt256 = bmp::uint256_t;
// 512 bits is enough to compare two reduced 256-bit fractions by
// cross-multiplication without any overflow possibility.
using Int512 = bmp::int512_t;

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Floor square root of a u128. The float seed is only a starting guess;
// the result is corrected until r*r <= x < (r+1)*(r+1) holds exactly.
inline u128 isqrt_u128(u128 x) {
    if (x == 0) return 0;
    u128 r = static_cast<u128>(sqrtl(static_cast<long double>(x)));
    if (r > 0) --r;
    while ((r + 1) * (r + 1) <= x) ++r;  // r < 2^64 here, no overflow
    while (r * r > x) --r;
    return r;
}

// Floor square root of a BigInt with post-verification.
inline BigInt isqrt_big(const BigInt& x) {
    if (x < 0) throw std::domain_error("isqrt of negative value");
    BigInt r = bmp::sqrt(x);
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline u64 low64(const BigInt& x) {
    BigInt a = bmp::abs(x) & BigInt(0xFFFFFFFFFFFFFFFFULL);
    return a.convert_to<u64>();
}

inline u64 low64(const UInt256& x) {
    UInt256 a = x & UInt256(0xFFFFFFFFFFFFFFFFULL);
    return a.convert_to<u64>();
}

// splitmix64 finisher; used to fold per-n results into an order-independent
// scan checksum.
inline u64 mix64(u64 x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace jiso
