#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace qalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/** Floor of sqrt(n) for n >= 0. */
Int isqrt_floor(const Int& n);

/** True iff n is a perfect square; optionally writes the root. */
bool is_perfect_square(const Int& n, Int* root = nullptr);

/** Floor division (rounds toward negative infinity). */
Int floor_div(const Int& a, const Int& b);

/** a mod m normalized to [0, m). */
inline int mod_pos(std::int64_t a, int m) {
  int r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

/** True iff r has denominator 1. */
bool rat_is_int(const Rat& r);

/** Floor of a rational. */
Int rat_floor(const Rat& r);

/** Floor of sqrt(n) in 64-bit arithmetic, n >= 0. */
std::int64_t isqrt64(std::int64_t n);

/** True iff n >= 0 is a perfect square; optionally writes the root. */
bool is_square64(std::int64_t n, std::int64_t* root = nullptr);

/** Euler phi for small m >= 1. */
int euler_phi(std::int64_t m);

/** Moebius mu for small m >= 1. */
int moebius(std::int64_t m);

/** True iff n != 0 has no repeated prime factor. */
bool is_square_free(std::int64_t n);

}  // namespace qalg
