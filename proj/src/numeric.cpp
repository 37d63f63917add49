#include "qalg/numeric.hpp"

#include <cmath>

namespace qalg {

Int isqrt_floor(const Int& n) {
  if (n < 0) return -1;
  return sqrt(n);
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool rat_is_int(const Rat& r) { return denominator(r) == 1; }

Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square64(std::int64_t n, std::int64_t* root) {
  if (n < 0) return false;
  std::int64_t r = isqrt64(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

int euler_phi(std::int64_t m) {
  std::int64_t result = m;
  std::int64_t n = m;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return static_cast<int>(result);
}

int moebius(std::int64_t m) {
  int factors = 0;
  std::int64_t n = m;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++factors;
    }
  }
  if (n > 1) ++factors;
  return (factors % 2 == 0) ? 1 : -1;
}

bool is_square_free(std::int64_t n) {
  if (n == 0) return false;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    while (n % p == 0) n /= p;
  }
  return true;
}

}  // namespace qalg
