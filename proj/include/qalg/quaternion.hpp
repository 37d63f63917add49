#pragma once

#include <array>
#include <string>

#include "qalg/quadfield.hpp"

namespace qalg {

/**
 * An element of the quaternion algebra H(K) = K[i, j] with i^2 = j^2 = -1
 * and ij = -ji = k.  Coefficients are exact elements of K = Q[sqrt(d)].
 */
class Quaternion {
 public:
  Quaternion(QuadRat c1, QuadRat ci, QuadRat cj, QuadRat ck);

  static Quaternion zero(RingSpec ring);
  static Quaternion one(RingSpec ring);
  /** Basis unit for slot 0..3 = 1, i, j, k. */
  static Quaternion basis(RingSpec ring, int slot);

  const RingSpec& ring() const { return c_[0].ring(); }
  const QuadRat& c1() const { return c_[0]; }
  const QuadRat& ci() const { return c_[1]; }
  const QuadRat& cj() const { return c_[2]; }
  const QuadRat& ck() const { return c_[3]; }
  const QuadRat& coeff(int slot) const { return c_[slot]; }

  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator-() const;
  bool operator==(const Quaternion& o) const { return c_ == o.c_; }

  /** Quaternion conjugate: negates the i, j, k parts. */
  Quaternion conj() const;
  /** Reduced norm c1^2 + ci^2 + cj^2 + ck^2, an element of K. */
  QuadRat norm() const;
  /** Reduced trace 2*c1. */
  QuadRat trace() const;

  bool is_zero() const;
  /** True iff all four coefficients lie in o_K. */
  bool is_integral() const;

  /** Inverse in H(K), conj / norm; errors when the norm vanishes. */
  Quaternion inverse() const;
  /** Integer power; negative exponents go through the inverse. */
  Quaternion pow(std::int64_t n) const;

 private:
  std::array<QuadRat, 4> c_;
};

/** An element x + y*i of F = K[i] with formal i^2 = -1. */
struct FElem {
  QuadRat re, im;

  FElem operator+(const FElem& o) const { return {re + o.re, im + o.im}; }
  FElem operator-(const FElem& o) const { return {re - o.re, im - o.im}; }
  FElem operator*(const FElem& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  FElem bar() const { return {re, -im}; }  // conjugation sigma: i -> -i
  bool operator==(const FElem& o) const { return re == o.re && im == o.im; }
};

/** A 2x2 matrix over F = K[i]. */
struct Mat2F {
  FElem a, b, c, d;  // [[a, b], [c, d]]

  static Mat2F identity(RingSpec ring);
  Mat2F operator+(const Mat2F& o) const;
  Mat2F operator*(const Mat2F& o) const;
  bool operator==(const Mat2F& o) const;
  FElem det() const { return a * d - b * c; }
  FElem tr() const { return a + d; }
};

/**
 * The embedding of H(K) into 2x2 matrices over K[i]:
 * x + yj maps to [[x, y], [-sigma(y), sigma(x)]].
 */
Mat2F psi(const Quaternion& q);

/** Coefficients of the reduced characteristic polynomial X^2 + linear*X + constant. */
struct CharPoly {
  QuadRat linear;    // -2 * c1
  QuadRat constant;  // norm
};

CharPoly char_poly(const Quaternion& q);

/** Outcome of the torsion classification for units of H(o_K). */
enum class UnitOrder { One = 1, Two = 2, Four = 4, Infinite = 0 };

const char* unit_order_name(UnitOrder o);

/** Result of the unit test: the flag plus the computed reduced norm. */
struct UnitCheck {
  bool unit;
  QuadRat norm;
};

/**
 * True iff kq8_division holds for the ring, i.e. H(K) is a division ring:
 * d = 1 mod 8, or d > 0 with d = 2, 3 mod 4 or d = 5 mod 8.
 */
bool division_regime(const RingSpec& ring);

/**
 * Unit test for integral quaternions in the division regime: unit iff the
 * reduced norm is +1 or -1.  Errors on non-integral input or outside the
 * regime.
 */
UnitCheck is_unit(const Quaternion& q);

/**
 * Multiplicative order of a unit: norm -1 gives infinite order; norm +1
 * gives order 4 when c1 = 0, order 1 or 2 when the unit is +-1, and
 * infinite order otherwise.  Restricted to the division regime.
 */
UnitOrder unit_order(const Quaternion& q);

/**
 * Canonical text form.  Terms are listed for slots 1, i, j, k; each slot
 * prints integer coordinates against s = sqrt(d) when possible, otherwise
 * integral coordinates against h = theta, otherwise rational coordinates.
 * Coefficient magnitudes are always explicit, e.g. "6s+15i+5j+1k".
 */
std::string to_string(const Quaternion& q);

/** Parses the canonical text form; inverse of to_string. */
Quaternion parse_quaternion(RingSpec ring, const std::string& text);

}  // namespace qalg
