#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/numeric.hpp"

namespace qalg {

/** Generator of the ring of integers: sqrt(d), or (1+sqrt(d))/2 when d = 1 mod 4. */
enum class ThetaKind { SqrtD, HalfOnePlusSqrtD };

/** A quadratic field Q[sqrt(d)] together with its ring of integers Z[theta]. */
struct RingSpec {
  std::int64_t d = 0;
  ThetaKind theta = ThetaKind::SqrtD;
  std::int64_t discriminant = 0;

  bool is_real() const { return d > 0; }
  bool operator==(const RingSpec& o) const { return d == o.d; }
};

/**
 * Validates d (square-free, not 0 or 1, |d| within bound) and derives the
 * theta kind and field discriminant.
 */
RingSpec make_ring(std::int64_t d, std::int64_t max_abs_d = 1000000000);

/**
 * An element x + y*sqrt(d) of Q[sqrt(d)] with exact rational coordinates.
 * Immutable value type; all arithmetic is exact.
 */
class QuadRat {
 public:
  QuadRat(RingSpec ring, Rat x, Rat y)
      : ring_(ring), x_(std::move(x)), y_(std::move(y)) {}

  static QuadRat integer(RingSpec ring, Int n) {
    return QuadRat(ring, Rat(std::move(n)), Rat(0));
  }
  /** a + b*theta in integral coordinates. */
  static QuadRat from_theta(RingSpec ring, const Int& a, const Int& b);
  /** The ring generator theta itself. */
  static QuadRat theta(RingSpec ring) { return from_theta(ring, 0, 1); }
  /** sqrt(d) as an element, i.e. (x, y) = (0, 1). */
  static QuadRat root(RingSpec ring) { return QuadRat(ring, Rat(0), Rat(1)); }

  const RingSpec& ring() const { return ring_; }
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  QuadRat operator+(const QuadRat& o) const;
  QuadRat operator-(const QuadRat& o) const;
  QuadRat operator*(const QuadRat& o) const;
  QuadRat operator-() const { return QuadRat(ring_, -x_, -y_); }
  bool operator==(const QuadRat& o) const;

  /** Exact field division; divisor must be nonzero. */
  QuadRat div(const QuadRat& o) const;
  /** Galois conjugate x - y*sqrt(d). */
  QuadRat conj() const { return QuadRat(ring_, x_, -y_); }
  /** Field norm x^2 - d*y^2, a rational. */
  Rat norm() const;
  /** Field trace 2x, a rational. */
  Rat trace() const { return x_ * 2; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_one() const { return x_ == 1 && y_ == 0; }
  /** True iff the element lies in Z[theta]. */
  bool is_integral() const;
  /** True iff the element lies in Q (y = 0). */
  bool is_rational() const { return y_ == 0; }

  /** Coordinates (a, b) with value a + b*theta. */
  std::pair<Rat, Rat> theta_coords() const;

  /** Sign of the real embedding x + y*sqrt(d); requires d > 0. */
  int sign_real() const;
  /** Comparison in the real embedding; requires d > 0. */
  bool greater_than(const QuadRat& o) const { return (*this - o).sign_real() > 0; }

  /** Multiplicative inverse; element must be nonzero. */
  QuadRat inverse() const;
  /** Integer power, negative exponents via the inverse. */
  QuadRat pow(std::int64_t n) const;

 private:
  void check_same_ring(const QuadRat& o) const;

  RingSpec ring_;
  Rat x_, y_;
};

/** Fundamental unit data for a real quadratic field. */
struct FundUnit {
  QuadRat eps;     // normalized so eps > 1 in the real embedding
  int norm;        // +1 or -1
  int mod2_order;  // multiplicative order of eps in (o_K / 2 o_K)*
};

/** Continued-fraction expansion of theta: period and partial quotients. */
struct ThetaCF {
  std::vector<Int> pre;    // partial quotients before the cycle
  std::vector<Int> cycle;  // one full period
};

/** Fundamental unit of o_K via the continued fraction of theta; requires d > 1. */
FundUnit fundamental_unit(const RingSpec& ring);

/** Continued fraction of theta; requires d > 1. */
ThetaCF theta_cf(const RingSpec& ring);

/** A solution of X^2 - D*Y^2 = rhs over the order Z[sqrt(D)]. */
struct PellSolution {
  Int x;
  Int y;
  std::int64_t D;
  int rhs;  // +1 or -1
};

/**
 * Least positive solution of X^2 - D*Y^2 = rhs for rhs in {+1, -1};
 * D must be a positive non-square. Returns nothing when rhs = -1 is
 * unsolvable (even period).
 */
std::optional<PellSolution> pell_solve(std::int64_t D, int rhs);

/** n-th power of a Pell solution under the group law of Z[sqrt(D)]; n >= 1. */
PellSolution pell_nth(const PellSolution& s, std::int64_t n);

/** Congruence data of the unit group modulo 2 o_K. */
struct Mod2Exponent {
  int bound;        // exponent bound from the residue of d: 1, 2, or 3
  int exact_order;  // order of the fundamental unit (d > 1) or torsion generator (d < 0)
};

/**
 * Bound and exact multiplicative order modulo 2 o_K.  The bound depends only
 * on d mod 8: 1 when d = 1 mod 8, 2 when d = 2, 3 mod 4, 3 when d = 5 mod 8.
 */
Mod2Exponent unit_mod2_exponent(const RingSpec& ring);

/** Structure of the unit group of o_K. */
struct UnitGroupInfo {
  int torsion_order;        // 2, 4 (d = -1), or 6 (d = -3)
  int rank;                 // 0 for d < 0, 1 for d > 1
  std::string structure;    // "C2", "C4", "C6", or "C2 x Z"
  QuadRat torsion_gen;      // generator of the torsion part
};

UnitGroupInfo unit_group_torsion(const RingSpec& ring);

/** Order of the class of v in (o_K / 2 o_K)*; v must be integral and invertible mod 2. */
int mod2_order(const QuadRat& v);

}  // namespace qalg
