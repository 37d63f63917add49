#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qalg/quadfield.hpp"
#include "qalg/quaternion.hpp"

namespace qalg {

/** Families of finite groups the classifier understands. */
enum class GroupKind {
  Abelian,        // given by invariant factors
  Hamiltonian2,   // E x Q8 with E elementary abelian of rank ham_rank
  S3,
  D4,             // dihedral of order 8
  Q12,            // dicyclic of order 12
  C4SemiC4,       // C4 : C4
};

/** A finite group in the classifier's vocabulary. */
struct GroupDescriptor {
  GroupKind kind = GroupKind::Abelian;
  std::vector<std::int64_t> invariant_factors;  // Abelian: f1 | f2 | ... | fr
  int ham_rank = 0;                             // Hamiltonian2: rank of E

  std::int64_t order() const;
  /** Exponent; defined for abelian groups. */
  std::int64_t exponent() const;
  bool is_abelian() const { return kind == GroupKind::Abelian; }
  bool is_cyclic() const {
    return kind == GroupKind::Abelian && invariant_factors.size() <= 1;
  }
  bool operator==(const GroupDescriptor& o) const;
};

/**
 * Parses the group grammar: "C8", "C2^3", "C2xC4", "E4xQ8", "C2xQ8", "Q8",
 * "S3", "D4", "Q12", "C4:C4".  Abelian products are reduced to invariant
 * factors.
 */
GroupDescriptor parse_group(const std::string& text);

/** Canonical text form, e.g. "C2^2xC4", "C2xQ8", "C4:C4". */
std::string group_to_string(const GroupDescriptor& g);

/** Number of elements of each order m, for abelian groups. */
std::vector<std::pair<std::int64_t, std::int64_t>> element_order_counts(
    const GroupDescriptor& g);

/** One simple component of K[G] for abelian G. */
struct WedderburnComponent {
  std::int64_t m;        // cyclotomic level: component attached to order-m elements
  bool splits;           // K tensor Q(zeta_m) splits into two copies of Q(zeta_m)
  int copies;            // 2 if splits, else 1
  std::int64_t degree;   // degree over Q of one field copy
  std::int64_t r1, r2;   // signature of one field copy
  std::int64_t unit_rank;     // Dirichlet rank r1 + r2 - 1 of one field copy
  std::int64_t multiplicity;  // number of such components in K[G]
};

/**
 * Wedderburn decomposition of K[G] for abelian G: one entry per divisor m of
 * the exponent, with multiplicity #(order-m elements) / phi(m).  The tensor
 * K(zeta_m) splits iff |disc K| divides m.
 */
std::vector<WedderburnComponent> wedderburn(const RingSpec& ring,
                                            const GroupDescriptor& g);

/** Rank data for U1(o_K[G]) derived from the Wedderburn decomposition. */
struct RankReport {
  std::vector<WedderburnComponent> components;
  std::int64_t total_rank;  // sum of multiplicity * copies * unit_rank
  std::int64_t base_rank;   // rank of U(o_K): 1 if d > 1, else 0
  std::int64_t u1_rank;     // total_rank - base_rank
};

/** Derived rank of U1(o_K[C_n]); requires abelian G. */
RankReport unit_rank(const RingSpec& ring, const GroupDescriptor& g);

/**
 * Published rank of U1(o_K[C_n]) for n in {2,3,4,5,6,8}; errors with
 * NotInTable for other n.
 */
std::int64_t published_rank(std::int64_t n, std::int64_t d);

/** Discrepancy note when the derived rank differs from the published one. */
std::optional<std::string> rank_discrepancy(const RingSpec& ring, std::int64_t n);

/** Classification outcome. */
struct Verdict {
  bool hyperbolic;
  std::string citation;                  // which clause decided
  std::optional<std::string> rank_note;  // consistency note when check was requested
};

/**
 * Decides hyperbolicity of U1(o_K[G]) by the published classification.
 * With check = true, abelian inputs also carry a note comparing the verdict
 * against the derived rank (hyperbolic should mean u1_rank <= 1).
 */
Verdict classify_hyperbolic(const RingSpec& ring, const GroupDescriptor& g,
                            bool check = false);

/** True iff H(K) is a division ring. */
inline bool kq8_division(const RingSpec& ring) { return division_regime(ring); }

/** The named groups whose torsion-unit groups admit hyperbolic complements. */
std::vector<GroupDescriptor> torsion_candidates();

/** True iff G appears in the admissible torsion list. */
bool torsion_admissible(const GroupDescriptor& g);

/** An element a0 + a1*g of o_K[C2]. */
struct C2Elem {
  QuadRat a0, a1;

  C2Elem mul(const C2Elem& o) const {
    return C2Elem{a0 * o.a0 + a1 * o.a1, a0 * o.a1 + a1 * o.a0};
  }
  bool operator==(const C2Elem& o) const { return a0 == o.a0 && a1 == o.a1; }
};

/** A unit of o_K[C2] together with its inverse and the driving unit e = 2a-1. */
struct C2Unit {
  C2Elem u, v;
  QuadRat e;
};

/**
 * The unit a + (1-a)g of o_K[C2], defined whenever e = 2a-1 is a unit of o_K;
 * a must be integral and different from 0 and 1.
 */
C2Unit c2_unit(const QuadRat& a);

/** Structure of U1(o_K[C2]). */
struct C2UnitGroup {
  bool trivial;                 // d < 0: only the trivial units remain
  std::string structure;        // "C2" or "C2 x Z"
  std::optional<C2Elem> free_generator;  // the unit of infinite order when d > 1
  int eps_mod2_order;           // power of eps used in the generator
};

C2UnitGroup c2_unit_generator(const RingSpec& ring);

/** A 2x2 matrix over K. */
struct Mat2Q {
  QuadRat a, b, c, d;  // [[a, b], [c, d]]

  static Mat2Q identity(RingSpec ring);
  Mat2Q operator*(const Mat2Q& o) const;
  bool operator==(const Mat2Q& o) const;
};

/** 2x2 unipotent pair generating a free abelian group of rank 2. */
struct Z2Witness {
  Mat2Q u, v;  // 1 + E12 and 1 + sqrt(d) E12
  std::int64_t bound;
  bool verified;
};

/**
 * The commuting pair u = 1 + E12, v = 1 + sqrt(d) E12; verifies
 * u^a v^b = 1 + (a + b sqrt(d)) E12 and that it is 1 only at a = b = 0,
 * for all |a|, |b| <= bound.
 */
Z2Witness z2_witness(const RingSpec& ring, std::int64_t bound);

}  // namespace qalg
