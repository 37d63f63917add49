#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qalg/quaternion.hpp"
#include "qalg/unitfactory.hpp"

namespace qalg {

/**
 * Outcome of a bounded relation search in the subgroup generated by two
 * units.  Words are over x, X = x^-1, y, Y = y^-1, freely reduced; an empty
 * relation list is evidence of freeness, never a proof.
 */
struct WordReport {
  int max_length = 0;
  std::vector<std::string> relations_found;  // DFS preorder
  std::int64_t elements_examined = 0;

  bool clean() const { return relations_found.empty(); }
};

/**
 * Whether the cyclic groups generated by two scalar-form 2-Pell witnesses
 * intersect trivially.  Distinct psi slots give true via the support
 * argument; the bound adds a brute-force cross-check of small powers.
 */
bool powers_disjoint(const UnitWitness& x, const UnitWitness& y,
                     std::int64_t bound);

/** Evaluates every freely reduced word of length <= L exactly. */
WordReport no_relation_up_to(const Quaternion& x, const Quaternion& y, int L);
WordReport no_relation_up_to_serial(const Quaternion& x, const Quaternion& y,
                                    int L);

/**
 * Smallest m <= M whose power pair (x^m, y^m) shows no relation up to
 * length L; evidence-level only.
 */
std::optional<int> find_free_power(const Quaternion& x, const Quaternion& y,
                                   int M, int L);

}  // namespace qalg
