#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qalg/quadfield.hpp"
#include "qalg/quaternion.hpp"

namespace qalg {

// Canonical three-square decomposition, p >= q >= r >= 0.
struct Triple {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  bool operator==(const Triple&) const = default;
};

enum class Family { Pell2, Pell3, Pell4, Gauss, Eqgr, Adhoc };

const char* family_name(Family f);

// Basis slots of H(K): 0 = 1, 1 = i, 2 = j, 3 = k.
using Slot = int;

// eps = p + m*sqrt(dd) of norm +1; coefficient layout per (xi, psi).
struct Pell2Seed {
  Int p;
  Int m;
  Slot xi = 0;
  Slot psi = 0;
};

// Minimal solution of X^2 - 2*dd*Y^2 = 1 together with the slot choice.
struct Pell3Seed {
  Int x;
  Int y;
  Slot xi = 0;
  Slot psi = 0;
  Slot phi = 0;
};

// Solution of X^2 - 4*dd*m^2 = 1 with X odd.
struct Pell4Seed {
  Int x;
  Int m;
};

struct GaussSeed {
  Int m;
  Triple t;
  int target = 1;
};

// m^2 + 2p^2 = dd + target; sign picks the i-slot variant (m -+ sqrt(-dd))/2.
struct EqgrSeed {
  Int m;
  Int p;
  int sign = 1;
  int target = 2;
};

// Free-form witness; the canonical text is enough to replay it.
struct AdhocSeed {
  std::string text;
};

using Seed =
    std::variant<Pell2Seed, Pell3Seed, Pell4Seed, GaussSeed, EqgrSeed, AdhocSeed>;

struct UnitWitness {
  Quaternion u;
  int norm = 1;
  Family family = Family::Adhoc;
  Seed seed = AdhocSeed{};
};

// Rebuilds the quaternion a seed describes; witnesses satisfy
// rebuild(ring, family, seed) == u exactly.
Quaternion rebuild(const RingSpec& ring, Family family, const Seed& seed);

UnitWitness pell2_unit(const RingSpec& ring, const PellSolution& eps, Slot xi,
                       Slot psi);
UnitWitness pell2_unit(const RingSpec& ring, const FundUnit& eps, Slot xi,
                       Slot psi);

// n-th power of a scalar-form 2-Pell witness, computed on the seed.
UnitWitness pell2_power(const UnitWitness& w, std::int64_t n);

UnitWitness pell3_unit(const RingSpec& ring, Slot xi, Slot psi, Slot phi);
UnitWitness pell4_unit(const RingSpec& ring);

bool three_squares_exists(const Int& n);
std::optional<Triple> three_squares(const Int& n);
std::vector<Triple> three_squares_all(const Int& n);

// decomposable[n] = 1 iff n is a sum of three squares, 0 <= n <= limit.
std::vector<signed char> three_squares_table(std::int64_t limit);
std::vector<signed char> three_squares_table_serial(std::int64_t limit);

// All signed, ordered variants of a canonical triple, ascending lex order.
std::vector<std::array<std::int64_t, 3>> expand_triple(const Triple& t);

std::vector<UnitWitness> gauss_units(const RingSpec& ring, const Int& m,
                                     int target, bool all);

struct EqgrSolution {
  Int m;
  Int p;
  bool operator==(const EqgrSolution&) const = default;
};

struct EqgrResult {
  std::vector<EqgrSolution> solutions;  // ascending (m, p)
  std::vector<UnitWitness> units;       // empty outside the dd = 7 mod 8 regime
};

EqgrResult eqgr_solve(const RingSpec& ring, int target_norm);

// Distinct units obtained by distributing the coefficient triple of each
// solution over every 3-element support, as exact quaternions.
struct EqgrCensus {
  std::vector<Quaternion> units;           // canonical text order
  std::int64_t total = 0;
  std::int64_t with_one = 0;               // scalar slot occupied; infinite order
  std::int64_t torsion = 0;                // scalar slot empty; order 4
  std::array<std::int64_t, 4> per_support{};  // indexed by the missing slot
  bool all_verified = true;
};

EqgrCensus eqgr_census(const RingSpec& ring, int target_norm);

struct SlotSpec {
  enum Kind { Zero, FreeInt, FixedSqrt } kind = Zero;
  std::int64_t m = 0;

  static SlotSpec zero() { return SlotSpec{Zero, 0}; }
  static SlotSpec free_int() { return SlotSpec{FreeInt, 0}; }
  static SlotSpec fixed_sqrt(std::int64_t m) { return SlotSpec{FixedSqrt, m}; }
};

struct EnumPattern {
  std::array<SlotSpec, 4> slots{};

  // m*sqrt(-d) on the scalar slot, free integers on i, j, k.
  static EnumPattern gauss_shape(std::int64_t m);
  static EnumPattern all_free();
};

std::vector<UnitWitness> enumerate_units(const RingSpec& ring,
                                         const EnumPattern& pattern, int norm,
                                         std::int64_t bound);
std::vector<UnitWitness> enumerate_units_serial(const RingSpec& ring,
                                                const EnumPattern& pattern,
                                                int norm, std::int64_t bound);

}  // namespace qalg
