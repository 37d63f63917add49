#include "qalg/unitfactory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace qalg {

namespace {

constexpr std::int64_t kThreeSquaresMax = 10'000'000'000LL;
constexpr std::int64_t kTableMax = 10'000'000LL;
constexpr std::int64_t kEnumBoundMax = 1'000'000LL;
constexpr std::int64_t kEnumWorkMax = 50'000'000LL;
constexpr std::int64_t kPowerMax = 10'000LL;

std::int64_t dd_of(const RingSpec& ring) { return -ring.d; }

void require_imaginary(const RingSpec& ring, const char* what) {
  if (ring.d >= 0) {
    fail(Errc::wrong_regime, std::string(what) + " needs an imaginary ring Q[sqrt(-d)]");
  }
}

void require_mod8(const RingSpec& ring, const char* what) {
  require_imaginary(ring, what);
  if (mod_pos(dd_of(ring), 8) != 7) {
    fail(Errc::wrong_regime,
         std::string(what) + " needs d = 7 mod 8; got d = " + std::to_string(dd_of(ring)));
  }
}

void require_slot(Slot s) {
  if (s < 0 || s > 3) fail(Errc::invalid_argument, "basis slot must be 0..3");
}

QuadRat sqrt_md(const RingSpec& ring, const Int& m) {
  return QuadRat(ring, Rat(0), Rat(m));
}

// Scalar slot, when part of the support, carries the rational coefficient;
// with both slots imaginary the layout is m*sqrt(-d) on xi and p on psi.
Quaternion pell2_build(const RingSpec& ring, const Int& p, const Int& m, Slot xi,
                       Slot psi) {
  QuadRat z = QuadRat::integer(ring, 0);
  std::array<QuadRat, 4> c{z, z, z, z};
  if (xi == 0) {
    c[0] = QuadRat::integer(ring, p);
    c[psi] = sqrt_md(ring, m);
  } else if (psi == 0) {
    c[0] = QuadRat::integer(ring, p);
    c[xi] = sqrt_md(ring, m);
  } else {
    c[xi] = sqrt_md(ring, m);
    c[psi] = QuadRat::integer(ring, p);
  }
  return Quaternion(c[0], c[1], c[2], c[3]);
}

UnitWitness make_pell2(const RingSpec& ring, const Int& p, const Int& m, Slot xi,
                       Slot psi) {
  require_slot(xi);
  require_slot(psi);
  if (xi == psi) fail(Errc::invalid_argument, "xi and psi must differ");
  Int lhs = p * p - Int(dd_of(ring)) * m * m;
  if (lhs != 1) {
    fail(Errc::invalid_argument, "(p, m) does not solve X^2 - d Y^2 = 1");
  }
  return UnitWitness{pell2_build(ring, p, m, xi, psi), 1, Family::Pell2,
                     Pell2Seed{p, m, xi, psi}};
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Pell2: return "pell2";
    case Family::Pell3: return "pell3";
    case Family::Pell4: return "pell4";
    case Family::Gauss: return "gauss";
    case Family::Eqgr: return "eqgr";
    case Family::Adhoc: return "adhoc";
  }
  return "?";
}

UnitWitness pell2_unit(const RingSpec& ring, const PellSolution& eps, Slot xi,
                       Slot psi) {
  require_mod8(ring, "pell2_unit");
  if (eps.D != dd_of(ring)) {
    fail(Errc::invalid_argument, "Pell solution is for a different d");
  }
  if (eps.rhs != 1) {
    fail(Errc::norm_minus_one_seed, "2-Pell units need a norm +1 seed");
  }
  return make_pell2(ring, eps.x, eps.y, xi, psi);
}

UnitWitness pell2_unit(const RingSpec& ring, const FundUnit& eps, Slot xi,
                       Slot psi) {
  require_mod8(ring, "pell2_unit");
  if (eps.eps.ring().d != dd_of(ring)) {
    fail(Errc::invalid_argument, "fundamental unit is for a different d");
  }
  if (eps.norm != 1) {
    fail(Errc::norm_minus_one_seed, "2-Pell units need a norm +1 seed");
  }
  auto [a, b] = eps.eps.theta_coords();
  // d = 7 mod 8 implies theta = sqrt(d), so the coordinates are (p, m).
  return make_pell2(ring, numerator(a), numerator(b), xi, psi);
}

UnitWitness pell2_power(const UnitWitness& w, std::int64_t n) {
  const auto* seed = std::get_if<Pell2Seed>(&w.seed);
  if (w.family != Family::Pell2 || seed == nullptr) {
    fail(Errc::wrong_family, "pell2_power needs a 2-Pell witness");
  }
  if (seed->xi != 0) {
    fail(Errc::wrong_family, "pell2_power needs the scalar form p + m sqrt(-d) psi");
  }
  if (n < -kPowerMax || n > kPowerMax) {
    fail(Errc::out_of_range, "power exponent exceeds the configured maximum");
  }
  const RingSpec& ring = w.u.ring();
  Int dd = dd_of(ring);
  Int p = seed->p, m = seed->m;
  if (n < 0) {
    m = -m;  // inverse of a norm +1 unit
    n = -n;
  }
  Int rp = 1, rm = 0;
  while (n > 0) {
    if (n & 1) {
      Int np = rp * p + dd * rm * m;
      Int nm = rp * m + rm * p;
      rp = np;
      rm = nm;
    }
    Int sp = p * p + dd * m * m;
    Int sm = 2 * p * m;
    p = sp;
    m = sm;
    n >>= 1;
  }
  return UnitWitness{pell2_build(ring, rp, rm, 0, seed->psi), 1, Family::Pell2,
                     Pell2Seed{rp, rm, 0, seed->psi}};
}

UnitWitness pell3_unit(const RingSpec& ring, Slot xi, Slot psi, Slot phi) {
  require_imaginary(ring, "pell3_unit");
  require_slot(xi);
  require_slot(psi);
  require_slot(phi);
  if (xi == psi || xi == phi || psi == phi) {
    fail(Errc::invalid_argument, "xi, psi, phi must be pairwise distinct");
  }
  std::int64_t dd = dd_of(ring);
  if (dd % 2 == 0 || !is_square_free(2 * dd)) {
    fail(Errc::two_d_not_square_free,
         "3-Pell units need 2d square-free; got d = " + std::to_string(dd));
  }
  auto s = pell_solve(2 * dd, 1);
  if (!s) fail(Errc::no_solution, "X^2 - 2d Y^2 = 1 has no solution");
  Int p = (s->x + 1) / 2;  // x is odd: x^2 = 1 + 2d y^2
  Int m = s->y;
  QuadRat z = QuadRat::integer(ring, 0);
  std::array<QuadRat, 4> c{z, z, z, z};
  c[xi] = sqrt_md(ring, m);
  c[psi] = QuadRat::integer(ring, p);
  c[phi] = QuadRat::integer(ring, 1 - p);
  return UnitWitness{Quaternion(c[0], c[1], c[2], c[3]), 1, Family::Pell3,
                     Pell3Seed{s->x, s->y, xi, psi, phi}};
}

UnitWitness pell4_unit(const RingSpec& ring) {
  require_mod8(ring, "pell4_unit");
  std::int64_t dd = dd_of(ring);
  auto s = pell_solve(dd, 1);
  if (!s) fail(Errc::no_solution, "X^2 - d Y^2 = 1 has no solution");
  Int x = s->x, y = s->y;
  if (y % 2 != 0) {
    // Square the solution to force an even Y, keeping X odd.
    Int nx = x * x + Int(dd) * y * y;
    Int ny = 2 * x * y;
    x = nx;
    y = ny;
  }
  Int m = y / 2;
  Int p = (1 + x) / 2;
  Int q = 1 - p;
  Quaternion u(sqrt_md(ring, m), sqrt_md(ring, m), QuadRat::integer(ring, p),
               QuadRat::integer(ring, q));
  return UnitWitness{u, 1, Family::Pell4, Pell4Seed{x, m}};
}

bool three_squares_exists(const Int& n) {
  if (n < 0) return false;
  Int v = n;
  while (v != 0 && v % 4 == 0) v /= 4;
  return v % 8 != 7;
}

namespace {

std::int64_t checked_n(const Int& n) {
  if (n < 0 || n > kThreeSquaresMax) {
    fail(Errc::out_of_range, "three-squares argument outside [0, 10^10]");
  }
  return static_cast<std::int64_t>(n);
}

// Descending-p scan; emits canonical triples largest-first.
template <typename Sink>
void three_squares_scan(std::int64_t n, Sink&& sink) {
  for (std::int64_t p = isqrt64(n); 3 * p * p >= n; --p) {
    std::int64_t m = n - p * p;
    std::int64_t q = std::min(p, isqrt64(m));
    for (; 2 * q * q >= m; --q) {
      std::int64_t rr = m - q * q;
      std::int64_t r = isqrt64(rr);
      if (r * r == rr && r <= q) {
        if (!sink(Triple{p, q, r})) return;
      }
    }
    if (p == 0) break;
  }
}

}  // namespace

std::optional<Triple> three_squares(const Int& n) {
  std::int64_t n64 = checked_n(n);
  std::optional<Triple> out;
  three_squares_scan(n64, [&](const Triple& t) {
    out = t;
    return false;
  });
  return out;
}

std::vector<Triple> three_squares_all(const Int& n) {
  std::int64_t n64 = checked_n(n);
  std::vector<Triple> out;
  three_squares_scan(n64, [&](const Triple& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<signed char> three_squares_table_serial(std::int64_t limit) {
  if (limit < 0 || limit > kTableMax) {
    fail(Errc::out_of_range, "table limit outside [0, 10^7]");
  }
  std::vector<signed char> t(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t p = 0; p * p <= limit; ++p) {
    for (std::int64_t q = 0; q <= p && p * p + q * q <= limit; ++q) {
      std::int64_t base = p * p + q * q;
      for (std::int64_t r = 0; r <= q && base + r * r <= limit; ++r) {
        t[static_cast<std::size_t>(base + r * r)] = 1;
      }
    }
  }
  return t;
}

std::vector<signed char> three_squares_table(std::int64_t limit) {
  if (limit < 0 || limit > kTableMax) {
    fail(Errc::out_of_range, "table limit outside [0, 10^7]");
  }
  std::vector<signed char> t(static_cast<std::size_t>(limit) + 1, 0);
  std::int64_t pmax = isqrt64(limit);
#pragma omp parallel
  {
    std::vector<signed char> local(t.size(), 0);
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t p = 0; p <= pmax; ++p) {
      for (std::int64_t q = 0; q <= p && p * p + q * q <= limit; ++q) {
        std::int64_t base = p * p + q * q;
        for (std::int64_t r = 0; r <= q && base + r * r <= limit; ++r) {
          local[static_cast<std::size_t>(base + r * r)] = 1;
        }
      }
    }
#pragma omp critical
    {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (local[i]) t[i] = 1;
      }
    }
  }
  return t;
}

std::vector<std::array<std::int64_t, 3>> expand_triple(const Triple& t) {
  std::set<std::array<std::int64_t, 3>> out;
  std::array<std::int64_t, 3> v{t.p, t.q, t.r};
  std::sort(v.begin(), v.end());
  do {
    for (int mask = 0; mask < 8; ++mask) {
      std::array<std::int64_t, 3> s = v;
      bool ok = true;
      for (int b = 0; b < 3; ++b) {
        if (mask & (1 << b)) {
          if (s[b] == 0) {
            ok = false;  // no signed variant for zero entries
            break;
          }
          s[b] = -s[b];
        }
      }
      if (ok) out.insert(s);
    }
  } while (std::next_permutation(v.begin(), v.end()));
  return std::vector<std::array<std::int64_t, 3>>(out.begin(), out.end());
}

std::vector<UnitWitness> gauss_units(const RingSpec& ring, const Int& m,
                                     int target, bool all) {
  require_mod8(ring, "gauss_units");
  if (target != 1 && target != -1) {
    fail(Errc::invalid_argument, "target norm must be +1 or -1");
  }
  Int n = m * m * Int(dd_of(ring)) + target;
  if (n < 0 || !three_squares_exists(n)) {
    fail(Errc::no_decomposition,
         "m^2 d " + std::string(target == 1 ? "+" : "-") +
             " 1 is not a sum of three squares");
  }
  std::vector<Triple> triples;
  if (all) {
    triples = three_squares_all(n);
  } else {
    auto t = three_squares(n);
    if (!t) fail(Errc::no_decomposition, "no decomposition found");
    triples.push_back(*t);
  }
  std::vector<UnitWitness> out;
  out.reserve(triples.size());
  for (const Triple& t : triples) {
    Quaternion u(sqrt_md(ring, m), QuadRat::integer(ring, t.p),
                 QuadRat::integer(ring, t.q), QuadRat::integer(ring, t.r));
    out.push_back(UnitWitness{u, target, Family::Gauss, GaussSeed{m, t, target}});
  }
  return out;
}

namespace {

Quaternion eqgr_build(const RingSpec& ring, const Int& m, const Int& p, int sign) {
  Rat half_m = Rat(m) / 2;
  Rat half = Rat(1) / 2;
  QuadRat a(ring, half_m, half);
  QuadRat b(ring, sign * half_m, Rat(-sign) * half);
  return Quaternion(a, b, QuadRat::integer(ring, p), QuadRat::integer(ring, 0));
}

}  // namespace

EqgrResult eqgr_solve(const RingSpec& ring, int target_norm) {
  require_imaginary(ring, "eqgr_solve");
  if (target_norm != 1 && target_norm != -1) {
    fail(Errc::invalid_argument, "target norm must be +1 or -1");
  }
  EqgrResult res;
  std::int64_t rhs = dd_of(ring) + 2 * target_norm;
  if (rhs < 0) return res;
  std::set<std::pair<Int, Int>> sols;
  for (std::int64_t m = 0; m * m <= rhs; ++m) {
    std::int64_t rem = rhs - m * m;
    if (rem % 2 != 0) continue;
    std::int64_t p;
    if (!is_square64(rem / 2, &p)) continue;
    for (Int ms : {Int(m), Int(-m)}) {
      for (Int ps : {Int(p), Int(-p)}) {
        sols.insert({ms, ps});
      }
    }
  }
  for (const auto& [m, p] : sols) {
    res.solutions.push_back(EqgrSolution{m, p});
  }
  if (mod_pos(dd_of(ring), 8) == 7) {
    for (const auto& s : res.solutions) {
      for (int sign : {1, -1}) {
        res.units.push_back(UnitWitness{
            eqgr_build(ring, s.m, s.p, sign), target_norm, Family::Eqgr,
            EqgrSeed{s.m, s.p, sign, 2 * target_norm}});
      }
    }
  }
  return res;
}

EqgrCensus eqgr_census(const RingSpec& ring, int target_norm) {
  require_mod8(ring, "eqgr_census");
  EqgrResult base = eqgr_solve(ring, target_norm);
  // Supports listed by their missing slot; 6 arrangements of the coefficients.
  static const int kSupports[4][3] = {
      {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  std::map<std::string, Quaternion> seen;
  for (const auto& s : base.solutions) {
    for (int sign : {1, -1}) {
      Rat half_m = Rat(s.m) / 2;
      Rat half = Rat(1) / 2;
      std::array<QuadRat, 3> coeff{QuadRat(ring, half_m, half),
                                   QuadRat(ring, sign * half_m, Rat(-sign) * half),
                                   QuadRat::integer(ring, s.p)};
      std::array<int, 3> idx{0, 1, 2};
      for (const auto& sup : kSupports) {
        idx = {0, 1, 2};
        do {
          QuadRat z = QuadRat::integer(ring, 0);
          std::array<QuadRat, 4> c{z, z, z, z};
          for (int k = 0; k < 3; ++k) c[sup[k]] = coeff[idx[k]];
          Quaternion u(c[0], c[1], c[2], c[3]);
          seen.emplace(to_string(u), u);
        } while (std::next_permutation(idx.begin(), idx.end()));
      }
    }
  }
  EqgrCensus census;
  for (const auto& [key, u] : seen) {
    census.units.push_back(u);
    ++census.total;
    UnitCheck uc = is_unit(u);
    bool ok = uc.unit && uc.norm == QuadRat::integer(ring, target_norm);
    int zero_slot = -1;
    int zeros = 0;
    for (int k = 0; k < 4; ++k) {
      if (u.coeff(k).is_zero()) {
        zero_slot = k;
        ++zeros;
      }
    }
    if (u.c1().is_zero()) {
      ++census.torsion;
      ok = ok && unit_order(u) == UnitOrder::Four;
    } else {
      ++census.with_one;
      ok = ok && unit_order(u) == UnitOrder::Infinite;
    }
    if (zeros == 1) ++census.per_support[zero_slot];
    census.all_verified = census.all_verified && ok;
  }
  return census;
}

EnumPattern EnumPattern::gauss_shape(std::int64_t m) {
  EnumPattern p;
  p.slots[0] = SlotSpec::fixed_sqrt(m);
  p.slots[1] = SlotSpec::free_int();
  p.slots[2] = SlotSpec::free_int();
  p.slots[3] = SlotSpec::free_int();
  return p;
}

EnumPattern EnumPattern::all_free() {
  EnumPattern p;
  for (auto& s : p.slots) s = SlotSpec::free_int();
  return p;
}

namespace {

struct EnumPlan {
  std::vector<int> free_slots;
  Int residual = 0;  // required sum of squares over the free slots
};

EnumPlan enum_plan(const RingSpec& ring, const EnumPattern& pattern, int norm,
                   std::int64_t bound) {
  if (norm != 1 && norm != -1) {
    fail(Errc::invalid_argument, "target norm must be +1 or -1");
  }
  if (bound < 0 || bound > kEnumBoundMax) {
    fail(Errc::out_of_range, "search bound outside [0, 10^6]");
  }
  EnumPlan plan;
  plan.residual = norm;
  for (int s = 0; s < 4; ++s) {
    switch (pattern.slots[s].kind) {
      case SlotSpec::Zero:
        break;
      case SlotSpec::FreeInt:
        plan.free_slots.push_back(s);
        break;
      case SlotSpec::FixedSqrt: {
        Int m = pattern.slots[s].m;
        plan.residual -= m * m * Int(ring.d);
        break;
      }
    }
  }
  std::int64_t k = static_cast<std::int64_t>(plan.free_slots.size());
  std::int64_t work = 1;
  for (std::int64_t i = 0; i + 1 < k; ++i) {
    work *= 2 * bound + 1;
    if (work > kEnumWorkMax) {
      fail(Errc::out_of_range, "enumeration work exceeds the configured maximum");
    }
  }
  return plan;
}

UnitWitness enum_witness(const RingSpec& ring, const EnumPattern& pattern,
                         int norm, const std::vector<int>& free_slots,
                         const std::vector<std::int64_t>& values) {
  QuadRat z = QuadRat::integer(ring, 0);
  std::array<QuadRat, 4> c{z, z, z, z};
  // FixedSqrt holds the multiplier of sqrt(ring.d).
  for (int s = 0; s < 4; ++s) {
    if (pattern.slots[s].kind == SlotSpec::FixedSqrt) {
      c[s] = QuadRat(ring, Rat(0), Rat(pattern.slots[s].m));
    }
  }
  for (std::size_t i = 0; i < free_slots.size(); ++i) {
    c[free_slots[i]] = QuadRat::integer(ring, values[i]);
  }
  Quaternion u(c[0], c[1], c[2], c[3]);
  return UnitWitness{u, norm, Family::Adhoc, AdhocSeed{to_string(u)}};
}

// Emits, in ascending order, every completion of the partially fixed free
// coordinates starting at index `from`, given the remaining square sum.
void enum_tail(const RingSpec& ring, const EnumPattern& pattern, int norm,
               const EnumPlan& plan, std::int64_t bound, std::size_t from,
               std::vector<std::int64_t>& values, const Int& remaining,
               std::vector<UnitWitness>& out) {
  std::size_t k = plan.free_slots.size();
  if (remaining < 0) return;
  if (from == k) {
    if (remaining == 0) {
      out.push_back(enum_witness(ring, pattern, norm, plan.free_slots, values));
    }
    return;
  }
  if (remaining > Int(4) * bound * bound) return;
  std::int64_t rem64 = static_cast<std::int64_t>(remaining);
  if (from + 1 == k) {
    std::int64_t rt;
    if (!is_square64(rem64, &rt) || rt > bound) return;
    if (rt > 0) {
      values[from] = -rt;
      out.push_back(enum_witness(ring, pattern, norm, plan.free_slots, values));
    }
    values[from] = rt;
    out.push_back(enum_witness(ring, pattern, norm, plan.free_slots, values));
    return;
  }
  for (std::int64_t v = -bound; v <= bound; ++v) {
    values[from] = v;
    enum_tail(ring, pattern, norm, plan, bound, from + 1, values,
              remaining - Int(v) * v, out);
  }
}

}  // namespace

std::vector<UnitWitness> enumerate_units_serial(const RingSpec& ring,
                                                const EnumPattern& pattern,
                                                int norm, std::int64_t bound) {
  EnumPlan plan = enum_plan(ring, pattern, norm, bound);
  std::vector<UnitWitness> out;
  std::vector<std::int64_t> values(plan.free_slots.size(), 0);
  enum_tail(ring, pattern, norm, plan, bound, 0, values, plan.residual, out);
  return out;
}

std::vector<UnitWitness> enumerate_units(const RingSpec& ring,
                                         const EnumPattern& pattern, int norm,
                                         std::int64_t bound) {
  EnumPlan plan = enum_plan(ring, pattern, norm, bound);
  if (plan.free_slots.size() < 2) {
    return enumerate_units_serial(ring, pattern, norm, bound);
  }
  std::int64_t width = 2 * bound + 1;
  std::vector<std::vector<UnitWitness>> buckets(
      static_cast<std::size_t>(width));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t idx = 0; idx < width; ++idx) {
    std::int64_t v = idx - bound;
    std::vector<std::int64_t> values(plan.free_slots.size(), 0);
    values[0] = v;
    enum_tail(ring, pattern, norm, plan, bound, 1, values,
              plan.residual - Int(v) * v, buckets[static_cast<std::size_t>(idx)]);
  }
  std::vector<UnitWitness> out;
  for (auto& b : buckets) {
    for (auto& w : b) out.push_back(std::move(w));
  }
  return out;
}

Quaternion rebuild(const RingSpec& ring, Family family, const Seed& seed) {
  switch (family) {
    case Family::Pell2: {
      const auto* s = std::get_if<Pell2Seed>(&seed);
      if (!s) break;
      return pell2_build(ring, s->p, s->m, s->xi, s->psi);
    }
    case Family::Pell3: {
      const auto* s = std::get_if<Pell3Seed>(&seed);
      if (!s) break;
      Int p = (s->x + 1) / 2;
      QuadRat z = QuadRat::integer(ring, 0);
      std::array<QuadRat, 4> c{z, z, z, z};
      c[s->xi] = sqrt_md(ring, s->y);
      c[s->psi] = QuadRat::integer(ring, p);
      c[s->phi] = QuadRat::integer(ring, 1 - p);
      return Quaternion(c[0], c[1], c[2], c[3]);
    }
    case Family::Pell4: {
      const auto* s = std::get_if<Pell4Seed>(&seed);
      if (!s) break;
      Int p = (1 + s->x) / 2;
      return Quaternion(sqrt_md(ring, s->m), sqrt_md(ring, s->m),
                        QuadRat::integer(ring, p),
                        QuadRat::integer(ring, 1 - p));
    }
    case Family::Gauss: {
      const auto* s = std::get_if<GaussSeed>(&seed);
      if (!s) break;
      return Quaternion(sqrt_md(ring, s->m), QuadRat::integer(ring, s->t.p),
                        QuadRat::integer(ring, s->t.q),
                        QuadRat::integer(ring, s->t.r));
    }
    case Family::Eqgr: {
      const auto* s = std::get_if<EqgrSeed>(&seed);
      if (!s) break;
      return eqgr_build(ring, s->m, s->p, s->sign);
    }
    case Family::Adhoc: {
      const auto* s = std::get_if<AdhocSeed>(&seed);
      if (!s) break;
      return parse_quaternion(ring, s->text);
    }
  }
  fail(Errc::wrong_family, "seed does not match the declared family");
}

}  // namespace qalg
