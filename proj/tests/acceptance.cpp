// Acceptance gate: ten fixed criteria, one line each, exit code = number of
// failed criteria.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qalg/freeness.hpp"
#include "qalg/groupring.hpp"
#include "qalg/quadfield.hpp"
#include "qalg/quaternion.hpp"
#include "qalg/unitfactory.hpp"

using namespace qalg;
using std::int64_t;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& what,
            const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool square_free(int64_t n) {
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::string triple_text(const Triple& t) {
  std::ostringstream s;
  s << "(" << t.p << "," << t.q << "," << t.r << ")";
  return s.str();
}

bool is_one_mod2(const QuadRat& v) {
  auto [a, b] = (v - QuadRat::integer(v.ring(), 1)).theta_coords();
  if (!rat_is_int(a) || !rat_is_int(b)) return false;
  return numerator(a) % 2 == 0 && numerator(b) % 2 == 0;
}

// Minimal unit > 1 by ascending Y in X^2 - d Y^2 = -4, +4.
struct OracleUnit {
  int64_t x2, y2;
  int norm;
};

std::optional<OracleUnit> brute_fundamental(int64_t d, int64_t y_max) {
  bool half_ok = mod_pos(d, 4) == 1;
  for (int64_t y = 1; y <= y_max; ++y) {
    for (int rhs : {-4, 4}) {
      int64_t xx = d * y * y + rhs;
      if (xx <= 0) continue;
      int64_t x;
      if (!is_square64(xx, &x)) continue;
      if (!half_ok && (x % 2 != 0 || y % 2 != 0)) continue;
      return OracleUnit{x, y, rhs < 0 ? -1 : 1};
    }
  }
  return std::nullopt;
}

Quaternion random_integral(RingSpec ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-9, 9);
  auto pick = [&]() { return QuadRat::from_theta(ring, coef(rng), coef(rng)); };
  return Quaternion(pick(), pick(), pick(), pick());
}

void criterion1() {
  bool ok = true;
  std::string detail;
  auto check_norm = [&](int64_t dd, const std::string& text, int64_t want) {
    RingSpec ring = make_ring(-dd);
    Quaternion q = parse_quaternion(ring, text);
    if (!(q.norm() == QuadRat::integer(ring, want))) {
      ok = false;
      if (detail.empty()) {
        detail = "N(" + text + ") over d=" + std::to_string(dd) +
                 " is " + to_string(Quaternion(q.norm(),
                                                QuadRat::integer(ring, 0),
                                                QuadRat::integer(ring, 0),
                                                QuadRat::integer(ring, 0))) +
                 ", wanted " + std::to_string(want);
      }
    }
  };
  check_norm(7, "6s+15i+5j+1k", -1);
  check_norm(23, "5s+23i+6j+3k", -1);
  check_norm(23, "2s+8i+5j+2k", 1);
  check_norm(15, "10s+36i+14j+3k", 1);
  check_norm(23, "3588s+12168i+12167j", 1);

  RingSpec r15 = make_ring(-15);
  Quaternion t = parse_quaternion(r15, "-3/2i-1/2si-3/2j+1/2sj+2k");
  if (unit_order(t) != UnitOrder::Four) {
    ok = false;
    if (detail.empty()) detail = "torsion unit order is not 4";
  }
  report(1, ok, "pinned unit norms and the order-4 torsion unit", detail);
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Triple> want = {{15, 5, 1}, {13, 9, 1}, {11, 11, 3}};
  std::vector<UnitWitness> ws = gauss_units(make_ring(-7), 6, -1, true);
  std::vector<Triple> got;
  for (const auto& w : ws) {
    got.push_back(std::get<GaussSeed>(w.seed).t);
  }
  double dt = seconds_since(t0);
  bool ok = got == want;
  std::string detail;
  if (!ok) {
    detail = "gauss(7, m=6, norm -1) decompositions: expected";
    for (const auto& t : want) detail += " " + triple_text(t);
    detail += ", got";
    for (const auto& t : got) detail += " " + triple_text(t);
  }
  if (dt >= 1.0) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("took ") +
              std::to_string(dt) + "s, limit 1s";
  }
  report(2, ok, "gauss family at d=7, m=6, norm -1", detail);
}

void criterion3() {
  bool ok = true;
  std::string detail;
  auto solset = [](int64_t dd, int target) {
    return eqgr_solve(make_ring(-dd), target).solutions;
  };
  auto sol_text = [](const std::vector<EqgrSolution>& v) {
    std::ostringstream s;
    for (const auto& e : v) s << " (" << e.m << "," << e.p << ")";
    return s.str();
  };

  std::vector<EqgrSolution> want15 = {{-3, -2}, {-3, 2}, {3, -2}, {3, 2}};
  auto got15 = solset(15, 1);
  if (got15 != want15) {
    ok = false;
    detail = "d=15: expected" + sol_text(want15) + ", got" + sol_text(got15);
  }

  std::vector<EqgrSolution> want31 = {{-1, -4}, {-1, 4}, {1, -4}, {1, 4}};
  auto got31 = solset(31, 1);
  if (got31 != want31) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "d=31: expected" + sol_text(want31) + ", got" + sol_text(got31);
  }

  for (int64_t dd = 7; dd <= 1000; dd += 8) {
    if (!square_free(dd)) continue;
    auto sols = solset(dd, -1);
    if (!sols.empty()) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += "norm -1 solutions at d=" + std::to_string(dd);
      break;
    }
  }

  EqgrCensus cs = eqgr_census(make_ring(-15), 1);
  if (cs.torsion != 36 || cs.with_one != 108 || !cs.all_verified) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "d=15 census: torsion " + std::to_string(cs.torsion) +
              ", with_one " + std::to_string(cs.with_one);
  }
  report(3, ok, "eqgr solution sets, norm -1 emptiness, d=15 census", detail);
}

void criterion4() {
  bool ok = true;
  std::string detail;
  for (int64_t d : {-7, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 13}) {
    RingSpec ring = make_ring(d);
    for (int64_t n : {2, 3, 4, 5, 6, 8}) {
      GroupDescriptor g = parse_group("C" + std::to_string(n));
      int64_t derived = unit_rank(ring, g).u1_rank;
      bool flagged = (n == 5 && d != 5) || (n == 8 && d == -1);
      if (flagged) {
        int64_t want = n == 5 ? 3 : 2;
        if (derived != want || !rank_discrepancy(ring, n).has_value()) {
          ok = false;
          if (detail.empty()) {
            detail = "flagged cell n=" + std::to_string(n) + " d=" +
                     std::to_string(d) + ": derived " +
                     std::to_string(derived) + ", note " +
                     (rank_discrepancy(ring, n) ? "present" : "missing");
          }
        }
      } else {
        int64_t pub = published_rank(n, d);
        if (derived != pub) {
          ok = false;
          if (detail.empty()) {
            detail = "cell n=" + std::to_string(n) + " d=" +
                     std::to_string(d) + ": derived " +
                     std::to_string(derived) + ", published " +
                     std::to_string(pub);
          }
        }
      }
    }
  }
  report(4, ok, "derived ranks against the published table", detail);
}

bool expected_hyperbolic(const std::string& g, int64_t d) {
  if (g == "C2" || g == "C3") return true;
  if (g == "C4" || g == "C2^2") return d < 0;
  if (g == "C8" || g == "C4xC2") return d == -1;
  if (g == "C6xC6") return d == -3;
  if (g == "Q8") return d == -7 || d == -15;
  return false;  // C5, C12, S3, D4, Q12, C4:C4, C2xQ8
}

void criterion5() {
  bool ok = true;
  std::string detail;
  std::vector<std::string> groups = {"C2",  "C3",    "C4",  "C5",    "C8",
                                     "C12", "C2^2",  "C4xC2", "C6xC6", "S3",
                                     "D4",  "Q12",   "C4:C4", "Q8",    "C2xQ8"};
  for (int64_t d : {-15, -7, -5, -3, -2, -1, 2, 3, 5, 7}) {
    RingSpec ring = make_ring(d);
    for (const auto& name : groups) {
      Verdict v = classify_hyperbolic(ring, parse_group(name));
      if (v.hyperbolic != expected_hyperbolic(name, d)) {
        ok = false;
        if (detail.empty()) {
          detail = "(" + name + ", d=" + std::to_string(d) + "): got " +
                   (v.hyperbolic ? "hyperbolic" : "not hyperbolic") + " via " +
                   v.citation;
        }
      }
    }
  }
  report(5, ok, "150-cell hyperbolicity truth table", detail);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  for (int64_t d = 2; d <= 100; ++d) {
    if (!square_free(d)) continue;
    RingSpec ring = make_ring(d);
    FundUnit fu = fundamental_unit(ring);
    auto oracle = brute_fundamental(d, 500000);
    if (!oracle) {
      ok = false;
      detail = "oracle exhausted at d=" + std::to_string(d);
      break;
    }
    QuadRat expect(ring, Rat(oracle->x2, 2), Rat(oracle->y2, 2));
    if (!(fu.eps == expect) || fu.norm != oracle->norm) {
      ok = false;
      detail = "fundamental unit mismatch at d=" + std::to_string(d);
      break;
    }
  }
  for (int64_t d = 2; d <= 500 && ok; ++d) {
    if (!square_free(d)) continue;
    RingSpec ring = make_ring(d);
    FundUnit fu = fundamental_unit(ring);
    Mod2Exponent m2 = unit_mod2_exponent(ring);
    if (!is_one_mod2(fu.eps.pow(m2.bound))) {
      ok = false;
      detail = "eps^" + std::to_string(m2.bound) + " != 1 mod 2 at d=" +
               std::to_string(d);
    }
  }
  report(6, ok, "continued fractions vs the oracle, mod-2 exponent bound",
         detail);
}

void criterion7() {
  bool ok = true;
  std::string detail;
  std::vector<signed char> table = three_squares_table(50000);
  for (int64_t n = 0; n <= 50000; ++n) {
    int64_t r = n;
    while (r != 0 && r % 4 == 0) r /= 4;
    bool form = r % 8 != 7;
    if ((table[static_cast<std::size_t>(n)] != 0) != form) {
      ok = false;
      detail = "sieve disagrees with the 4^a(8b+7) rule at n=" +
               std::to_string(n);
      break;
    }
    if (form) {
      auto t = three_squares(n);
      if (!t || t->p * t->p + t->q * t->q + t->r * t->r != n) {
        ok = false;
        detail = "bad decomposition at n=" + std::to_string(n);
        break;
      }
    }
  }
  for (int64_t m = 2; m <= 50 && ok; m += 4) {
    for (int64_t d : {7, 15, 23, 31}) {
      for (int target : {-1, 1}) {
        Int n = Int(m) * m * d + target;
        auto t = three_squares(n);
        if (!three_squares_exists(n) || !t ||
            Int(t->p) * t->p + Int(t->q) * t->q + Int(t->r) * t->r != n) {
          ok = false;
          detail = "premise fails at m=" + std::to_string(m) + ", d=" +
                   std::to_string(d) + ", target " + std::to_string(target);
        }
      }
    }
  }
  report(7, ok, "three-squares sieve to 50000 and the gauss premise", detail);
}

void criterion8() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(90210);
  for (int64_t dd : {7, 15, 23}) {
    RingSpec ring = make_ring(-dd);
    QuadRat z = QuadRat::integer(ring, 0);
    for (int it = 0; it < 10000 && ok; ++it) {
      Quaternion u = random_integral(ring, rng);
      Quaternion v = random_integral(ring, rng);
      QuadRat nu = u.norm();
      bool fine = (u * v).norm() == nu * v.norm();
      fine = fine && psi(u) * psi(v) == psi(u * v);
      fine = fine && psi(u).det() == FElem{nu, z};
      Quaternion tr(u.c1() + u.c1(), z, z, z);
      fine = fine && u * u + Quaternion(nu, z, z, z) == tr * u;
      fine = fine && u * u.conj() == Quaternion(nu, z, z, z);
      if (!fine) {
        ok = false;
        detail = "identity fails at d=" + std::to_string(dd) + " on " +
                 to_string(u) + ", " + to_string(v);
      }
    }
  }
  report(8, ok, "30000 random integral quaternions satisfy the exact laws",
         detail);
}

void criterion9() {
  bool ok = true;
  std::string detail;
  RingSpec ring = make_ring(-7);
  FundUnit fu = fundamental_unit(make_ring(7));
  UnitWitness w = pell2_unit(ring, fu, 0, 2);
  for (int64_t n = -10; n <= 10; ++n) {
    if (!(pell2_power(w, n).u == w.u.pow(n))) {
      ok = false;
      detail = "pell2 power mismatch at n=" + std::to_string(n);
      break;
    }
  }

  UnitWitness w3 = pell3_unit(ring, 0, 2, 3);
  const auto& s3 = std::get<Pell3Seed>(w3.seed);
  if (!(s3.y == 4 && (s3.x + 1) / 2 == 8 &&
        w3.u.norm() == QuadRat::integer(ring, 1))) {
    ok = false;
    if (detail.empty()) detail = "pell3 seed is not (m=4, p=8) of norm 1";
  }

  UnitWitness w4 = pell4_unit(ring);
  const auto& s4 = std::get<Pell4Seed>(w4.seed);
  if (!(s4.m == 24 && (s4.x + 1) / 2 == 64 &&
        w4.u.norm() == QuadRat::integer(ring, 1))) {
    ok = false;
    if (detail.empty()) detail = "pell4 seed is not (m=24, p=64, q=-63)";
  }
  report(9, ok, "pell2 powers, pell3 and pell4 witnesses at d=7", detail);
}

void criterion10() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  RingSpec ring = make_ring(-7);
  FundUnit fu = fundamental_unit(make_ring(7));
  UnitWitness x = pell2_unit(ring, fu, 0, 1);
  UnitWitness y = pell2_unit(ring, fu, 0, 2);
  if (!powers_disjoint(x, y, 6)) {
    ok = false;
    detail = "powers not disjoint";
  }
  WordReport r = no_relation_up_to(x.u, y.u, 6);
  if (!r.clean()) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "relation found: " + r.relations_found.front();
  }
  double dt = seconds_since(t0);
  if (dt >= 120.0) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "took " + std::to_string(dt) + "s, limit 120s";
  }
  report(10, ok, "free pair evidence for (eps, i) and (eps, j) at d=7",
         detail);
}

void run(int num, void (*fn)()) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(num, false, "unexpected exception", e.what());
  }
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, criterion8);
  run(9, criterion9);
  run(10, criterion10);
  std::cout << (10 - failures) << " of 10 criteria passed, " << failures
            << " failed (" << seconds_since(t0) << "s)" << std::endl;
  return failures;
}
