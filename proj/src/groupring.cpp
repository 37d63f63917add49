#include "qalg/groupring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qalg {

std::int64_t GroupDescriptor::order() const {
  switch (kind) {
    case GroupKind::Abelian: {
      std::int64_t n = 1;
      for (auto f : invariant_factors) n *= f;
      return n;
    }
    case GroupKind::Hamiltonian2:
      return 8LL << ham_rank;
    case GroupKind::S3:
      return 6;
    case GroupKind::D4:
      return 8;
    case GroupKind::Q12:
      return 12;
    case GroupKind::C4SemiC4:
      return 16;
  }
  return 0;
}

std::int64_t GroupDescriptor::exponent() const {
  if (kind != GroupKind::Abelian) {
    fail(Errc::invalid_argument, "exponent is computed for abelian groups only");
  }
  return invariant_factors.empty() ? 1 : invariant_factors.back();
}

bool GroupDescriptor::operator==(const GroupDescriptor& o) const {
  return kind == o.kind && invariant_factors == o.invariant_factors &&
         ham_rank == o.ham_rank;
}

namespace {

// Reduces a multiset of cyclic orders to invariant factors f1 | f2 | ... | fr.
std::vector<std::int64_t> to_invariant_factors(std::vector<std::int64_t> orders) {
  std::map<std::int64_t, std::vector<int>> prime_exps;
  for (auto n : orders) {
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        prime_exps[p].push_back(e);
      }
    }
    if (n > 1) prime_exps[n].push_back(1);
  }
  std::size_t count = 0;
  for (auto& [p, exps] : prime_exps) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    count = std::max(count, exps.size());
  }
  std::vector<std::int64_t> factors(count, 1);
  for (auto& [p, exps] : prime_exps) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      std::int64_t pw = 1;
      for (int e = 0; e < exps[i]; ++e) pw *= p;
      factors[i] *= pw;  // index 0 holds the largest factor
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

GroupDescriptor parse_group(const std::string& text) {
  if (text == "S3") return GroupDescriptor{GroupKind::S3, {}, 0};
  if (text == "D4") return GroupDescriptor{GroupKind::D4, {}, 0};
  if (text == "Q12") return GroupDescriptor{GroupKind::Q12, {}, 0};
  if (text == "C4:C4") return GroupDescriptor{GroupKind::C4SemiC4, {}, 0};

  // Split on 'x' into factor tokens.
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == 'x') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  tokens.push_back(cur);

  std::vector<std::int64_t> cyclic_orders;
  int q8_count = 0;
  for (const auto& tok : tokens) {
    if (tok == "Q8") {
      ++q8_count;
      continue;
    }
    char head = tok.empty() ? '\0' : tok[0];
    if (head != 'C' && head != 'E') {
      fail(Errc::invalid_argument, "unrecognized group factor '" + tok + "'");
    }
    std::size_t caret = tok.find('^');
    std::string num = tok.substr(1, caret == std::string::npos
                                        ? std::string::npos
                                        : caret - 1);
    std::int64_t n = 0, reps = 1;
    try {
      n = std::stoll(num);
      if (caret != std::string::npos) reps = std::stoll(tok.substr(caret + 1));
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "unrecognized group factor '" + tok + "'");
    }
    if (n < 1 || reps < 1) {
      fail(Errc::invalid_argument, "group factor orders must be positive");
    }
    if (head == 'E') {
      // Elementary abelian 2-group of order n.
      std::int64_t m = n;
      int rank = 0;
      while (m > 1 && m % 2 == 0) m /= 2, ++rank;
      if (m != 1 || caret != std::string::npos) {
        fail(Errc::invalid_argument,
             "elementary factor must be E<power of 2>, got '" + tok + "'");
      }
      for (int r = 0; r < rank; ++r) cyclic_orders.push_back(2);
      continue;
    }
    for (std::int64_t r = 0; r < reps; ++r) {
      if (n > 1) cyclic_orders.push_back(n);
    }
  }

  if (q8_count > 1) {
    fail(Errc::invalid_argument, "at most one Q8 factor is supported");
  }
  if (q8_count == 1) {
    for (auto n : cyclic_orders) {
      if (n != 2) {
        fail(Errc::invalid_argument,
             "Q8 may only be combined with C2 factors (Hamiltonian 2-group)");
      }
    }
    return GroupDescriptor{GroupKind::Hamiltonian2, {},
                           static_cast<int>(cyclic_orders.size())};
  }
  return GroupDescriptor{GroupKind::Abelian, to_invariant_factors(cyclic_orders),
                         0};
}

std::string group_to_string(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::S3:
      return "S3";
    case GroupKind::D4:
      return "D4";
    case GroupKind::Q12:
      return "Q12";
    case GroupKind::C4SemiC4:
      return "C4:C4";
    case GroupKind::Hamiltonian2: {
      if (g.ham_rank == 0) return "Q8";
      std::ostringstream out;
      out << "C2";
      if (g.ham_rank > 1) out << '^' << g.ham_rank;
      out << "xQ8";
      return out.str();
    }
    case GroupKind::Abelian:
      break;
  }
  if (g.invariant_factors.empty()) return "C1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < g.invariant_factors.size()) {
    std::size_t j = i;
    while (j < g.invariant_factors.size() &&
           g.invariant_factors[j] == g.invariant_factors[i]) {
      ++j;
    }
    if (!first) out << 'x';
    out << 'C' << g.invariant_factors[i];
    if (j - i > 1) out << '^' << (j - i);
    first = false;
    i = j;
  }
  return out.str();
}

namespace {

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  std::vector<std::int64_t> divs;
  for (std::int64_t m = 1; m * m <= n; ++m) {
    if (n % m == 0) {
      divs.push_back(m);
      if (m != n / m) divs.push_back(n / m);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Number of elements g with g^m = 1 in the abelian group.
std::int64_t count_order_dividing(const GroupDescriptor& g, std::int64_t m) {
  std::int64_t c = 1;
  for (auto f : g.invariant_factors) c *= std::gcd(f, m);
  return c;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> element_order_counts(
    const GroupDescriptor& g) {
  if (!g.is_abelian()) {
    fail(Errc::invalid_argument, "order counts require an abelian group");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> counts;
  for (auto m : divisors_of(g.exponent())) {
    std::int64_t exact = 0;
    for (auto e : divisors_of(m)) {
      exact += moebius(e) * count_order_dividing(g, m / e);
    }
    counts.emplace_back(m, exact);
  }
  return counts;
}

std::vector<WedderburnComponent> wedderburn(const RingSpec& ring,
                                            const GroupDescriptor& g) {
  if (!g.is_abelian()) {
    fail(Errc::invalid_argument,
         "the decomposition engine handles abelian groups only");
  }
  std::int64_t abs_disc =
      ring.discriminant < 0 ? -ring.discriminant : ring.discriminant;
  std::vector<WedderburnComponent> comps;
  for (auto [m, count] : element_order_counts(g)) {
    WedderburnComponent c;
    c.m = m;
    c.multiplicity = count / euler_phi(m);
    c.splits = (m % abs_disc == 0);
    c.copies = c.splits ? 2 : 1;
    std::int64_t phi = euler_phi(m);
    if (m <= 2) {
      // Component field is K itself.
      c.degree = 2;
      if (ring.is_real()) {
        c.r1 = 2;
        c.r2 = 0;
      } else {
        c.r1 = 0;
        c.r2 = 1;
      }
    } else if (c.splits) {
      // Two copies of Q(zeta_m), totally imaginary.
      c.degree = phi;
      c.r1 = 0;
      c.r2 = phi / 2;
    } else {
      // One copy of K(zeta_m), totally imaginary of degree 2*phi(m).
      c.degree = 2 * phi;
      c.r1 = 0;
      c.r2 = phi;
    }
    c.unit_rank = c.r1 + c.r2 - 1;
    comps.push_back(c);
  }
  return comps;
}

RankReport unit_rank(const RingSpec& ring, const GroupDescriptor& g) {
  RankReport r;
  r.components = wedderburn(ring, g);
  r.total_rank = 0;
  for (const auto& c : r.components) {
    r.total_rank += c.multiplicity * c.copies * c.unit_rank;
  }
  r.base_rank = ring.is_real() ? 1 : 0;
  r.u1_rank = r.total_rank - r.base_rank;
  return r;
}

std::int64_t published_rank(std::int64_t n, std::int64_t d) {
  switch (n) {
    case 2:
      return d < 0 ? 0 : 1;
    case 3:
      if (d == -3) return 0;
      return 1;
    case 4:
      if (d == -1) return 0;
      return d < 0 ? 1 : 2;
    case 5:
      return d == 5 ? 2 : 6;
    case 6:
      if (d == -3) return 0;
      return d < 0 ? 2 : 3;
    case 8:
      if (d == -1) return 1;
      if (d < 0) return 4;
      return d == 2 ? 4 : 5;
    default:
      fail(Errc::not_in_table, "published ranks cover n in {2,3,4,5,6,8} only");
  }
}

std::optional<std::string> rank_discrepancy(const RingSpec& ring,
                                            std::int64_t n) {
  GroupDescriptor cn{GroupKind::Abelian, {n}, 0};
  std::int64_t derived = unit_rank(ring, cn).u1_rank;
  std::int64_t published = published_rank(n, ring.d);
  if (derived == published) return std::nullopt;
  std::ostringstream out;
  out << "derived rank " << derived << " differs from published rank "
      << published << " for C" << n << " at d=" << ring.d;
  return out.str();
}

namespace {

bool tjpp_abelian_admissible(const GroupDescriptor& g) {
  std::int64_t e = g.exponent();
  if (4 % e == 0 || 6 % e == 0) return true;
  if (g.is_cyclic()) {
    std::int64_t n = g.order();
    return n == 5 || n == 8 || n == 12;
  }
  return false;
}

}  // namespace

std::vector<GroupDescriptor> torsion_candidates() {
  std::vector<GroupDescriptor> out;
  out.push_back(GroupDescriptor{GroupKind::Abelian, {5}, 0});
  out.push_back(GroupDescriptor{GroupKind::Abelian, {8}, 0});
  out.push_back(GroupDescriptor{GroupKind::Abelian, {12}, 0});
  out.push_back(GroupDescriptor{GroupKind::Hamiltonian2, {}, 0});  // Q8
  out.push_back(GroupDescriptor{GroupKind::S3, {}, 0});
  out.push_back(GroupDescriptor{GroupKind::D4, {}, 0});
  out.push_back(GroupDescriptor{GroupKind::Q12, {}, 0});
  out.push_back(GroupDescriptor{GroupKind::C4SemiC4, {}, 0});
  return out;
}

bool torsion_admissible(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::Abelian:
      return tjpp_abelian_admissible(g);
    case GroupKind::Hamiltonian2:
    case GroupKind::S3:
    case GroupKind::D4:
    case GroupKind::Q12:
    case GroupKind::C4SemiC4:
      return true;
  }
  return false;
}

Verdict classify_hyperbolic(const RingSpec& ring, const GroupDescriptor& g,
                            bool check) {
  std::int64_t d = ring.d;
  Verdict v{false, "tjpp", std::nullopt};

  auto decide = [&]() -> Verdict {
    if (g.kind == GroupKind::Hamiltonian2) {
      if (g.ham_rank > 0) return {false, "hamiltonian", std::nullopt};
      if (d > 0) return {false, "trank-2", std::nullopt};
      if (mod_pos(d, 8) == 1) return {true, "mainresult-5", std::nullopt};
      return {false, "kq8-criterion", std::nullopt};
    }
    if (g.kind != GroupKind::Abelian) {
      return {false, "mhp-corollary", std::nullopt};
    }
    std::int64_t e = g.exponent();
    if (g.is_cyclic()) {
      std::int64_t n = g.order();
      if (n == 1) return {true, "mainresult-2", std::nullopt};
      if (n == 2 || n == 3) return {true, "mainresult-1", std::nullopt};
      if (n == 4) {
        if (d < 0) return {true, "mainresult-3", std::nullopt};
        return {false, "trank-2", std::nullopt};
      }
      if (n == 5) return {false, "trank-5", std::nullopt};
      if (n == 6) {
        if (d == -3) return {true, "mainresult-2", std::nullopt};
        return {false, "trank-3", std::nullopt};
      }
      if (n == 8) {
        if (d == -1) return {true, "mainresult-4", std::nullopt};
        return {false, "trank-4", std::nullopt};
      }
      if (n == 12) return {false, "c12", std::nullopt};
      return {false, "tjpp", std::nullopt};
    }
    // Non-cyclic abelian.
    if (e == 2) {
      if (d < 0) return {true, "mainresult-2", std::nullopt};
      return {false, "klein", std::nullopt};
    }
    if (e == 4) {
      if (d == -1) return {true, "mainresult-2", std::nullopt};
      return {false, "trank-3", std::nullopt};
    }
    if (e == 3 || e == 6) {
      if (d == -3) return {true, "mainresult-2", std::nullopt};
      return {false, "trank-3", std::nullopt};
    }
    return {false, "tjpp", std::nullopt};
  };

  v = decide();
  if (check && g.is_abelian()) {
    std::int64_t r = unit_rank(ring, g).u1_rank;
    std::ostringstream note;
    note << "derived u1_rank " << r;
    bool rank_hyperbolic = r <= 1;
    if (rank_hyperbolic == v.hyperbolic) {
      note << ", consistent with the verdict";
    } else {
      note << ", inconsistent with the verdict (rank engine suggests "
           << (rank_hyperbolic ? "hyperbolic" : "not hyperbolic") << ")";
    }
    v.rank_note = note.str();
  }
  return v;
}

C2Unit c2_unit(const QuadRat& a) {
  if (!a.is_integral()) {
    fail(Errc::not_integral, "c2_unit requires an integral element");
  }
  RingSpec ring = a.ring();
  QuadRat one = QuadRat::integer(ring, 1);
  if (a.is_zero() || a == one) {
    fail(Errc::invalid_argument, "c2_unit requires a different from 0 and 1");
  }
  QuadRat e = a + a - one;
  Rat n = e.norm();
  if (!(n == 1 || n == -1)) {
    fail(Errc::not_a_unit, "2a-1 is not a unit of o_K");
  }
  QuadRat einv = n == 1 ? e.conj() : -e.conj();
  QuadRat aei = a * einv;
  C2Elem u{a, one - a};
  C2Elem v{aei, one - aei};
  // u * v = 1 exactly; the product collapses because e * einv = 1.
  return C2Unit{u, v, e};
}

C2UnitGroup c2_unit_generator(const RingSpec& ring) {
  if (!ring.is_real()) {
    return C2UnitGroup{true, "C2", std::nullopt, 1};
  }
  FundUnit fu = fundamental_unit(ring);
  int n = fu.mod2_order;
  QuadRat en = fu.eps.pow(n);
  QuadRat one = QuadRat::integer(ring, 1);
  QuadRat half(ring, Rat(1, 2), Rat(0));
  C2Elem w{(one + en) * half, (one - en) * half};
  return C2UnitGroup{false, "C2 x Z", w, n};
}

Mat2Q Mat2Q::identity(RingSpec ring) {
  QuadRat one = QuadRat::integer(ring, 1);
  QuadRat zero = QuadRat::integer(ring, 0);
  return Mat2Q{one, zero, zero, one};
}

Mat2Q Mat2Q::operator*(const Mat2Q& o) const {
  return Mat2Q{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
               c * o.b + d * o.d};
}

bool Mat2Q::operator==(const Mat2Q& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

Z2Witness z2_witness(const RingSpec& ring, std::int64_t bound) {
  if (bound < 1 || bound > 100000) {
    fail(Errc::out_of_range, "z2_witness bound must lie in [1, 100000]");
  }
  QuadRat one = QuadRat::integer(ring, 1);
  QuadRat zero = QuadRat::integer(ring, 0);
  Mat2Q u{one, one, zero, one};
  Mat2Q v{one, QuadRat::root(ring), zero, one};
  Mat2Q id = Mat2Q::identity(ring);

  bool ok = u * v == v * u;
  // u^a, built incrementally from a = -bound; u^{-1} = 1 - E12.
  Mat2Q uinv{one, -one, zero, one};
  Mat2Q vinv{one, -QuadRat::root(ring), zero, one};
  Mat2Q ua = id;
  for (std::int64_t a = 0; a < bound; ++a) ua = ua * uinv;
  for (std::int64_t a = -bound; a <= bound && ok; ++a) {
    Mat2Q uavb = ua;
    for (std::int64_t b = 0; b < bound; ++b) uavb = uavb * vinv;
    for (std::int64_t b = -bound; b <= bound && ok; ++b) {
      // Closed form: u^a v^b = 1 + (a + b sqrt(d)) E12.
      Mat2Q expected{one, QuadRat(ring, Rat(a), Rat(b)), zero, one};
      if (!(uavb == expected)) ok = false;
      if ((uavb == id) != (a == 0 && b == 0)) ok = false;
      uavb = uavb * v;
    }
    ua = ua * u;
  }
  return Z2Witness{u, v, bound, ok};
}

}  // namespace qalg
