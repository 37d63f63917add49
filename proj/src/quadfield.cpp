#include "qalg/quadfield.hpp"

#include <map>
#include <tuple>

namespace qalg {

RingSpec make_ring(std::int64_t d, std::int64_t max_abs_d) {
  if (d == 0 || d == 1) {
    fail(Errc::invalid_argument, "d must be a square-free integer other than 0 and 1");
  }
  std::int64_t a = d < 0 ? -d : d;
  if (a > max_abs_d) {
    fail(Errc::out_of_range, "|d| exceeds the configured bound");
  }
  if (!is_square_free(d)) {
    fail(Errc::not_square_free, "d must be square-free");
  }
  RingSpec r;
  r.d = d;
  if (mod_pos(d, 4) == 1) {
    r.theta = ThetaKind::HalfOnePlusSqrtD;
    r.discriminant = d;
  } else {
    r.theta = ThetaKind::SqrtD;
    r.discriminant = 4 * d;
  }
  return r;
}

QuadRat QuadRat::from_theta(RingSpec ring, const Int& a, const Int& b) {
  if (ring.theta == ThetaKind::SqrtD) {
    return QuadRat(ring, Rat(a), Rat(b));
  }
  // a + b*(1+sqrt(d))/2 = (a + b/2) + (b/2)*sqrt(d)
  return QuadRat(ring, Rat(2 * a + b, 2), Rat(b, 2));
}

void QuadRat::check_same_ring(const QuadRat& o) const {
  if (!(ring_ == o.ring_)) {
    fail(Errc::mixed_rings, "operands belong to different quadratic fields");
  }
}

QuadRat QuadRat::operator+(const QuadRat& o) const {
  check_same_ring(o);
  return QuadRat(ring_, x_ + o.x_, y_ + o.y_);
}

QuadRat QuadRat::operator-(const QuadRat& o) const {
  check_same_ring(o);
  return QuadRat(ring_, x_ - o.x_, y_ - o.y_);
}

QuadRat QuadRat::operator*(const QuadRat& o) const {
  check_same_ring(o);
  return QuadRat(ring_, x_ * o.x_ + Rat(ring_.d) * y_ * o.y_,
                 x_ * o.y_ + y_ * o.x_);
}

bool QuadRat::operator==(const QuadRat& o) const {
  return ring_ == o.ring_ && x_ == o.x_ && y_ == o.y_;
}

Rat QuadRat::norm() const { return x_ * x_ - Rat(ring_.d) * y_ * y_; }

QuadRat QuadRat::inverse() const {
  if (is_zero()) {
    fail(Errc::invalid_argument, "zero has no inverse");
  }
  Rat n = norm();
  return QuadRat(ring_, x_ / n, -y_ / n);
}

QuadRat QuadRat::div(const QuadRat& o) const {
  check_same_ring(o);
  return *this * o.inverse();
}

bool QuadRat::is_integral() const {
  auto [a, b] = theta_coords();
  return rat_is_int(a) && rat_is_int(b);
}

std::pair<Rat, Rat> QuadRat::theta_coords() const {
  if (ring_.theta == ThetaKind::SqrtD) {
    return {x_, y_};
  }
  // x + y*sqrt(d) = (x - y) + (2y)*(1+sqrt(d))/2
  return {x_ - y_, y_ * 2};
}

int QuadRat::sign_real() const {
  if (!ring_.is_real()) {
    fail(Errc::not_real_field, "real-embedding comparison requires d > 0");
  }
  int sx = sign(x_);
  int sy = sign(y_);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Opposite signs: the larger of x^2 and d*y^2 decides.
  Rat lhs = x_ * x_;
  Rat rhs = Rat(ring_.d) * y_ * y_;
  if (lhs == rhs) return 0;  // impossible for d square-free, kept for safety
  return lhs > rhs ? sx : sy;
}

QuadRat QuadRat::pow(std::int64_t n) const {
  QuadRat base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                          : static_cast<std::uint64_t>(n);
  QuadRat acc = integer(ring_, 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

// State of the continued-fraction recurrence for (P + sqrt(d)) / Q.
struct CFState {
  Int P, Q;
  bool operator<(const CFState& o) const {
    return std::tie(P, Q) < std::tie(o.P, o.Q);
  }
};

// floor((P + sqrt(d)) / Q) for non-square d > 0, exact.
Int cf_floor(const Int& P, const Int& Q, const Int& sqrt_floor_d) {
  if (Q > 0) return floor_div(P + sqrt_floor_d, Q);
  // (P + sqrt(d))/Q is irrational, so the floor against -Q flips to -floor - 1.
  return -floor_div(P + sqrt_floor_d, -Q) - 1;
}

}  // namespace

ThetaCF theta_cf(const RingSpec& ring) {
  if (ring.d <= 1) {
    fail(Errc::not_real_field, "continued fractions require d > 1");
  }
  Int d = ring.d;
  Int s = isqrt_floor(d);
  Int P = 0, Q = 1;
  if (ring.theta == ThetaKind::HalfOnePlusSqrtD) {
    P = 1;
    Q = 2;
  }
  ThetaCF out;
  std::map<CFState, std::size_t> seen;
  std::vector<Int> quotients;
  for (;;) {
    auto [it, fresh] = seen.emplace(CFState{P, Q}, quotients.size());
    if (!fresh) {
      std::size_t start = it->second;
      out.pre.assign(quotients.begin(), quotients.begin() + start);
      out.cycle.assign(quotients.begin() + start, quotients.end());
      return out;
    }
    Int a = cf_floor(P, Q, s);
    quotients.push_back(a);
    P = a * Q - P;
    Q = (d - P * P) / Q;
  }
}

FundUnit fundamental_unit(const RingSpec& ring) {
  if (ring.d <= 1) {
    fail(Errc::not_real_field, "the unit group is finite for d < 0");
  }
  Int d = ring.d;
  Int s = isqrt_floor(d);
  Int P0 = 0, Q0 = 1;
  if (ring.theta == ThetaKind::HalfOnePlusSqrtD) {
    P0 = 1;
    Q0 = 2;
  }

  // Pass 1: locate the cycle of the state sequence (P_i, Q_i).
  std::size_t j = 0, k = 0;
  {
    Int P = P0, Q = Q0;
    std::map<CFState, std::size_t> seen;
    for (std::size_t i = 0;; ++i) {
      auto [it, fresh] = seen.emplace(CFState{P, Q}, i);
      if (!fresh) {
        j = it->second;
        k = i;
        break;
      }
      Int a = cf_floor(P, Q, s);
      P = a * Q - P;
      Q = (d - P * P) / Q;
    }
  }

  // Pass 2: convergent matrices M_i = [[p_{i-1}, p_{i-2}], [q_{i-1}, q_{i-2}]]
  // at i = j and i = k.
  Int mj[4] = {1, 0, 0, 1};
  Int mk[4] = {1, 0, 0, 1};
  {
    Int P = P0, Q = Q0;
    Int p1 = 1, p2 = 0, q1 = 0, q2 = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      if (i == j) mj[0] = p1, mj[1] = p2, mj[2] = q1, mj[3] = q2;
      if (i == k) {
        mk[0] = p1, mk[1] = p2, mk[2] = q1, mk[3] = q2;
        break;
      }
      Int a = cf_floor(P, Q, s);
      P = a * Q - P;
      Q = (d - P * P) / Q;
      Int p0 = a * p1 + p2;
      Int q0 = a * q1 + q2;
      p2 = p1;
      p1 = p0;
      q2 = q1;
      q1 = q0;
    }
  }

  // T = M_k * M_j^{-1}; eta = T_{10} * theta + T_{11} is a unit of norm det T.
  int period = static_cast<int>(k - j);
  Int detj = mj[0] * mj[3] - mj[1] * mj[2];  // +1 or -1, so M_j^{-1} = detj * adj
  Int inv[4] = {mj[3] * detj, -mj[1] * detj, -mj[2] * detj, mj[0] * detj};
  Int C = mk[2] * inv[0] + mk[3] * inv[2];
  Int D = mk[2] * inv[1] + mk[3] * inv[3];

  QuadRat eta = QuadRat::theta(ring) * QuadRat::integer(ring, C) +
                QuadRat::integer(ring, D);
  int norm = (period % 2 == 0) ? 1 : -1;

  // Normalize to the representative > 1 among {eta, -eta, eta^{-1}, -eta^{-1}}.
  if (eta.sign_real() < 0) eta = -eta;
  QuadRat one = QuadRat::integer(ring, 1);
  if (!eta.greater_than(one)) {
    eta = eta.inverse();
    if (eta.sign_real() < 0) eta = -eta;
  }

  FundUnit fu{eta, norm, mod2_order(eta)};
  return fu;
}

std::optional<PellSolution> pell_solve(std::int64_t D, int rhs) {
  if (D <= 0) {
    fail(Errc::invalid_argument, "Pell parameter D must be positive");
  }
  if (rhs != 1 && rhs != -1) {
    fail(Errc::invalid_argument, "Pell right-hand side must be +1 or -1");
  }
  Int d = D;
  Int s;
  if (is_perfect_square(d, &s)) {
    fail(Errc::perfect_square, "Pell parameter D must not be a perfect square");
  }
  s = isqrt_floor(d);
  // Continued fraction of sqrt(D): period ends at the first Q_i = 1, i >= 1.
  Int P = 0, Q = 1;
  Int p1 = 1, p2 = 0, q1 = 0, q2 = 1;
  int period = 0;
  for (;;) {
    Int a = cf_floor(P, Q, s);
    Int p0 = a * p1 + p2;
    Int q0 = a * q1 + q2;
    p2 = p1;
    p1 = p0;
    q2 = q1;
    q1 = q0;
    ++period;
    P = a * Q - P;
    Q = (d - P * P) / Q;
    if (Q == 1 && period >= 1) break;
  }
  // p1 - q1*sqrt(D) now satisfies p1^2 - D q1^2 = (-1)^period.
  PellSolution base{p1, q1, D, period % 2 == 0 ? 1 : -1};
  if (rhs == -1) {
    if (base.rhs == -1) return base;
    return std::nullopt;
  }
  if (base.rhs == 1) return base;
  return pell_nth(base, 2);
}

PellSolution pell_nth(const PellSolution& s, std::int64_t n) {
  if (n < 1) {
    fail(Errc::invalid_argument, "Pell power exponent must be >= 1");
  }
  Int x = 1, y = 0;       // accumulator (x + y sqrt D)
  Int bx = s.x, by = s.y; // base
  int racc = 1, rbase = s.rhs;
  std::uint64_t e = static_cast<std::uint64_t>(n);
  Int D = s.D;
  while (e > 0) {
    if (e & 1) {
      Int nx = x * bx + D * y * by;
      Int ny = x * by + y * bx;
      x = nx;
      y = ny;
      racc *= rbase;
    }
    Int nbx = bx * bx + D * by * by;
    Int nby = 2 * bx * by;
    bx = nbx;
    by = nby;
    rbase = rbase * rbase;
    e >>= 1;
  }
  return PellSolution{x, y, s.D, racc};
}

namespace {

// Multiplication table of o_K / 2 o_K in coordinates (a, b) = a + b*theta:
// theta^2 = t0 + t1*theta with t0, t1 reduced mod 2.
struct Mod2Ring {
  int t0, t1;

  static Mod2Ring of(const RingSpec& ring) {
    if (ring.theta == ThetaKind::SqrtD) {
      return Mod2Ring{mod_pos(ring.d, 2), 0};
    }
    return Mod2Ring{mod_pos((ring.d - 1) / 4, 2), 1};
  }

  std::pair<int, int> mul(std::pair<int, int> u, std::pair<int, int> v) const {
    int c = u.second * v.second;
    int a = (u.first * v.first + c * t0) % 2;
    int b = (u.first * v.second + u.second * v.first + c * t1) % 2;
    return {a, b};
  }
};

}  // namespace

int mod2_order(const QuadRat& v) {
  if (!v.is_integral()) {
    fail(Errc::not_integral, "mod-2 order requires an integral element");
  }
  auto [ar, br] = v.theta_coords();
  int an = static_cast<int>(numerator(ar) % 2);
  int bn = static_cast<int>(numerator(br) % 2);
  if (an < 0) an += 2;
  if (bn < 0) bn += 2;
  std::pair<int, int> cls{an, bn};
  Mod2Ring ring2 = Mod2Ring::of(v.ring());
  std::pair<int, int> acc = cls;
  for (int k = 1; k <= 4; ++k) {
    if (acc == std::pair<int, int>{1, 0}) return k;
    acc = ring2.mul(acc, cls);
  }
  fail(Errc::not_a_unit, "element is not invertible modulo 2");
}

Mod2Exponent unit_mod2_exponent(const RingSpec& ring) {
  int bound;
  if (mod_pos(ring.d, 8) == 1) {
    bound = 1;
  } else if (mod_pos(ring.d, 4) == 2 || mod_pos(ring.d, 4) == 3) {
    bound = 2;
  } else {
    bound = 3;  // d = 5 mod 8
  }
  int exact;
  if (ring.d > 1) {
    exact = fundamental_unit(ring).mod2_order;
  } else {
    exact = mod2_order(unit_group_torsion(ring).torsion_gen);
  }
  return Mod2Exponent{bound, exact};
}

UnitGroupInfo unit_group_torsion(const RingSpec& ring) {
  if (ring.d > 1) {
    return UnitGroupInfo{2, 1, "C2 x Z", QuadRat::integer(ring, -1)};
  }
  if (ring.d == -1) {
    return UnitGroupInfo{4, 0, "C4", QuadRat::theta(ring)};
  }
  if (ring.d == -3) {
    return UnitGroupInfo{6, 0, "C6", QuadRat::theta(ring)};
  }
  return UnitGroupInfo{2, 0, "C2", QuadRat::integer(ring, -1)};
}

}  // namespace qalg
