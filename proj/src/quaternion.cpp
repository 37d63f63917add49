#include "qalg/quaternion.hpp"

#include <cctype>
#include <sstream>

namespace qalg {

Quaternion::Quaternion(QuadRat c1, QuadRat ci, QuadRat cj, QuadRat ck)
    : c_{std::move(c1), std::move(ci), std::move(cj), std::move(ck)} {
  for (int s = 1; s < 4; ++s) {
    if (!(c_[s].ring() == c_[0].ring())) {
      fail(Errc::mixed_rings, "quaternion coefficients belong to different fields");
    }
  }
}

Quaternion Quaternion::zero(RingSpec ring) {
  QuadRat z = QuadRat::integer(ring, 0);
  return Quaternion(z, z, z, z);
}

Quaternion Quaternion::one(RingSpec ring) {
  QuadRat z = QuadRat::integer(ring, 0);
  return Quaternion(QuadRat::integer(ring, 1), z, z, z);
}

Quaternion Quaternion::basis(RingSpec ring, int slot) {
  Quaternion q = zero(ring);
  q.c_[slot] = QuadRat::integer(ring, 1);
  return q;
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  return Quaternion(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2],
                    c_[3] + o.c_[3]);
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  return Quaternion(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2],
                    c_[3] - o.c_[3]);
}

Quaternion Quaternion::operator-() const {
  return Quaternion(-c_[0], -c_[1], -c_[2], -c_[3]);
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  const QuadRat &a1 = c_[0], &a2 = c_[1], &a3 = c_[2], &a4 = c_[3];
  const QuadRat &b1 = o.c_[0], &b2 = o.c_[1], &b3 = o.c_[2], &b4 = o.c_[3];
  return Quaternion(a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4,
                    a1 * b2 + a2 * b1 + a3 * b4 - a4 * b3,
                    a1 * b3 - a2 * b4 + a3 * b1 + a4 * b2,
                    a1 * b4 + a2 * b3 - a3 * b2 + a4 * b1);
}

Quaternion Quaternion::conj() const {
  return Quaternion(c_[0], -c_[1], -c_[2], -c_[3]);
}

QuadRat Quaternion::norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

QuadRat Quaternion::trace() const { return c_[0] + c_[0]; }

bool Quaternion::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Quaternion::is_integral() const {
  return c_[0].is_integral() && c_[1].is_integral() && c_[2].is_integral() &&
         c_[3].is_integral();
}

Quaternion Quaternion::inverse() const {
  QuadRat n = norm();
  if (n.is_zero()) {
    fail(Errc::not_a_unit, "quaternion of norm zero has no inverse");
  }
  QuadRat ninv = QuadRat::integer(ring(), 1).div(n);
  Quaternion cj = conj();
  return Quaternion(cj.c_[0] * ninv, cj.c_[1] * ninv, cj.c_[2] * ninv,
                    cj.c_[3] * ninv);
}

Quaternion Quaternion::pow(std::int64_t n) const {
  Quaternion base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                          : static_cast<std::uint64_t>(n);
  Quaternion acc = one(ring());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Mat2F Mat2F::identity(RingSpec ring) {
  FElem one{QuadRat::integer(ring, 1), QuadRat::integer(ring, 0)};
  FElem zero{QuadRat::integer(ring, 0), QuadRat::integer(ring, 0)};
  return Mat2F{one, zero, zero, one};
}

Mat2F Mat2F::operator+(const Mat2F& o) const {
  return Mat2F{a + o.a, b + o.b, c + o.c, d + o.d};
}

Mat2F Mat2F::operator*(const Mat2F& o) const {
  return Mat2F{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
               c * o.b + d * o.d};
}

bool Mat2F::operator==(const Mat2F& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

Mat2F psi(const Quaternion& q) {
  FElem x{q.c1(), q.ci()};
  FElem y{q.cj(), q.ck()};
  // Bottom row is (-sigma(y), sigma(x)).
  return Mat2F{x, y, FElem{-q.cj(), q.ck()}, x.bar()};
}

CharPoly char_poly(const Quaternion& q) {
  return CharPoly{-q.trace(), q.norm()};
}

const char* unit_order_name(UnitOrder o) {
  switch (o) {
    case UnitOrder::One: return "1";
    case UnitOrder::Two: return "2";
    case UnitOrder::Four: return "4";
    case UnitOrder::Infinite: return "infinite";
  }
  return "?";
}

bool division_regime(const RingSpec& ring) {
  if (mod_pos(ring.d, 8) == 1) return true;
  int m4 = mod_pos(ring.d, 4);
  return ring.d > 0 && (m4 == 2 || m4 == 3 || mod_pos(ring.d, 8) == 5);
}

namespace {

void require_division(const RingSpec& ring) {
  if (!division_regime(ring)) {
    fail(Errc::not_division_regime,
         "unit tests need H(K) to be a division ring; d = " +
             std::to_string(ring.d) + " is outside that regime");
  }
}

}  // namespace

UnitCheck is_unit(const Quaternion& q) {
  require_division(q.ring());
  if (!q.is_integral()) {
    fail(Errc::not_integral, "unit test requires integral coefficients");
  }
  QuadRat n = q.norm();
  bool unit = n == QuadRat::integer(q.ring(), 1) ||
              n == QuadRat::integer(q.ring(), -1);
  return UnitCheck{unit, n};
}

UnitOrder unit_order(const Quaternion& q) {
  UnitCheck uc = is_unit(q);
  if (!uc.unit) {
    fail(Errc::not_a_unit, "order is defined for units only");
  }
  if (uc.norm == QuadRat::integer(q.ring(), -1)) return UnitOrder::Infinite;
  // Norm +1: torsion exactly when the scalar part is -1, 0, or 1.
  const QuadRat& c1 = q.c1();
  if (c1.is_zero()) return UnitOrder::Four;
  if (c1 == QuadRat::integer(q.ring(), 1)) return UnitOrder::One;
  if (c1 == QuadRat::integer(q.ring(), -1)) return UnitOrder::Two;
  return UnitOrder::Infinite;
}

namespace {

void append_rat(std::ostringstream& out, const Rat& r, const char* base,
                const char* suffix, bool& first) {
  if (r == 0) return;
  Rat a = r < 0 ? Rat(-r) : r;
  if (r < 0) {
    out << '-';
  } else if (!first) {
    out << '+';
  }
  out << numerator(a);
  if (denominator(a) != 1) out << '/' << denominator(a);
  out << base << suffix;
  first = false;
}

}  // namespace

std::string to_string(const Quaternion& q) {
  static const char* suffixes[4] = {"", "i", "j", "k"};
  std::ostringstream out;
  bool first = true;
  for (int s = 0; s < 4; ++s) {
    const QuadRat& v = q.coeff(s);
    if (v.is_zero()) continue;
    if (rat_is_int(v.x()) && rat_is_int(v.y())) {
      append_rat(out, v.x(), "", suffixes[s], first);
      append_rat(out, v.y(), "s", suffixes[s], first);
      continue;
    }
    auto [a, b] = v.theta_coords();
    if (rat_is_int(a) && rat_is_int(b)) {
      append_rat(out, a, "", suffixes[s], first);
      append_rat(out, b, "h", suffixes[s], first);
      continue;
    }
    append_rat(out, v.x(), "", suffixes[s], first);
    append_rat(out, v.y(), "s", suffixes[s], first);
  }
  if (first) return "0";
  return out.str();
}

Quaternion parse_quaternion(RingSpec ring, const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) {
    fail(Errc::invalid_argument, "empty quaternion expression");
  }
  Quaternion acc = Quaternion::zero(ring);
  std::size_t pos = 0;
  while (pos < t.size()) {
    int sgn = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sgn = t[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    Int num = 1, den = 1;
    bool have_digits = false;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos > start) {
      num = Int(t.substr(start, pos - start));
      have_digits = true;
      if (pos < t.size() && t[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == dstart) {
          fail(Errc::invalid_argument, "expected digits after '/' at position " +
                                           std::to_string(dstart));
        }
        den = Int(t.substr(dstart, pos - dstart));
        if (den == 0) {
          fail(Errc::invalid_argument, "zero denominator in coefficient");
        }
      }
    }
    QuadRat value(ring, Rat(num, den), Rat(0));
    bool have_base = false;
    if (pos < t.size() && (t[pos] == 's' || t[pos] == 'h')) {
      have_base = true;
      value = t[pos] == 's' ? value * QuadRat::root(ring)
                            : value * QuadRat::theta(ring);
      ++pos;
    }
    int slot = 0;
    bool have_unit = false;
    if (pos < t.size() &&
        (t[pos] == 'i' || t[pos] == 'j' || t[pos] == 'k')) {
      have_unit = true;
      slot = t[pos] == 'i' ? 1 : (t[pos] == 'j' ? 2 : 3);
      ++pos;
    }
    if (!have_digits && !have_base && !have_unit) {
      fail(Errc::invalid_argument,
           "unexpected character at position " + std::to_string(pos));
    }
    if (sgn < 0) value = -value;
    Quaternion term = Quaternion::zero(ring);
    term = Quaternion(slot == 0 ? value : QuadRat::integer(ring, 0),
                      slot == 1 ? value : QuadRat::integer(ring, 0),
                      slot == 2 ? value : QuadRat::integer(ring, 0),
                      slot == 3 ? value : QuadRat::integer(ring, 0));
    acc = acc + term;
  }
  return acc;
}

}  // namespace qalg
