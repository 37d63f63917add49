#include "qalg/freeness.hpp"

#include <array>

namespace qalg {

namespace {

constexpr int kMaxWordLength = 14;
constexpr int kMaxPowerScan = 1000;

const Pell2Seed& scalar_pell2_seed(const UnitWitness& w, const char* who) {
  const auto* seed = std::get_if<Pell2Seed>(&w.seed);
  if (w.family != Family::Pell2 || seed == nullptr || seed->xi != 0) {
    fail(Errc::wrong_family,
         std::string(who) + " needs scalar-form 2-Pell witnesses");
  }
  return *seed;
}

struct Letters {
  std::array<Quaternion, 4> value;
  static constexpr char kName[4] = {'x', 'X', 'y', 'Y'};
  static constexpr int kInverse[4] = {1, 0, 3, 2};
};

Letters make_letters(const Quaternion& x, const Quaternion& y) {
  UnitCheck ux = is_unit(x);
  UnitCheck uy = is_unit(y);
  if (!ux.unit || !uy.unit) {
    fail(Errc::not_a_unit, "relation search needs unit generators");
  }
  return Letters{{x, x.inverse(), y, y.inverse()}};
}

void dfs(const Letters& L, const Quaternion& one, const Quaternion& cur,
         int last, int depth, int max_depth, std::string& word,
         WordReport& report) {
  for (int l = 0; l < 4; ++l) {
    if (last >= 0 && l == Letters::kInverse[last]) continue;
    Quaternion next = cur * L.value[l];
    ++report.elements_examined;
    word.push_back(Letters::kName[l]);
    if (next == one) report.relations_found.push_back(word);
    if (depth + 1 < max_depth) {
      dfs(L, one, next, l, depth + 1, max_depth, word, report);
    }
    word.pop_back();
  }
}

}  // namespace

bool powers_disjoint(const UnitWitness& x, const UnitWitness& y,
                     std::int64_t bound) {
  const Pell2Seed& sx = scalar_pell2_seed(x, "powers_disjoint");
  const Pell2Seed& sy = scalar_pell2_seed(y, "powers_disjoint");
  if (!(x.u.ring() == y.u.ring())) {
    fail(Errc::mixed_rings, "witnesses live over different rings");
  }
  if (x.u == y.u) return false;
  if (sx.m == 0 || sy.m == 0) {
    // A trivial generator +-1: the only shared power is 1 unless x = y.
    return true;
  }
  if (sx.psi == sy.psi) return false;
  // Support argument: x^a has a nonzero psi-coefficient for a != 0, and the
  // psi slot of every power of y is zero, so x^a = y^b forces a = b = 0.
  for (std::int64_t a = 1; a <= bound; ++a) {
    UnitWitness xa = pell2_power(x, a);
    for (std::int64_t b = -bound; b <= bound; ++b) {
      if (b == 0) continue;
      if (xa.u == pell2_power(y, b).u) return false;
    }
  }
  return true;
}

WordReport no_relation_up_to_serial(const Quaternion& x, const Quaternion& y,
                                    int max_len) {
  if (max_len < 0 || max_len > kMaxWordLength) {
    fail(Errc::out_of_range, "word length outside [0, 14]");
  }
  WordReport report;
  report.max_length = max_len;
  if (max_len == 0) return report;
  Letters L = make_letters(x, y);
  Quaternion one = Quaternion::one(x.ring());
  std::string word;
  dfs(L, one, one, -1, 0, max_len, word, report);
  return report;
}

WordReport no_relation_up_to(const Quaternion& x, const Quaternion& y,
                             int max_len) {
  if (max_len < 0 || max_len > kMaxWordLength) {
    fail(Errc::out_of_range, "word length outside [0, 14]");
  }
  if (max_len < 2) return no_relation_up_to_serial(x, y, max_len);
  WordReport report;
  report.max_length = max_len;
  Letters L = make_letters(x, y);
  Quaternion one = Quaternion::one(x.ring());

  // Length-1 words, then the subtree below each reduced length-2 prefix.
  struct Prefix {
    int a, b;
  };
  std::vector<Prefix> prefixes;
  for (int a = 0; a < 4; ++a) {
    Quaternion pa = one * L.value[a];
    ++report.elements_examined;
    if (pa == one) report.relations_found.push_back(std::string(1, Letters::kName[a]));
    for (int b = 0; b < 4; ++b) {
      if (b == Letters::kInverse[a]) continue;
      prefixes.push_back(Prefix{a, b});
    }
  }
  std::vector<WordReport> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    const Prefix& pre = prefixes[i];
    WordReport& part = parts[i];
    Quaternion cur = L.value[pre.a] * L.value[pre.b];
    ++part.elements_examined;
    std::string word{Letters::kName[pre.a], Letters::kName[pre.b]};
    if (cur == one) part.relations_found.push_back(word);
    if (max_len > 2) {
      dfs(L, one, cur, pre.b, 2, max_len, word, part);
    }
  }
  // Serial DFS order: the length-1 word "x" precedes the x-rooted subtrees,
  // which precede "X", and so on.  Rebuild that order from the buckets.
  WordReport merged;
  merged.max_length = max_len;
  merged.elements_examined = report.elements_examined;
  std::size_t bucket = 0;
  for (int a = 0; a < 4; ++a) {
    std::string single(1, Letters::kName[a]);
    for (const auto& rel : report.relations_found) {
      if (rel == single) merged.relations_found.push_back(rel);
    }
    for (; bucket < prefixes.size() && prefixes[bucket].a == a; ++bucket) {
      merged.elements_examined += parts[bucket].elements_examined;
      for (const auto& rel : parts[bucket].relations_found) {
        merged.relations_found.push_back(rel);
      }
    }
  }
  return merged;
}

std::optional<int> find_free_power(const Quaternion& x, const Quaternion& y,
                                   int max_power, int max_len) {
  if (max_power < 0 || max_power > kMaxPowerScan) {
    fail(Errc::out_of_range, "power scan limit outside [0, 1000]");
  }
  for (int m = 1; m <= max_power; ++m) {
    WordReport r = no_relation_up_to(x.pow(m), y.pow(m), max_len);
    if (r.clean()) return m;
  }
  return std::nullopt;
}

}  // namespace qalg
