#include "qalg/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qalg/freeness.hpp"
#include "qalg/groupring.hpp"
#include "qalg/quadfield.hpp"
#include "qalg/quaternion.hpp"
#include "qalg/unitfactory.hpp"

namespace qalg::cli {

namespace {

using nlohmann::json;

std::string quad_text(const QuadRat& v) {
  QuadRat z = QuadRat::integer(v.ring(), 0);
  return to_string(Quaternion(v, z, z, z));
}

std::string int_text(const Int& n) { return n.str(); }

Slot parse_slot(const std::string& s) {
  if (s == "1") return 0;
  if (s == "i") return 1;
  if (s == "j") return 2;
  if (s == "k") return 3;
  fail(Errc::invalid_argument, "basis slot must be one of 1, i, j, k");
}

const char* slot_name(Slot s) {
  static const char* kNames[4] = {"1", "i", "j", "k"};
  return kNames[s];
}

json triple_json(const Triple& t) { return json::array({t.p, t.q, t.r}); }

json seed_json(const Seed& seed) {
  json out = json::object();
  if (const auto* s = std::get_if<Pell2Seed>(&seed)) {
    out["p"] = int_text(s->p);
    out["m"] = int_text(s->m);
    out["xi"] = slot_name(s->xi);
    out["psi"] = slot_name(s->psi);
  } else if (const auto* s3 = std::get_if<Pell3Seed>(&seed)) {
    out["x"] = int_text(s3->x);
    out["y"] = int_text(s3->y);
    out["xi"] = slot_name(s3->xi);
    out["psi"] = slot_name(s3->psi);
    out["phi"] = slot_name(s3->phi);
  } else if (const auto* s4 = std::get_if<Pell4Seed>(&seed)) {
    out["x"] = int_text(s4->x);
    out["m"] = int_text(s4->m);
  } else if (const auto* sg = std::get_if<GaussSeed>(&seed)) {
    out["m"] = int_text(sg->m);
    out["triple"] = triple_json(sg->t);
    out["target"] = sg->target;
  } else if (const auto* se = std::get_if<EqgrSeed>(&seed)) {
    out["m"] = int_text(se->m);
    out["p"] = int_text(se->p);
    out["sign"] = se->sign;
    out["target"] = se->target;
  } else if (const auto* sa = std::get_if<AdhocSeed>(&seed)) {
    out["text"] = sa->text;
  }
  return out;
}

json witness_json(const UnitWitness& w) {
  json out;
  out["unit"] = to_string(w.u);
  out["norm"] = w.norm;
  out["family"] = family_name(w.family);
  if (division_regime(w.u.ring())) {
    out["order"] = unit_order_name(unit_order(w.u));
  } else {
    out["order"] = nullptr;
  }
  out["seed"] = seed_json(w.seed);
  return out;
}

RingSpec imaginary_ring(std::int64_t dd) {
  if (dd <= 0) {
    fail(Errc::invalid_argument, "-d takes the positive d of Q[sqrt(-d)]");
  }
  return make_ring(-dd);
}

struct Command {
  json payload = json::object();
  std::vector<std::string> citations;
  Status status = Status::Ok;
  std::string error;
};

Command cmd_ring(std::int64_t d) {
  Command c;
  RingSpec ring = make_ring(d);
  c.payload["d"] = ring.d;
  c.payload["discriminant"] = ring.discriminant;
  c.payload["theta"] =
      ring.theta == ThetaKind::SqrtD ? "sqrt(d)" : "(1+sqrt(d))/2";
  c.payload["division_ring"] = kq8_division(ring);
  Mod2Exponent m2 = unit_mod2_exponent(ring);
  c.payload["mod2"] = json{{"bound", m2.bound}, {"exact_order", m2.exact_order}};
  UnitGroupInfo ug = unit_group_torsion(ring);
  c.payload["unit_group"] = json{{"structure", ug.structure},
                                 {"torsion_order", ug.torsion_order},
                                 {"rank", ug.rank},
                                 {"torsion_gen", quad_text(ug.torsion_gen)}};
  C2UnitGroup c2 = c2_unit_generator(ring);
  json c2j{{"structure", c2.structure},
           {"trivial", c2.trivial},
           {"eps_mod2_order", c2.eps_mod2_order}};
  if (c2.free_generator) {
    c2j["free_generator"] = json{{"a0", quad_text(c2.free_generator->a0)},
                                 {"a1", quad_text(c2.free_generator->a1)}};
  } else {
    c2j["free_generator"] = nullptr;
  }
  c.payload["c2_units"] = c2j;
  c.citations = {"kq8-criterion", "unit1"};
  if (ring.d > 1) {
    c.citations.push_back("tec");
    c.citations.push_back("salomao");
  } else {
    c.citations.push_back("trivial");
  }
  return c;
}

Command cmd_fundunit(std::int64_t d) {
  Command c;
  RingSpec ring = make_ring(d);
  FundUnit fu = fundamental_unit(ring);
  ThetaCF cf = theta_cf(ring);
  c.payload["d"] = ring.d;
  c.payload["eps"] = quad_text(fu.eps);
  c.payload["norm"] = fu.norm;
  c.payload["mod2_order"] = fu.mod2_order;
  json pre = json::array(), cyc = json::array();
  for (const Int& a : cf.pre) pre.push_back(int_text(a));
  for (const Int& a : cf.cycle) cyc.push_back(int_text(a));
  c.payload["cf"] = json{{"pre", pre}, {"cycle", cyc}};
  c.citations = {"Pell", "salomao", "unit2"};
  return c;
}

Command cmd_pell(std::int64_t D, int rhs, std::int64_t n) {
  Command c;
  if (rhs != 1 && rhs != -1) {
    fail(Errc::invalid_argument, "--rhs must be +1 or -1");
  }
  auto s = pell_solve(D, rhs);
  c.payload["D"] = D;
  c.payload["rhs"] = rhs;
  c.citations = {"Pell"};
  if (!s) {
    c.status = Status::NoSolution;
    c.error = "X^2 - " + std::to_string(D) + " Y^2 = -1 has no solution";
    return c;
  }
  c.payload["x"] = int_text(s->x);
  c.payload["y"] = int_text(s->y);
  if (n > 0) {
    PellSolution pn = pell_nth(*s, n);
    c.payload["n"] = n;
    c.payload["xn"] = int_text(pn.x);
    c.payload["yn"] = int_text(pn.y);
  }
  return c;
}

json components_json(const std::vector<WedderburnComponent>& comps) {
  json arr = json::array();
  for (const auto& w : comps) {
    arr.push_back(json{{"m", w.m},
                       {"splits", w.splits},
                       {"copies", w.copies},
                       {"degree", w.degree},
                       {"r1", w.r1},
                       {"r2", w.r2},
                       {"unit_rank", w.unit_rank},
                       {"multiplicity", w.multiplicity}});
  }
  return arr;
}

Command cmd_rank(std::int64_t d, const std::string& group, bool paper) {
  Command c;
  RingSpec ring = make_ring(d);
  GroupDescriptor g = parse_group(group);
  if (!g.is_abelian()) {
    fail(Errc::invalid_argument, "rank engine covers abelian groups only");
  }
  RankReport r = unit_rank(ring, g);
  c.payload["d"] = ring.d;
  c.payload["group"] = group_to_string(g);
  c.payload["components"] = components_json(r.components);
  c.payload["total_rank"] = r.total_rank;
  c.payload["base_rank"] = r.base_rank;
  c.payload["u1_rank"] = r.u1_rank;
  c.citations = {"rank"};
  if (paper) {
    if (g.is_cyclic()) {
      std::int64_t n = g.order();
      try {
        c.payload["published_rank"] = published_rank(n, ring.d);
        auto note = rank_discrepancy(ring, n);
        c.payload["discrepancy"] = note ? json(*note) : json(nullptr);
      } catch (const Error&) {
        c.payload["published_rank"] = nullptr;
        c.payload["discrepancy"] = nullptr;
      }
    } else {
      c.payload["published_rank"] = nullptr;
      c.payload["discrepancy"] = nullptr;
    }
  }
  return c;
}

Command cmd_classify(std::int64_t d, const std::string& group, bool check) {
  Command c;
  RingSpec ring = make_ring(d);
  GroupDescriptor g = parse_group(group);
  Verdict v = classify_hyperbolic(ring, g, check);
  c.payload["d"] = ring.d;
  c.payload["group"] = group_to_string(g);
  c.payload["hyperbolic"] = v.hyperbolic;
  c.payload["case"] = v.citation;
  if (check) {
    c.payload["rank_note"] = v.rank_note ? json(*v.rank_note) : json(nullptr);
  }
  c.citations = {v.citation};
  return c;
}

Command cmd_units_pell2(std::int64_t dd, const std::string& xi,
                        const std::string& psi, std::int64_t n, bool has_n) {
  Command c;
  RingSpec ring = imaginary_ring(dd);
  FundUnit fu = fundamental_unit(make_ring(dd));
  UnitWitness w = pell2_unit(ring, fu, parse_slot(xi), parse_slot(psi));
  c.payload["d"] = dd;
  c.payload["eps"] = quad_text(fu.eps);
  if (has_n) {
    w = pell2_power(w, n);
    c.payload["n"] = n;
  }
  c.payload["witness"] = witness_json(w);
  c.citations = {"2pell", "gcpell"};
  return c;
}

Command cmd_units_pell3(std::int64_t dd, const std::string& xi,
                        const std::string& psi, const std::string& phi) {
  Command c;
  RingSpec ring = imaginary_ring(dd);
  UnitWitness w = pell3_unit(ring, parse_slot(xi), parse_slot(psi), parse_slot(phi));
  c.payload["d"] = dd;
  c.payload["witness"] = witness_json(w);
  c.citations = {"3pell"};
  return c;
}

Command cmd_units_pell4(std::int64_t dd) {
  Command c;
  RingSpec ring = imaginary_ring(dd);
  UnitWitness w = pell4_unit(ring);
  c.payload["d"] = dd;
  c.payload["witness"] = witness_json(w);
  c.citations = {"4pell", "5pell"};
  return c;
}

Command cmd_units_gauss(std::int64_t dd, std::int64_t m, int norm, bool first,
                        std::int64_t max_n) {
  Command c;
  RingSpec ring = imaginary_ring(dd);
  Int n = Int(m) * m * dd + norm;
  if (n > max_n) {
    fail(Errc::out_of_range,
         "m^2 d + norm = " + int_text(n) + " exceeds --max-n = " +
             std::to_string(max_n));
  }
  std::vector<UnitWitness> units = gauss_units(ring, m, norm, !first);
  c.payload["d"] = dd;
  c.payload["m"] = m;
  c.payload["target"] = norm;
  c.payload["n"] = int_text(n);
  json triples = json::array(), ws = json::array();
  for (const auto& w : units) {
    ws.push_back(witness_json(w));
    triples.push_back(triple_json(std::get<GaussSeed>(w.seed).t));
  }
  c.payload["triples"] = triples;
  c.payload["units"] = ws;
  c.citations = {"gauss"};
  return c;
}

Command cmd_units_eqgr(std::int64_t dd, int norm, bool census) {
  Command c;
  RingSpec ring = imaginary_ring(dd);
  EqgrResult r = eqgr_solve(ring, norm);
  c.payload["d"] = dd;
  c.payload["target"] = norm;
  c.payload["rhs"] = dd + 2 * norm;
  json sols = json::array(), ws = json::array();
  for (const auto& s : r.solutions) {
    sols.push_back(json::array({static_cast<std::int64_t>(s.m),
                                static_cast<std::int64_t>(s.p)}));
  }
  for (const auto& w : r.units) ws.push_back(witness_json(w));
  c.payload["solutions"] = sols;
  c.payload["units"] = ws;
  if (census) {
    EqgrCensus cs = eqgr_census(ring, norm);
    c.payload["census"] = json{{"total", cs.total},
                               {"with_one", cs.with_one},
                               {"torsion", cs.torsion},
                               {"per_support",
                                json::array({cs.per_support[0], cs.per_support[1],
                                             cs.per_support[2], cs.per_support[3]})},
                               {"verified", cs.all_verified}};
  }
  c.citations = {"eqgr"};
  return c;
}

Command cmd_three_squares(std::int64_t n, bool all, std::int64_t max_n) {
  Command c;
  // Only the full enumeration needs the cost guard; a single decomposition
  // is cheap anywhere in the library's [0, 10^10] range.
  if (all && n > max_n) {
    fail(Errc::out_of_range, "n exceeds --max-n = " + std::to_string(max_n));
  }
  c.payload["n"] = n;
  bool exists = three_squares_exists(n);
  c.payload["decomposable"] = exists;
  c.citations = {"gauss"};
  if (!exists) {
    c.status = Status::NoSolution;
    c.error = std::to_string(n) + " has the excluded form 4^a(8b+7)";
    return c;
  }
  if (all) {
    json arr = json::array();
    for (const Triple& t : three_squares_all(n)) arr.push_back(triple_json(t));
    c.payload["triples"] = arr;
  } else {
    auto t = three_squares(n);
    c.payload["triple"] = t ? triple_json(*t) : json(nullptr);
  }
  return c;
}

Command cmd_verify_unit(std::int64_t dd, const std::string& expr) {
  Command c;
  RingSpec ring = imaginary_ring(dd);
  Quaternion q = parse_quaternion(ring, expr);
  c.payload["d"] = dd;
  c.payload["expr"] = expr;
  c.payload["canonical"] = to_string(q);
  c.payload["integral"] = q.is_integral();
  CharPoly cp = char_poly(q);
  c.payload["char_poly"] =
      json{{"linear", quad_text(cp.linear)}, {"constant", quad_text(cp.constant)}};
  UnitCheck uc = is_unit(q);
  c.payload["norm"] = quad_text(uc.norm);
  c.payload["unit"] = uc.unit;
  c.payload["order"] =
      uc.unit ? json(unit_order_name(unit_order(q))) : json(nullptr);
  c.citations = {"torp"};
  return c;
}

Command cmd_freeness(std::int64_t dd, const std::string& psi,
                     const std::string& psi2, int length, int max_power,
                     std::int64_t bound) {
  Command c;
  RingSpec ring = imaginary_ring(dd);
  FundUnit fu = fundamental_unit(make_ring(dd));
  UnitWitness x = pell2_unit(ring, fu, 0, parse_slot(psi));
  UnitWitness y = pell2_unit(ring, fu, 0, parse_slot(psi2));
  c.payload["d"] = dd;
  c.payload["psi"] = psi;
  c.payload["psi2"] = psi2;
  c.payload["x"] = to_string(x.u);
  c.payload["y"] = to_string(y.u);
  c.payload["bound"] = bound;
  c.payload["powers_disjoint"] = powers_disjoint(x, y, bound);
  WordReport r = no_relation_up_to(x.u, y.u, length);
  c.payload["report"] = json{{"max_length", r.max_length},
                             {"relations", r.relations_found},
                             {"examined", r.elements_examined}};
  auto m = find_free_power(x.u, y.u, max_power, length);
  c.payload["free_power"] = m ? json(*m) : json(nullptr);
  c.citations = {"gcpell", "hypq8"};
  return c;
}

Status status_of(Errc code) {
  switch (code) {
    case Errc::no_solution:
    case Errc::no_decomposition:
      return Status::NoSolution;
    default:
      return Status::InvalidInput;
  }
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "OK";
    case Status::NoSolution: return "NO_SOLUTION";
    case Status::InvalidInput: return "INVALID_INPUT";
  }
  return "?";
}

void render_json_value(std::ostream& out, const json& v, int indent);

void render_table_object(std::ostream& out, const json& obj, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const json& v = it.value();
    if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
      out << pad << it.key() << ":\n";
      render_json_value(out, v, indent + 1);
    } else {
      out << pad << it.key() << ": ";
      render_json_value(out, v, 0);
      out << "\n";
    }
  }
}

void render_json_value(std::ostream& out, const json& v, int indent) {
  if (v.is_object()) {
    render_table_object(out, v, indent);
  } else if (v.is_array()) {
    if (!v.empty() && v.front().is_object()) {
      std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
      for (const auto& e : v) {
        out << pad << "-\n";
        render_table_object(out, e, indent + 1);
      }
    } else {
      out << v.dump();
    }
  } else if (v.is_string()) {
    out << v.get<std::string>();
  } else {
    out << v.dump();
  }
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CommandResult result;

  CLI::App app{"unit groups of quaternion and group rings over quadratic orders",
               "qalg"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool opt_json = false, opt_table = false;
  app.add_flag("--json", opt_json, "emit a single JSON document");
  app.add_flag("--table", opt_table, "emit a text table (default)");

  std::int64_t d = 0, D = 0, n = 0, m = 0, bound = 4, max_n = 1'000'000;
  std::int64_t ts_n = 0;
  int rhs = 1, norm = 1, length = 6, max_power = 3;
  std::string group, xi = "1", psi = "j", psi2 = "j", phi = "k", expr;
  bool paper = false, check = false, all = false, first = false, census = false;

  CLI::App* c_ring = app.add_subcommand("ring", "describe o_K and its units");
  c_ring->add_option("-d", d, "square-free d of Q[sqrt(d)]")->required();

  CLI::App* c_fund = app.add_subcommand("fundunit", "fundamental unit, d > 1");
  c_fund->add_option("-d", d, "square-free d > 1")->required();

  CLI::App* c_pell = app.add_subcommand("pell", "least solution of X^2 - D Y^2 = rhs");
  c_pell->add_option("--D", D, "positive non-square D")->required();
  c_pell->add_option("--rhs", rhs, "+1 or -1 (default +1)");
  CLI::Option* pell_n = c_pell->add_option("-n", n, "also give the n-th power");

  CLI::App* c_rank = app.add_subcommand("rank", "derived rank of U1(o_K[G])");
  c_rank->add_option("-d", d, "square-free d")->required();
  c_rank->add_option("--group", group, "abelian group, e.g. C8 or C2xC4")->required();
  c_rank->add_flag("--paper", paper, "compare against the published table");

  CLI::App* c_cls = app.add_subcommand("classify", "hyperbolicity of U1(o_K[G])");
  c_cls->add_option("-d", d, "square-free d")->required();
  c_cls->add_option("--group", group, "group, e.g. Q8, S3, C2^3, E4xQ8")->required();
  c_cls->add_flag("--check", check, "cross-check the verdict against the rank engine");

  CLI::App* c_units = app.add_subcommand("units", "unit families in H(o_K)");
  c_units->require_subcommand(1);
  CLI::App* c_p2 = c_units->add_subcommand("pell2", "2-Pell units");
  c_p2->add_option("-d", d, "positive d of Q[sqrt(-d)], d = 7 mod 8")->required();
  c_p2->add_option("--xi", xi, "first slot (default 1)");
  c_p2->add_option("--psi", psi, "second slot (default j)");
  CLI::Option* p2_n = c_p2->add_option("-n", n, "return the n-th power");
  CLI::App* c_p3 = c_units->add_subcommand("pell3", "3-Pell units");
  c_p3->add_option("-d", d, "positive odd d with 2d square-free")->required();
  c_p3->add_option("--xi", xi, "slot of m sqrt(-d) (default 1)");
  c_p3->add_option("--psi", psi, "slot of p (default j)");
  c_p3->add_option("--phi", phi, "slot of 1-p (default k)");
  CLI::App* c_p4 = c_units->add_subcommand("pell4", "4-term unit with r = 1");
  c_p4->add_option("-d", d, "positive d = 7 mod 8")->required();
  CLI::App* c_ga = c_units->add_subcommand("gauss", "Gauss units");
  c_ga->add_option("-d", d, "positive d = 7 mod 8")->required();
  c_ga->add_option("--m", m, "multiplier of sqrt(-d)")->required();
  c_ga->add_option("--norm", norm, "target norm +1 or -1 (default +1)");
  c_ga->add_flag("--first", first, "only the first decomposition");
  c_ga->add_option("--max-n", max_n, "bound on m^2 d + norm (default 10^6)");
  CLI::App* c_eq = c_units->add_subcommand("eqgr", "half-integral units from m^2 + 2p^2 = d +- 2");
  c_eq->add_option("-d", d, "positive d of Q[sqrt(-d)]")->required();
  c_eq->add_option("--norm", norm, "target norm +1 or -1 (default +1)");
  c_eq->add_flag("--census", census, "count the distinct units over all supports");

  CLI::App* c_ts = app.add_subcommand("three-squares", "sum of three squares");
  c_ts->add_option("n", ts_n, "nonnegative integer")->required();
  c_ts->add_flag("--all", all, "every canonical triple");
  c_ts->add_option("--max-n", max_n, "enumeration bound (default 10^6)");

  CLI::App* c_vu = app.add_subcommand("verify-unit", "norm, order and char poly of an expression");
  c_vu->add_option("-d", d, "positive d of Q[sqrt(-d)]")->required();
  c_vu->add_option("--expr", expr, "quaternion, e.g. 6s+15i+5j+1k")->required();

  CLI::App* c_fr = app.add_subcommand("freeness", "relation search for a 2-Pell pair");
  c_fr->add_option("-d", d, "positive d = 7 mod 8")->required();
  c_fr->add_option("--psi", psi, "slot of x (default j)");
  c_fr->add_option("--psi2", psi2, "slot of y")->required();
  c_fr->add_option("-L,--length", length, "maximum word length (default 6)");
  c_fr->add_option("-M,--max-power", max_power, "power scan limit (default 3)");
  c_fr->add_option("--bound", bound, "brute-force power bound (default 4)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    result.payload["help"] = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::InvalidInput;
    result.error = e.what();
    return result;
  }

  try {
    Command c;
    if (*c_ring) {
      c = cmd_ring(d);
    } else if (*c_fund) {
      c = cmd_fundunit(d);
    } else if (*c_pell) {
      c = cmd_pell(D, rhs, pell_n->count() ? n : 0);
    } else if (*c_rank) {
      c = cmd_rank(d, group, paper);
    } else if (*c_cls) {
      c = cmd_classify(d, group, check);
    } else if (*c_units) {
      if (*c_p2) {
        c = cmd_units_pell2(d, xi, psi, n, p2_n->count() > 0);
      } else if (*c_p3) {
        c = cmd_units_pell3(d, xi, psi, phi);
      } else if (*c_p4) {
        c = cmd_units_pell4(d);
      } else if (*c_ga) {
        c = cmd_units_gauss(d, m, norm, first, max_n);
      } else {
        c = cmd_units_eqgr(d, norm, census);
      }
    } else if (*c_ts) {
      c = cmd_three_squares(ts_n, all, max_n);
    } else if (*c_vu) {
      c = cmd_verify_unit(d, expr);
    } else if (*c_fr) {
      c = cmd_freeness(d, psi, psi2, length, max_power, bound);
    } else {
      result.status = Status::InvalidInput;
      result.error = "no command given; try --help";
      return result;
    }
    result.status = c.status;
    result.payload = c.payload;
    result.citations = c.citations;
    result.error = c.error;
  } catch (const Error& e) {
    result.status = status_of(e.code());
    result.error = std::string(errc_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    result.status = Status::InvalidInput;
    result.error = e.what();
  }
  return result;
}

std::string render(const CommandResult& r, bool as_json) {
  std::ostringstream out;
  if (as_json) {
    json doc;
    doc["schema_version"] = 1;
    doc["status"] = status_name(r.status);
    doc["payload"] = r.payload;
    doc["citations"] = r.citations;
    if (!r.error.empty()) doc["error"] = r.error;
    out << doc.dump(2) << "\n";
    return out.str();
  }
  if (r.payload.contains("help")) {
    out << r.payload["help"].get<std::string>();
    return out.str();
  }
  out << "status: " << status_name(r.status) << "\n";
  render_table_object(out, r.payload, 0);
  if (!r.citations.empty()) {
    out << "citations: ";
    for (std::size_t i = 0; i < r.citations.size(); ++i) {
      out << (i ? ", " : "") << r.citations[i];
    }
    out << "\n";
  }
  if (!r.error.empty()) out << "error: " << r.error << "\n";
  return out.str();
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool as_json = false;
  for (const auto& a : args) {
    if (a == "--json") as_json = true;
    if (a == "--table") as_json = false;
  }
  CommandResult r = dispatch(args);
  std::cout << render(r, as_json);
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return static_cast<int>(r.status);
}

}  // namespace qalg::cli
