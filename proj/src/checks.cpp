#include "rmb/checks.hpp"

#include "rmb/construct.hpp"
#include "rmb/fixtures.hpp"
#include "rmb/identify.hpp"
#include "rmb/invariants.hpp"
#include "rmb/pd_io.hpp"
#include "rmb/smoothing.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace rmb {

namespace {

using nlohmann::json;

struct Collector {
  std::string subject;
  std::vector<Check> out;

  // Exceptions (unresolved oracles, inapplicable moves) fail the check.
  void add(const std::string& property, const std::string& expected, const std::function<std::string()>& actual) {
    Check c{subject, property, expected, "", false};
    try {
      c.actual = actual();
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    c.pass = c.actual == c.expected;
    out.push_back(std::move(c));
  }
};

std::string u_text(const UInterval& u) {
  if (u.exact()) return std::to_string(u.lo);
  return "[" + std::to_string(u.lo) + ", " + (u.hi ? std::to_string(*u.hi) : "?") + "]";
}

std::string list_text(const std::vector<long long>& twice) {
  std::string s = "(";
  for (size_t i = 0; i < twice.size(); ++i) s += (i ? "," : "") + halves(twice[i]);
  return s + ")";
}

std::string list_text(const json& ints) {
  std::vector<long long> v;
  for (const auto& x : ints) v.push_back(2 * x.get<long long>());
  return list_text(v);
}

IuConfig knot_config(int s, const UnknotOptions& o, std::optional<int> eps = {}, std::optional<int> delta = {}) {
  IuConfig c;
  c.S = constant_matrix(1, s);
  c.T = constant_matrix(1, +1);
  c.eps = eps;
  c.delta = delta;
  c.oracle = o;
  return c;
}

std::string iu_text(const LinkDiagram& d, const IuConfig& c) { return iu(d, c).value_string(); }

// Crossing count, writhe, link type and u(L).
void check_basics(const LinkDiagram& d, const json& m, Collector& c, const UnknotOptions& o) {
  if (m.contains("crossings"))
    c.add("crossings", std::to_string(m["crossings"].get<int>()), [&] { return std::to_string(d.crossing_count()); });
  if (m.contains("writhe"))
    c.add("writhe", std::to_string(m["writhe"].get<int>()), [&] { return std::to_string(d.writhe()); });
  if (m.contains("link")) c.add("link type", m["link"].get<std::string>(), [&] { return identify(d).name; });
  if (m.contains("u_link"))
    c.add("u(L)", std::to_string(m["u_link"].get<int>()), [&] { return u_text(unknotting_number(d, o)); });
}

void check_labels(const LinkDiagram& d, const json& m, Collector& c, const UnknotOptions& o) {
  if (!m.contains("labels")) return;
  for (const auto& [label, id] : m["labels"].items()) {
    const int x = id.get<int>() - 1;
    if (m.contains("signs") && m["signs"].contains(label))
      c.add("sign(" + label + ")", std::to_string(m["signs"][label].get<int>()),
            [&] { return std::to_string(d.sign(x)); });
    if (m.contains("self_crossing_component") && m["self_crossing_component"].contains(label))
      c.add(label + " is a self-crossing of component", std::to_string(m["self_crossing_component"][label].get<int>()),
            [&] { return d.is_self_crossing(x) ? std::to_string(d.over_component(x) + 1) : "mixed"; });
    for (auto mode : {SmoothMode::regular, SmoothMode::irregular}) {
      const std::string key = to_string(mode);
      if (!m.contains(key) || !m[key].contains(label)) continue;
      const LinkDiagram s = smooth(d, x, mode).diagram;
      const std::string expected = m[key][label].get<std::string>();
      c.add(key + " smoothing at " + label, expected, [&] { return identify(s).name; });
      if (const CatalogueEntry* e = catalogue_entry(expected))
        c.add("u of " + key + " smoothing at " + label, std::to_string(e->unknotting_number),
              [&] { return u_text(unknotting_number(s, o)); });
    }
  }
}

void check_knot_invariants(const Fixture& f, const json& m, Collector& c, const UnknotOptions& o) {
  const LinkDiagram& d = f.diagram;
  if (m.value("no_reducing_faces", false))
    c.add("monogons and bigons admitting a reducing RI or RII", "0",
          [&] { return std::to_string(reducing_moves(d).size()); });
  if (m.contains("g0")) c.add("g0(I_lk)", std::to_string(m["g0"].get<int>()), [&] { return std::to_string(g0(ilk(d))); });
  if (m.contains("g")) c.add("g(I_lk)", std::to_string(m["g"].get<int>()), [&] { return std::to_string(g(ilk(d))); });
  if (m.contains("iu_plus"))
    c.add("iu(+1)", std::to_string(m["iu_plus"].get<int>()), [&] { return iu_text(d, knot_config(+1, o)); });
  if (m.contains("iu_minus"))
    c.add("iu(-1)", std::to_string(m["iu_minus"].get<int>()), [&] { return iu_text(d, knot_config(-1, o)); });
  if (m.contains("bound_eps_delta_plus"))
    c.add("max over eps,delta of ceil(|eps,delta iu(+1)|/2)", std::to_string(m["bound_eps_delta_plus"].get<int>()), [&] {
      int best = 0;
      for (int e : {+1, -1})
        for (int dl : {+1, -1}) best = std::max(best, move_bound_twice(iu(d, knot_config(+1, o, e, dl)).twice(), 0));
      return std::to_string(best);
    });
  if (m.contains("bound_pp_minus"))
    c.add("ceil(|+1,+1 iu(-1)|/2)", std::to_string(m["bound_pp_minus"].get<int>()),
          [&] { return std::to_string(move_bound_twice(iu(d, knot_config(-1, o, +1, +1)).twice(), 0)); });
  if (f.moves.events.empty()) return;
  if (m.contains("bound_pp_minus"))
    c.add("moves in the sequence", std::to_string(m["bound_pp_minus"].get<int>()),
          [&] { return std::to_string(f.moves.events.size()); });
  if (m.contains("move_kinds"))
    c.add("move kinds", m["move_kinds"].dump(), [&] {
      json kinds = json::array();
      auto states = run_sequence(f.moves);
      for (size_t i = 0; i < f.moves.events.size(); ++i) {
        const MoveEvent& e = f.moves.events[i];
        std::string k = to_string(e.kind);
        if (e.kind == MoveKind::RII_remove || e.kind == MoveKind::RII_add)
          k += classify_r2(states[i], e) == R2Tag::matched ? " matched" : " unmatched";
        kinds.push_back(k);
      }
      return kinds.dump();
    });
  if (m.value("sequence_ends_crossing_free", false))
    c.add("sequence ends crossing-free", "0 crossings",
          [&] { return std::to_string(run_sequence(f.moves).back().crossing_count()) + " crossings"; });
  const std::vector<std::tuple<std::string, std::string, int, std::optional<int>>> traces = {
      {"trace_plus", "trace of iu(+1)", +1, std::nullopt},
      {"trace_minus", "trace of iu(-1)", -1, std::nullopt},
      {"trace_pp_plus", "trace of +1,+1 iu(+1)", +1, +1},
      {"trace_pp_minus", "trace of +1,+1 iu(-1)", -1, +1}};
  for (const auto& [key, what, s, ed] : traces) {
    if (!m.contains(key)) continue;
    c.add(what, list_text(m[key]), [&, s = s, ed = ed] {
      std::vector<long long> v;
      for (const auto& x : trace(f.moves, knot_config(s, o, ed, ed))) v.push_back(x.twice());
      return list_text(v);
    });
  }
}

// The two-component worked example: iu for a given S, T and the move bound
// against a crossing-free diagram.
void check_link_config(const Fixture& f, const json& m, Collector& c, const UnknotOptions& o) {
  if (!m.contains("S")) return;
  const LinkDiagram& d = f.diagram;
  IuConfig cfg;
  cfg.S = m["S"].get<SignMatrix>();
  cfg.T = m["T"].get<SignMatrix>();
  cfg.oracle = o;
  if (m.contains("mixed_crossings"))
    c.add("mixed crossings", std::to_string(m["mixed_crossings"].get<int>()), [&] {
      int k = 0;
      for (int x = 0; x < d.crossing_count(); ++x) k += d.is_self_crossing(x) ? 0 : 1;
      return std::to_string(k);
    });
  if (m.contains("iu")) c.add("iu_{S,T}", std::to_string(m["iu"].get<int>()), [&] { return iu_text(d, cfg); });
  if (m.contains("skipped"))
    c.add("crossings skipped by S", std::to_string(m["skipped"].get<int>()), [&] {
      int k = 0;
      for (const auto& e : iu(d, cfg).ledger) k += e.set == LedgerEntry::Set::skipped ? 1 : 0;
      return std::to_string(k);
    });
  if (m.contains("bound"))
    c.add("RII/RIII bound against a crossing-free diagram", std::to_string(m["bound"].get<int>()), [&] {
      auto target = LinkDiagram::trivial(d.component_count());
      return std::to_string(move_bound(iu(d, cfg), iu(target, cfg)));
    });
}

// RIII witnesses: facts about the smoothings at z before and after the move.
void check_witness(const Fixture& f, const json& m, Collector& c, const UnknotOptions& o) {
  if (!m.contains("z_before")) return;
  const LinkDiagram& d = f.diagram;
  const int z = m["z_before"].get<int>() - 1, z_after = m["z_after"].get<int>() - 1;
  c.add("move", "RIII", [&] {
    return f.moves.events.size() == 1 ? to_string(f.moves.events[0].kind) : std::to_string(f.moves.events.size()) + " moves";
  });
  c.add("z is the top/bottom crossing of the trigon", std::to_string(z + 1),
        [&] { return std::to_string(r3_top_bottom_crossing(d, f.moves.events.at(0)) + 1); });
  const LinkDiagram e = apply(d, f.moves.events.at(0));
  c.add("z after the move", std::to_string(z_after + 1), [&] {
    // The inverse move uses the trigon on the same three crossings.
    auto fs = d.faces();
    const auto& corners = fs[f.moves.events[0].face].corners;
    std::vector<int> want(corners.begin(), corners.end());
    std::sort(want.begin(), want.end());
    auto es = e.faces();
    for (const auto& back : r3_moves(e)) {
      std::vector<int> got(es[back.face].corners.begin(), es[back.face].corners.end());
      std::sort(got.begin(), got.end());
      if (got == want) return std::to_string(r3_top_bottom_crossing(e, back) + 1);
    }
    return std::string("no inverse trigon");
  });
  for (const auto& [side, dd, zz] : {std::tuple{"before", &d, z}, std::tuple{"after", &e, z_after}}) {
    if (!m.contains(side)) continue;
    const json& s = m[side];
    for (auto mode : {SmoothMode::regular, SmoothMode::irregular}) {
      const std::string key = to_string(mode);
      const LinkDiagram sm = smooth(*dd, zz, mode).diagram;
      const std::string what = key + " smoothing at z " + side + " the move";
      if (s.contains(key)) c.add(what, s[key].get<std::string>(), [&] { return identify(sm).name; });
      if (s.contains("u_" + key))
        c.add("u of " + what, std::to_string(s["u_" + key].get<int>()), [&] { return u_text(unknotting_number(sm, o)); });
    }
  }
  if (m.contains("a"))
    c.add("changing a in the regular smoothing at z gives", "trivial 2-link", [&] {
      auto dz = regular_smooth(d, z).diagram;
      auto changed = simplify(crossing_change(dz, m["a"].get<int>() - 1)).diagram;
      return changed.crossing_count() == 0 ? identify(changed).name : std::string("a diagram with crossings");
    });
  for (const auto& [key, s] : {std::pair{"delta_iu_plus", +1}, std::pair{"delta_iu_minus", -1}}) {
    if (!m.contains(key)) continue;
    const std::string what = std::string("|change of iu(") + (s > 0 ? "+1" : "-1") + ")|";
    c.add(what, std::to_string(m[key].get<int>()), [&, s = s] {
      return halves(std::llabs(iu(e, knot_config(s, o)).twice() - iu(d, knot_config(s, o)).twice()));
    });
    // Crossings other than z contribute equally before and after.
    c.add(what + " comes from z alone", "yes", [&, s = s] {
      auto a = iu(d, knot_config(s, o)), b = iu(e, knot_config(s, o));
      for (size_t i = 0; i < a.ledger.size(); ++i)
        if (static_cast<int>(i) != z && a.ledger[i].lo2 != b.ledger[i].lo2) return std::string("no");
      return std::string("yes");
    });
  }
}

}  // namespace

std::vector<Check> verify_fixture(const std::string& name, const UnknotOptions& o) {
  Collector c{name, {}};
  Fixture f;
  try {
    f = fixture(name);
  } catch (const std::exception& e) {
    c.out.push_back({name, "load", "ok", e.what(), false});
    return c.out;
  }
  const json m = json::parse(f.manifest);
  check_basics(f.diagram, m, c, o);
  check_labels(f.diagram, m, c, o);
  check_knot_invariants(f, m, c, o);
  check_link_config(f, m, c, o);
  check_witness(f, m, c, o);
  return c.out;
}

std::vector<Check> verify_oracle(const UnknotOptions& o) {
  Collector c{"oracle", {}};
  const std::vector<std::pair<std::string, int>> table = {
      {"Hopf", 1}, {"T(2,4)", 2}, {"T(2,8)", 4}, {"3_1", 1},          {"5_1", 2},          {"5_2", 1},
      {"7_4", 2},  {"10_2", 3},   {"unknot", 0}, {"trivial 2-link", 0}, {"trivial 3-link", 0}, {"trivial 4-link", 0}};
  for (const auto& [name, u] : table)
    c.add("u(" + name + ")", std::to_string(u), [&, name = name] {
      auto d = named_diagram(name);
      if (!d) return std::string("not in the catalogue");
      return u_text(unknotting_number(*d, o));
    });
  c.add("signature of the 10_2 reference diagram", "-6",
        [&] { return std::to_string(seifert(*named_diagram("10_2")).signature); });
  const LinkDiagram sum = connected_sum(rational_link({6}), rational_link({3}));
  c.add("u(T(2,6) # 3_1)", "4", [&] { return u_text(unknotting_number(sum, o)); });
  c.add("component lower bound for T(2,6) # 3_1", "4", [&] {
    for (const auto& w : u_lower(sum, o).second)
      if (w.kind == "component") return std::to_string(w.value);
    return std::string("no component witness");
  });
  return c.out;
}

std::vector<Check> verify_all(const UnknotOptions& o) {
  std::vector<Check> out;
  for (const auto& n : fixture_names()) {
    auto v = verify_fixture(n, o);
    out.insert(out.end(), v.begin(), v.end());
  }
  auto v = verify_oracle(o);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string to_json(const std::vector<Check>& checks) {
  json a = json::array();
  for (const auto& k : checks)
    a.push_back({{"subject", k.subject}, {"property", k.property}, {"expected", k.expected}, {"actual", k.actual},
                 {"pass", k.pass}});
  return a.dump(1);
}

std::string to_table(const std::vector<Check>& checks) {
  size_t w = 0;
  for (const auto& k : checks) w = std::max(w, k.subject.size() + k.property.size() + 2);
  std::ostringstream s;
  for (const auto& k : checks) {
    std::string what = k.subject + ": " + k.property;
    s << (k.pass ? "PASS  " : "FAIL  ") << what << std::string(w - what.size() + 2, ' ') << "expected " << k.expected;
    if (!k.pass) s << ", got " << k.actual;
    s << "\n";
  }
  return s.str();
}

}  // namespace rmb
