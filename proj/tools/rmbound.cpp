// Command-line front end.  Exit codes: 0 success (and, for verify-fixtures,
// every check passing), 1 a failed check or inapplicable move, 2 malformed
// input or arguments, 3 an oracle that did not resolve where an exact value
// is required.

#include "rmb/checks.hpp"
#include "rmb/fixtures.hpp"
#include "rmb/identify.hpp"
#include "rmb/invariants.hpp"
#include "rmb/moves.hpp"
#include "rmb/pd_io.hpp"
#include "rmb/smoothing.hpp"
#include "rmb/unknotting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

using namespace rmb;
using nlohmann::json;

namespace {

struct Options {
  std::string diagram, fixture, diagram2, fixture2;
  std::string moves_path, s_path, t_path, cache;
  std::string which = "iu", mode = "regular";
  int crossing = 0;
  std::optional<int> eps, delta;
  bool signed_mode = false, as_json = false, adds = false;
  long budget = 20000;
  int threads = 1;
  std::vector<std::string> only;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

LinkDiagram load(const std::string& path, const std::string& name, const char* what) {
  if (!path.empty()) return parse_diagram(read_file(path));
  if (!name.empty()) {
    if (auto d = named_diagram(name)) return *d;
    throw UsageError(std::string("unknown fixture ") + name);
  }
  throw UsageError(std::string("no ") + what + " given (use --diagram or --fixture)");
}

UnknotOptions oracle(const Options& o) {
  UnknotOptions u;
  u.budget = o.budget;
  u.threads = o.threads;
  u.cache_path = o.cache;
  if (u.cache_path.empty())
    if (const char* dir = std::getenv("KNOT_CACHE_DIR"))
      u.cache_path = (std::filesystem::path(dir) / "unknotting.cache").string();
  return u;
}

IuConfig config(const Options& o, const LinkDiagram& d) {
  IuConfig c;
  const int n = d.component_count();
  c.S = o.s_path.empty() ? constant_matrix(n, +1) : parse_sign_matrix(read_file(o.s_path));
  c.T = o.t_path.empty() ? constant_matrix(n, +1) : parse_sign_matrix(read_file(o.t_path));
  c.eps = o.eps;
  c.delta = o.delta;
  c.signed_mode = o.signed_mode;
  c.oracle = oracle(o);
  check_config(c, n);
  return c;
}

int cmd_validate(const Options& o) {
  LinkDiagram d = load(o.diagram, o.fixture, "diagram");
  if (o.as_json) {
    json j = {{"valid", true},
              {"crossings", d.crossing_count()},
              {"components", d.component_count()},
              {"writhe", d.writhe()},
              {"oriented", d.oriented()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "valid: " << d.crossing_count() << " crossings, " << d.component_count() << " components, writhe "
              << d.writhe() << "\n";
  }
  return 0;
}

int cmd_identify(const Options& o) {
  LinkDiagram d = load(o.diagram, o.fixture, "diagram");
  Identification id = identify(d, o.budget);
  if (o.as_json) {
    json j = {{"name", id.name}, {"found", id.found}, {"fingerprint", id.fp.to_string()}};
    if (id.entry) j["citation"] = id.entry->citation;
    if (!id.factors.empty()) j["factors"] = id.factors;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << id.name << "\n" << id.fp.to_string() << "\n";
  }
  return 0;
}

int cmd_smooth(const Options& o) {
  LinkDiagram d = load(o.diagram, o.fixture, "diagram");
  if (o.crossing < 1 || o.crossing > d.crossing_count())
    throw UsageError("crossing " + std::to_string(o.crossing) + " does not exist");
  if (o.mode != "regular" && o.mode != "irregular") throw UsageError("mode must be regular or irregular");
  auto r = smooth(d, o.crossing - 1, o.mode == "regular" ? SmoothMode::regular : SmoothMode::irregular);
  std::cout << to_json(r.diagram) << "\n";
  return 0;
}

int cmd_moves(const Options& o) {
  LinkDiagram d = load(o.diagram, o.fixture, "diagram");
  if (!o.moves_path.empty()) {
    MoveSequence s{d, parse_events(read_file(o.moves_path))};
    std::cout << to_json(run_sequence(s).back()) << "\n";
    return 0;
  }
  auto events = enumerate_moves(d, o.adds);
  if (o.as_json) {
    json a = json::array();
    for (const auto& e : events) a.push_back(serialize_event(e));
    std::cout << a.dump() << "\n";
  } else {
    std::cout << serialize_events(events);
  }
  return 0;
}

int cmd_simplify(const Options& o) {
  LinkDiagram d = load(o.diagram, o.fixture, "diagram");
  auto r = simplify(d, o.budget);
  if (o.as_json) {
    json j = {{"diagram", json::parse(to_json(r.diagram))},
              {"moves", serialize_events(r.sequence.events)},
              {"budget_exhausted", r.budget_exhausted}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_json(r.diagram) << "\n" << serialize_events(r.sequence.events);
  }
  return 0;
}

int cmd_unknotting(const Options& o) {
  LinkDiagram d = load(o.diagram, o.fixture, "diagram");
  UInterval u = unknotting_number(d, oracle(o));
  if (o.as_json) {
    std::cout << to_json(u) << "\n";
    return 0;
  }
  if (u.exact()) std::cout << "u = " << u.lo << "\n";
  else std::cout << "u in [" << u.lo << ", " << (u.hi ? std::to_string(*u.hi) : "?") << "]\n";
  for (const auto& w : u.witnesses) std::cout << "  " << w.kind << " " << w.value << "  " << w.detail << "\n";
  return 0;
}

int cmd_invariant(const Options& o) {
  LinkDiagram d = load(o.diagram, o.fixture, "diagram");
  if (o.which == "ilk" || o.which == "g" || o.which == "g0") {
    FormalSum s = ilk(d);
    if (o.which == "ilk") std::cout << (o.as_json ? json(to_string(s)).dump() : to_string(s)) << "\n";
    else std::cout << (o.which == "g" ? g(s) : g0(s)) << "\n";
    return 0;
  }
  if (o.which != "iu") throw UsageError("--which must be ilk, g, g0 or iu");
  IuValue v = iu(d, config(o, d));
  std::cout << (o.as_json ? to_json(v) : v.value_string()) << "\n";
  return v.exact() ? 0 : 3;
}

int cmd_bound(const Options& o) {
  LinkDiagram a = load(o.diagram, o.fixture, "diagram");
  LinkDiagram b = o.diagram2.empty() && o.fixture2.empty() ? LinkDiagram::trivial(a.component_count())
                                                           : load(o.diagram2, o.fixture2, "second diagram");
  if (a.component_count() != b.component_count()) throw UsageError("the diagrams have different component counts");
  IuConfig c = config(o, a);
  IuValue va = iu(a, c), vb = iu(b, c);
  int k = move_bound(va, vb);
  const bool all_moves = c.eps.has_value();
  if (o.as_json) {
    json j = {{"bound", k},
              {"counts", all_moves ? "Reidemeister moves" : "RII and RIII moves"},
              {"first", va.value_string()},
              {"second", vb.value_string()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << k << " " << (all_moves ? "Reidemeister moves" : "RII and RIII moves") << " at least\n";
  }
  return 0;
}

int cmd_trace(const Options& o) {
  LinkDiagram d = load(o.diagram, o.fixture, "diagram");
  MoveSequence s{d, {}};
  if (!o.moves_path.empty()) s.events = parse_events(read_file(o.moves_path));
  else if (!o.fixture.empty()) s = fixture(o.fixture == "D" ? "unknot_D" : o.fixture == "F" ? "twist_F" : o.fixture).moves;
  auto values = trace(s, config(o, d));
  if (o.as_json) {
    json a = json::array();
    for (const auto& v : values) a.push_back(v.value_string());
    std::cout << a.dump() << "\n";
  } else {
    for (size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i].value_string();
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<Check> checks;
  auto u = oracle(o);
  if (o.only.empty()) {
    checks = verify_all(u);
  } else {
    for (const auto& n : o.only) {
      static const std::map<std::string, std::string> alias = {
          {"D", "unknot_D"}, {"E", "unknot_D"}, {"F", "twist_F"}, {"G", "twist_F"}, {"example", "example_D"}};
      auto it = alias.find(n);
      auto v = n == "oracle" ? verify_oracle(u) : verify_fixture(it == alias.end() ? n : it->second, u);
      checks.insert(checks.end(), v.begin(), v.end());
    }
  }
  std::cout << (o.as_json ? to_json(checks) + "\n" : to_table(checks));
  for (const auto& c : checks)
    if (!c.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reidemeister move lower bounds from irregular smoothings"};
  app.require_subcommand(1);
  Options o;

  auto diagram_opts = [&](CLI::App* c) {
    c->add_option("--diagram", o.diagram, "diagram file (JSON or PD text)");
    c->add_option("--fixture", o.fixture, "built-in diagram: U, example, D, E, F, G or a catalogue name");
  };
  auto oracle_opts = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "search budget");
    c->add_option("--cache", o.cache, "unknotting cache file (default $KNOT_CACHE_DIR/unknotting.cache)");
    c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto config_opts = [&](CLI::App* c) {
    c->add_option("--S", o.s_path, "file with the matrix S (default all +1)");
    c->add_option("--T", o.t_path, "file with the matrix T (default all +1)");
    c->add_option("--eps", o.eps, "epsilon, +1 or -1")->check(CLI::IsMember({-1, 1}));
    c->add_option("--delta", o.delta, "delta, +1 or -1")->check(CLI::IsMember({-1, 1}));
    c->add_flag("--signed", o.signed_mode, "drop the absolute values");
  };
  auto json_opt = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "machine-readable output"); };

  std::map<CLI::App*, int (*)(const Options&)> handlers;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, help);
    handlers[c] = fn;
    return c;
  };

  auto* validate = sub("validate", "check a diagram", cmd_validate);
  diagram_opts(validate);
  json_opt(validate);

  auto* ident = sub("identify", "name the link type, or unknown, with its fingerprint", cmd_identify);
  diagram_opts(ident);
  ident->add_option("--budget", o.budget, "simplification budget");
  json_opt(ident);

  auto* sm = sub("smooth", "smooth one crossing", cmd_smooth);
  diagram_opts(sm);
  sm->add_option("--crossing", o.crossing, "crossing id (1-based)")->required();
  sm->add_option("--mode", o.mode, "regular or irregular");

  auto* mv = sub("moves", "list applicable moves, or apply a move file", cmd_moves);
  diagram_opts(mv);
  mv->add_option("--apply", o.moves_path, "move file to run; prints the final diagram");
  mv->add_flag("--adds", o.adds, "also list RI and RII adding moves");
  json_opt(mv);

  auto* simp = sub("simplify", "greedy simplification", cmd_simplify);
  diagram_opts(simp);
  simp->add_option("--budget", o.budget, "moves explored");
  json_opt(simp);

  auto* un = sub("unknotting", "unknotting number interval with witnesses", cmd_unknotting);
  diagram_opts(un);
  oracle_opts(un);
  json_opt(un);

  auto* inv = sub("invariant", "ilk, g, g0 or iu", cmd_invariant);
  diagram_opts(inv);
  inv->add_option("--which", o.which, "ilk, g, g0 or iu");
  config_opts(inv);
  oracle_opts(inv);
  json_opt(inv);

  auto* bd = sub("bound", "lower bound on moves between two diagrams", cmd_bound);
  diagram_opts(bd);
  bd->add_option("--diagram2", o.diagram2, "second diagram (default: crossing-free)");
  bd->add_option("--fixture2", o.fixture2, "second built-in diagram");
  config_opts(bd);
  oracle_opts(bd);
  json_opt(bd);

  auto* tr = sub("trace", "invariant after each move of a sequence", cmd_trace);
  diagram_opts(tr);
  tr->add_option("--moves", o.moves_path, "move file (default: the fixture's own sequence)");
  config_opts(tr);
  oracle_opts(tr);
  json_opt(tr);

  auto* ver = sub("verify-fixtures", "re-derive every fixture fact and the oracle table", cmd_verify);
  ver->alias("verify-paper");
  ver->add_option("--fixture", o.only, "U, example, D, F or oracle (repeatable; default all)");
  oracle_opts(ver);
  json_opt(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [c, fn] : handlers)
      if (c->parsed()) return fn(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid diagram: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const OracleUnresolved& e) {
    std::cerr << "unresolved: " << e.what() << "\n";
    return 3;
  } catch (const InapplicableMove& e) {
    std::cerr << "inapplicable move";
    if (e.step() >= 0) std::cerr << " at step " << e.step() + 1;
    std::cerr << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
