#include "rmb/moves.hpp"

#include "rmb/net.hpp"
#include "rmb/pd_io.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace rmb {

InapplicableMove::InapplicableMove(const std::string& msg, int step)
    : std::runtime_error(step >= 0 ? "step " + std::to_string(step + 1) + ": " + msg : msg),
      step_(step) {}

namespace {

// Piece id of the arc under a dart; free loops get ids after crossing pieces.
int dart_piece(const LinkDiagram& d, const std::vector<int>& piece, int pieces, int edge) {
  if (edge < d.edge_count()) return piece[d.head(edge).crossing];
  return pieces + (edge - d.edge_count());
}

bool edge_over_at_both_ends(const LinkDiagram& d, int e) {
  return d.slot_is_over(d.head(e).crossing, d.head(e).slot) &&
         d.slot_is_over(d.tail(e).crossing, d.tail(e).slot);
}

bool edge_under_at_both_ends(const LinkDiagram& d, int e) {
  return !d.slot_is_over(d.head(e).crossing, d.head(e).slot) &&
         !d.slot_is_over(d.tail(e).crossing, d.tail(e).slot);
}

bool distinct_corners(const Face& f) {
  for (size_t i = 0; i < f.corners.size(); ++i)
    for (size_t j = i + 1; j < f.corners.size(); ++j)
      if (f.corners[i] == f.corners[j]) return false;
  return true;
}

bool face_is_monogon(const LinkDiagram& d, const Face& f) {
  return f.darts.size() == 1 && f.darts[0].edge < d.edge_count();
}

bool face_is_reducing_bigon(const LinkDiagram& d, const Face& f) {
  if (f.darts.size() != 2 || !distinct_corners(f)) return false;
  int a = f.darts[0].edge, b = f.darts[1].edge;
  return (edge_over_at_both_ends(d, a) && edge_under_at_both_ends(d, b)) ||
         (edge_over_at_both_ends(d, b) && edge_under_at_both_ends(d, a));
}

bool face_is_r3_trigon(const LinkDiagram& d, const Face& f) {
  if (f.darts.size() != 3 || !distinct_corners(f)) return false;
  int top = 0, bottom = 0;
  for (const auto& dt : f.darts) {
    if (edge_over_at_both_ends(d, dt.edge)) ++top;
    if (edge_under_at_both_ends(d, dt.edge)) ++bottom;
  }
  return top == 1 && bottom == 1;
}

// Replaces the wire under dart (w, fwd) by a path through the given passes
// (crossing, entry slot, exit slot), in travel order.
void route(Net& n, int w, bool fwd, const std::vector<std::array<int, 3>>& passes) {
  const int t = fwd ? +1 : -1;
  Net::Wire& wire = n.ws[w];
  const int tag = wire.tag;
  if (wire.free) {
    n.ws[w].free = false;
    const auto& last = passes.back();
    const auto& first = passes.front();
    n.ws[w].a = {last[0], last[2]};
    n.ws[w].b = {first[0], first[1]};
    n.ws[w].dir = t;
    n.xs[last[0]].w[last[2]] = w;
    n.xs[first[0]].w[first[1]] = w;
    for (size_t i = 0; i + 1 < passes.size(); ++i)
      n.add_wire({passes[i][0], passes[i][2]}, {passes[i + 1][0], passes[i + 1][1]}, t, tag,
                 n.next_key++);
    return;
  }
  Net::End start = fwd ? wire.a : wire.b;
  Net::End finish = fwd ? wire.b : wire.a;
  n.ws[w].a = start;
  n.ws[w].b = {passes.front()[0], passes.front()[1]};
  n.ws[w].dir = t;
  n.xs[passes.front()[0]].w[passes.front()[1]] = w;
  for (size_t i = 0; i + 1 < passes.size(); ++i)
    n.add_wire({passes[i][0], passes[i][2]}, {passes[i + 1][0], passes[i + 1][1]}, t, tag,
               n.next_key++);
  n.add_wire({passes.back()[0], passes.back()[2]}, finish, t, tag, n.next_key++);
}

void net_r3(Net& n, const LinkDiagram& d, const Face& f) {
  struct Side {
    int w;
    Net::End p, q;
  };
  std::vector<Side> sides;
  for (const auto& dt : f.darts) {
    int e = dt.edge;
    EdgeEnd t = d.tail(e), h = d.head(e);
    sides.push_back({e, {t.crossing, t.slot}, {h.crossing, h.slot}});
  }
  struct Remap {
    int w;
    Net::End old_end, new_end;
  };
  std::vector<Remap> remaps;
  for (const auto& s : sides) {
    Net::End po{s.p.x, (s.p.s + 2) % 4}, qo{s.q.x, (s.q.s + 2) % 4};
    remaps.push_back({n.xs[po.x].w[po.s], po, s.q});
    remaps.push_back({n.xs[qo.x].w[qo.s], qo, s.p});
  }
  for (const auto& r : remaps) n.end_of(r.w, r.old_end) = r.new_end;
  for (const auto& s : sides) {
    Net::Wire& w = n.ws[s.w];
    // old a->b ran p->q; the strand now runs (q,q+2) -> (p,p+2)
    Net::End na{s.q.x, (s.q.s + 2) % 4}, nb{s.p.x, (s.p.s + 2) % 4};
    bool a_was_p = w.a == s.p;
    w.a = a_was_p ? na : nb;
    w.b = a_was_p ? nb : na;
  }
  for (const auto& s : sides)
    for (int x : {s.p.x, s.q.x}) n.xs[x].w = {-1, -1, -1, -1};
  for (int w = 0; w < static_cast<int>(n.ws.size()); ++w) {
    const auto& wr = n.ws[w];
    if (!wr.alive || wr.free) continue;
    for (const auto& s : sides)
      for (int x : {s.p.x, s.q.x}) {
        if (wr.a.x == x) n.xs[x].w[wr.a.s] = w;
        if (wr.b.x == x) n.xs[x].w[wr.b.s] = w;
      }
  }
}

}  // namespace

std::vector<MoveEvent> reducing_moves(const LinkDiagram& d) {
  std::vector<MoveEvent> out;
  auto fs = d.faces();
  for (size_t i = 0; i < fs.size(); ++i)
    if (face_is_monogon(d, fs[i])) {
      MoveEvent e;
      e.kind = MoveKind::RI_remove;
      e.face = static_cast<int>(i);
      out.push_back(e);
    }
  for (size_t i = 0; i < fs.size(); ++i)
    if (face_is_reducing_bigon(d, fs[i])) {
      MoveEvent e;
      e.kind = MoveKind::RII_remove;
      e.face = static_cast<int>(i);
      e.tag = classify_r2(d, e);
      out.push_back(e);
    }
  return out;
}

std::vector<MoveEvent> r3_moves(const LinkDiagram& d) {
  std::vector<MoveEvent> out;
  auto fs = d.faces();
  for (size_t i = 0; i < fs.size(); ++i)
    if (face_is_r3_trigon(d, fs[i])) {
      MoveEvent e;
      e.kind = MoveKind::RIII;
      e.face = static_cast<int>(i);
      out.push_back(e);
    }
  return out;
}

std::vector<MoveEvent> enumerate_moves(const LinkDiagram& d, bool include_adds) {
  std::vector<MoveEvent> out = reducing_moves(d);
  auto r3 = r3_moves(d);
  out.insert(out.end(), r3.begin(), r3.end());
  if (!include_adds) return out;
  const int arcs = d.dart_edge_count();
  for (int e = 0; e < arcs; ++e)
    for (bool fwd : {true, false})
      for (int sign : {+1, -1}) {
        MoveEvent m;
        m.kind = MoveKind::RI_add;
        m.d1 = {e, fwd};
        m.sign = sign;
        out.push_back(m);
      }
  auto fs = d.faces();
  auto df = d.dart_faces(fs);
  auto piece = d.crossing_piece();
  int pieces = 0;
  for (int p : piece) pieces = std::max(pieces, p + 1);
  std::vector<Dart> darts;
  for (int e = 0; e < arcs; ++e)
    for (bool fwd : {true, false}) darts.push_back({e, fwd});
  for (size_t i = 0; i < darts.size(); ++i)
    for (size_t j = i + 1; j < darts.size(); ++j) {
      const Dart &a = darts[i], &b = darts[j];
      if (a.edge == b.edge) continue;
      bool same_piece = dart_piece(d, piece, pieces, a.edge) == dart_piece(d, piece, pieces, b.edge);
      if (same_piece && df[LinkDiagram::dart_index(a)] != df[LinkDiagram::dart_index(b)]) continue;
      for (int over : {1, 2}) {
        MoveEvent m;
        m.kind = MoveKind::RII_add;
        m.d1 = a;
        m.d2 = b;
        m.over = over;
        m.tag = classify_r2(d, m);
        out.push_back(m);
      }
    }
  return out;
}

bool applicable(const LinkDiagram& d, const MoveEvent& e, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const int arcs = d.dart_edge_count();
  switch (e.kind) {
    case MoveKind::RI_remove:
    case MoveKind::RII_remove:
    case MoveKind::RIII: {
      auto fs = d.faces();
      if (e.face < 0 || e.face >= static_cast<int>(fs.size()))
        return fail("face " + std::to_string(e.face + 1) + " does not exist");
      const Face& f = fs[e.face];
      if (e.kind == MoveKind::RI_remove && !face_is_monogon(d, f))
        return fail("face " + std::to_string(e.face + 1) + " is not a monogon");
      if (e.kind == MoveKind::RII_remove && !face_is_reducing_bigon(d, f))
        return fail("face " + std::to_string(e.face + 1) +
                    " is not a bigon with one strand over at both corners");
      if (e.kind == MoveKind::RIII && !face_is_r3_trigon(d, f))
        return fail("face " + std::to_string(e.face + 1) +
                    " is not a trigon with top, middle and bottom strands");
      return true;
    }
    case MoveKind::RI_add:
      if (e.d1.edge < 0 || e.d1.edge >= arcs)
        return fail("arc " + std::to_string(e.d1.edge + 1) + " does not exist");
      if (e.sign != 1 && e.sign != -1) return fail("kink sign must be + or -");
      return true;
    case MoveKind::RII_add: {
      if (e.d1.edge < 0 || e.d1.edge >= arcs || e.d2.edge < 0 || e.d2.edge >= arcs)
        return fail("arc does not exist");
      if (e.d1.edge == e.d2.edge) return fail("RII needs two distinct arcs");
      if (e.over != 1 && e.over != 2) return fail("over must be 1 or 2");
      auto piece = d.crossing_piece();
      int pieces = 0;
      for (int p : piece) pieces = std::max(pieces, p + 1);
      if (dart_piece(d, piece, pieces, e.d1.edge) == dart_piece(d, piece, pieces, e.d2.edge)) {
        auto fs = d.faces();
        auto df = d.dart_faces(fs);
        if (df[LinkDiagram::dart_index(e.d1)] != df[LinkDiagram::dart_index(e.d2)])
          return fail("the two arc sides do not share a face");
      }
      return true;
    }
  }
  return fail("unknown move");
}

LinkDiagram apply(const LinkDiagram& d, const MoveEvent& e) {
  std::string why;
  if (!applicable(d, e, &why)) throw InapplicableMove(why);
  Net n = Net::from_diagram(d);
  switch (e.kind) {
    case MoveKind::RI_remove: {
      const Face f = d.faces()[e.face];
      n.dissolve(f.corners[0], {0, 2}, {1, 3});
      break;
    }
    case MoveKind::RII_remove: {
      const Face f = d.faces()[e.face];
      n.dissolve(f.corners[0], {0, 2}, {1, 3});
      n.dissolve(f.corners[1], {0, 2}, {1, 3});
      break;
    }
    case MoveKind::RIII: {
      const Face f = d.faces()[e.face];
      net_r3(n, d, f);
      break;
    }
    case MoveKind::RI_add: {
      // Travel S->N then W->E leaves the loop on the left of the dart.  With
      // the first pass over the crossing is positive.
      int x = n.add_crossing(e.sign > 0 ? 0 : 1);
      route(n, e.d1.edge, e.d1.fwd, {{x, 0, 2}, {x, 3, 1}});
      LinkDiagram out = n.build(d.oriented());
      if (out.sign(out.crossing_count() - 1) == e.sign) return out;
      n.xs[x].over_axis ^= 1;
      return n.build(d.oriented());
    }
    case MoveKind::RII_add: {
      int axis = e.over == 1 ? 0 : 1;
      int x = n.add_crossing(axis);
      int y = n.add_crossing(axis);
      route(n, e.d1.edge, e.d1.fwd, {{x, 0, 2}, {y, 2, 0}});
      route(n, e.d2.edge, e.d2.fwd, {{y, 1, 3}, {x, 1, 3}});
      break;
    }
  }
  return n.build(d.oriented());
}

int r3_top_bottom_crossing(const LinkDiagram& d, const MoveEvent& e) {
  if (e.kind != MoveKind::RIII || !applicable(d, e)) throw InapplicableMove("not an applicable RIII event");
  const Face f = d.faces()[e.face];
  int top = -1, bottom = -1;
  for (const auto& dt : f.darts) {
    if (edge_over_at_both_ends(d, dt.edge)) top = dt.edge;
    if (edge_under_at_both_ends(d, dt.edge)) bottom = dt.edge;
  }
  for (int a : {d.head(top).crossing, d.tail(top).crossing})
    for (int b : {d.head(bottom).crossing, d.tail(bottom).crossing})
      if (a == b) return a;
  throw InapplicableMove("trigon top and bottom edges share no crossing");
}

R2Tag classify_r2(const LinkDiagram& d, const MoveEvent& e) {
  if (e.kind == MoveKind::RII_add) return e.d1.fwd != e.d2.fwd ? R2Tag::matched : R2Tag::unmatched;
  if (e.kind == MoveKind::RII_remove) {
    const Face f = d.faces().at(e.face);
    if (f.darts.size() != 2) throw InapplicableMove("face is not a bigon");
    int a = f.darts[0].edge, b = f.darts[1].edge;
    return d.tail(a).crossing == d.tail(b).crossing ? R2Tag::matched : R2Tag::unmatched;
  }
  throw InapplicableMove("classify_r2 needs an RII event");
}

SimplifyResult simplify(const LinkDiagram& d, long budget) {
  SimplifyResult r{d, {d, {}}, false};
  auto step = [&](const MoveEvent& m) {
    r.diagram = apply(r.diagram, m);
    r.sequence.events.push_back(m);
  };
  while (true) {
    auto red = reducing_moves(r.diagram);
    if (!red.empty()) {
      if (budget <= 0) {
        r.budget_exhausted = true;
        break;
      }
      --budget;
      step(red.front());
      continue;
    }
    if (r.diagram.crossing_count() < 3) break;

    struct Node {
      LinkDiagram diagram;
      int parent;
      MoveEvent via;
    };
    std::vector<Node> nodes{{r.diagram, -1, {}}};
    std::unordered_set<std::string> seen{canonical_code(r.diagram)};
    int found = -1;
    bool out_of_budget = false;
    for (size_t qi = 0; qi < nodes.size() && found < 0; ++qi) {
      for (const auto& m : r3_moves(nodes[qi].diagram)) {
        if (budget <= 0) {
          out_of_budget = true;
          break;
        }
        --budget;
        LinkDiagram next = apply(nodes[qi].diagram, m);
        if (!seen.insert(canonical_code(next)).second) continue;
        nodes.push_back({std::move(next), static_cast<int>(qi), m});
        if (!reducing_moves(nodes.back().diagram).empty()) {
          found = static_cast<int>(nodes.size()) - 1;
          break;
        }
      }
      if (out_of_budget) break;
    }
    if (found < 0) {
      r.budget_exhausted = out_of_budget;
      break;
    }
    std::vector<MoveEvent> path;
    for (int i = found; nodes[i].parent >= 0; i = nodes[i].parent) path.push_back(nodes[i].via);
    std::reverse(path.begin(), path.end());
    for (const auto& m : path) step(m);
  }
  return r;
}

std::vector<LinkDiagram> run_sequence(const MoveSequence& s, const Observer& observer) {
  std::vector<LinkDiagram> out{s.initial};
  if (observer) observer(0, s.initial);
  for (size_t k = 0; k < s.events.size(); ++k) {
    std::string why;
    if (!applicable(out.back(), s.events[k], &why))
      throw InapplicableMove(why, static_cast<int>(k));
    out.push_back(apply(out.back(), s.events[k]));
    if (observer) observer(static_cast<int>(k) + 1, out.back());
  }
  return out;
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::RI_add: return "RI_add";
    case MoveKind::RI_remove: return "RI_remove";
    case MoveKind::RII_add: return "RII_add";
    case MoveKind::RII_remove: return "RII_remove";
    case MoveKind::RIII: return "RIII";
  }
  return "?";
}

namespace {

std::string dart_text(const Dart& d) {
  return std::to_string(d.edge + 1) + (d.fwd ? "L" : "R");
}

std::string tag_text(R2Tag t) {
  return t == R2Tag::matched ? " matched" : t == R2Tag::unmatched ? " unmatched" : "";
}

}  // namespace

std::string serialize_event(const MoveEvent& e) {
  std::ostringstream out;
  switch (e.kind) {
    case MoveKind::RI_add:
      out << "R1+ arc=" << e.d1.edge + 1 << " side=" << (e.d1.fwd ? "L" : "R")
          << " sign=" << (e.sign > 0 ? "+" : "-");
      break;
    case MoveKind::RI_remove: out << "R1- face=" << e.face + 1; break;
    case MoveKind::RII_add:
      out << "R2+ arcs=" << dart_text(e.d1) << "," << dart_text(e.d2) << " over=" << e.over
          << tag_text(e.tag);
      break;
    case MoveKind::RII_remove: out << "R2- face=" << e.face + 1 << tag_text(e.tag); break;
    case MoveKind::RIII: out << "R3 face=" << e.face + 1; break;
  }
  return out.str();
}

namespace {

int positive_int(const std::string& v, int col, int line) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), ::isdigit))
    throw ParseError(line, col, "expected a positive integer, got '" + v + "'");
  int k = std::stoi(v);
  if (k < 1) throw ParseError(line, col, "indices are 1-based");
  return k;
}

Dart parse_dart(const std::string& v, int col, int line) {
  if (v.size() < 2 || (v.back() != 'L' && v.back() != 'R'))
    throw ParseError(line, col, "expected <arc>L or <arc>R, got '" + v + "'");
  return {positive_int(v.substr(0, v.size() - 1), col, line) - 1, v.back() == 'L'};
}

MoveEvent parse_event_at(const std::string& line, int lineno) {
  std::vector<std::pair<std::string, int>> toks;
  for (size_t i = 0; i < line.size();) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  if (toks.empty()) throw ParseError(lineno, 1, "empty move line");
  MoveEvent e;
  const std::string& k = toks[0].first;
  if (k == "R1+") e.kind = MoveKind::RI_add;
  else if (k == "R1-") e.kind = MoveKind::RI_remove;
  else if (k == "R2+") e.kind = MoveKind::RII_add;
  else if (k == "R2-") e.kind = MoveKind::RII_remove;
  else if (k == "R3") e.kind = MoveKind::RIII;
  else throw ParseError(lineno, toks[0].second, "unknown move kind '" + k + "'");

  bool have_face = false, have_arc = false, have_side = false, have_sign = false,
       have_arcs = false, have_over = false;
  for (size_t i = 1; i < toks.size(); ++i) {
    const auto& [t, col] = toks[i];
    bool is_r2 = e.kind == MoveKind::RII_add || e.kind == MoveKind::RII_remove;
    if (is_r2 && (t == "matched" || t == "unmatched")) {
      e.tag = t == "matched" ? R2Tag::matched : R2Tag::unmatched;
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, col, "expected key=value, got '" + t + "'");
    std::string key = t.substr(0, eq), val = t.substr(eq + 1);
    int vcol = col + static_cast<int>(eq) + 1;
    if (key == "face" && (e.kind == MoveKind::RI_remove || e.kind == MoveKind::RII_remove ||
                          e.kind == MoveKind::RIII)) {
      e.face = positive_int(val, vcol, lineno) - 1;
      have_face = true;
    } else if (key == "arc" && e.kind == MoveKind::RI_add) {
      e.d1.edge = positive_int(val, vcol, lineno) - 1;
      have_arc = true;
    } else if (key == "side" && e.kind == MoveKind::RI_add) {
      if (val != "L" && val != "R") throw ParseError(lineno, vcol, "side must be L or R");
      e.d1.fwd = val == "L";
      have_side = true;
    } else if (key == "sign" && e.kind == MoveKind::RI_add) {
      if (val != "+" && val != "-") throw ParseError(lineno, vcol, "sign must be + or -");
      e.sign = val == "+" ? 1 : -1;
      have_sign = true;
    } else if (key == "arcs" && e.kind == MoveKind::RII_add) {
      auto comma = val.find(',');
      if (comma == std::string::npos) throw ParseError(lineno, vcol, "arcs needs two entries");
      e.d1 = parse_dart(val.substr(0, comma), vcol, lineno);
      e.d2 = parse_dart(val.substr(comma + 1), vcol + static_cast<int>(comma) + 1, lineno);
      have_arcs = true;
    } else if (key == "over" && e.kind == MoveKind::RII_add) {
      if (val != "1" && val != "2") throw ParseError(lineno, vcol, "over must be 1 or 2");
      e.over = val == "1" ? 1 : 2;
      have_over = true;
    } else {
      throw ParseError(lineno, col, "unexpected parameter '" + key + "' for " + k);
    }
  }
  bool complete = true;
  switch (e.kind) {
    case MoveKind::RI_add: complete = have_arc && have_side && have_sign; break;
    case MoveKind::RII_add: complete = have_arcs && have_over; break;
    default: complete = have_face; break;
  }
  if (!complete) throw ParseError(lineno, 1, "missing parameters for " + k);
  return e;
}

}  // namespace

MoveEvent parse_event(const std::string& line) { return parse_event_at(line, 1); }

std::string serialize_events(const std::vector<MoveEvent>& events) {
  std::string out;
  for (const auto& e : events) out += serialize_event(e) + "\n";
  return out;
}

std::vector<MoveEvent> parse_events(const std::string& text) {
  std::vector<MoveEvent> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      continue;
    out.push_back(parse_event_at(line, lineno));
  }
  return out;
}

}  // namespace rmb
