#include "rmb/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace rmb {

namespace {

std::string join_problems(const ValidationReport& r) {
  std::string s = "invalid diagram";
  for (const auto& p : r.problems) s += "; " + p;
  return s;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Resolves raw 1-based data into 0-based codes, collecting every problem.
bool resolve(const RawDiagram& raw, ValidationReport& rep, std::vector<CrossingCode>& codes,
             std::vector<int>& first, std::vector<int>& size) {
  const int c = static_cast<int>(raw.crossings.size());
  const int arcs = 2 * c;
  auto problem = [&](std::string s) { rep.problems.push_back(std::move(s)); };

  if (raw.components.empty()) problem("diagram has no components");

  // Component ranges must partition 1..arcs.
  std::vector<int> owner(arcs + 1, -1);
  first.assign(raw.components.size(), -1);
  size.assign(raw.components.size(), 0);
  bool ranges_ok = true;
  for (size_t k = 0; k < raw.components.size(); ++k) {
    const auto& r = raw.components[k];
    if (!r) continue;
    auto [lo, hi] = *r;
    if (lo < 1 || hi > arcs || lo > hi) {
      problem("component " + std::to_string(k + 1) + ": range [" + std::to_string(lo) + "," +
              std::to_string(hi) + "] outside arcs 1.." + std::to_string(arcs));
      ranges_ok = false;
      continue;
    }
    first[k] = lo - 1;
    size[k] = hi - lo + 1;
    for (int a = lo; a <= hi; ++a) {
      if (owner[a] >= 0) {
        problem("arc " + std::to_string(a) + " claimed by components " +
                std::to_string(owner[a] + 1) + " and " + std::to_string(k + 1));
        ranges_ok = false;
      }
      owner[a] = static_cast<int>(k);
    }
  }
  if (ranges_ok) {
    for (int a = 1; a <= arcs; ++a)
      if (owner[a] < 0) {
        problem("arc " + std::to_string(a) + " belongs to no component");
        ranges_ok = false;
      }
  }

  // Each label exactly twice.
  std::vector<int> count(arcs + 1, 0);
  bool labels_ok = true;
  for (int x = 0; x < c; ++x)
    for (int v : raw.crossings[x]) {
      if (v < 1 || v > arcs) {
        problem("crossing " + std::to_string(x + 1) + ": arc label " + std::to_string(v) +
                " out of range 1.." + std::to_string(arcs));
        labels_ok = false;
      } else {
        ++count[v];
      }
    }
  for (int a = 1; a <= arcs && labels_ok; ++a) {
    if (count[a] > 2) {
      problem("duplicate arc " + std::to_string(a) + " (appears " + std::to_string(count[a]) +
              " times)");
      labels_ok = false;
    }
  }
  for (int a = 1; a <= arcs && labels_ok; ++a)
    if (count[a] < 2) {
      problem("arc " + std::to_string(a) + " appears " + std::to_string(count[a]) +
              " time(s), expected 2");
      labels_ok = false;
    }
  if (!raw.signs.empty() && static_cast<int>(raw.signs.size()) != c) {
    problem("signs list has " + std::to_string(raw.signs.size()) + " entries for " +
            std::to_string(c) + " crossings");
    labels_ok = false;
  }
  for (int s : raw.signs)
    if (s != 1 && s != -1) {
      problem("sign values must be +1 or -1");
      labels_ok = false;
      break;
    }
  if (!ranges_ok || !labels_ok) return false;

  auto succ = [&](int e0) {  // 0-based
    int k = owner[e0 + 1];
    return first[k] + (e0 - first[k] + 1) % size[k];
  };

  codes.assign(c, {});
  // over in-slot per crossing: 1, 3, or 0 when undetermined by labels
  std::vector<int> in_slot(c, 0);
  bool local_ok = true;
  for (int x = 0; x < c; ++x) {
    auto& cc = codes[x];
    for (int s = 0; s < 4; ++s) cc.e[s] = raw.crossings[x][s] - 1;
    if (succ(cc.e[0]) != cc.e[2]) {
      problem("crossing " + std::to_string(x + 1) +
              ": under sides (slots 1 and 3) are not consecutive arcs");
      local_ok = false;
    }
    bool fwd13 = succ(cc.e[1]) == cc.e[3];
    bool fwd31 = succ(cc.e[3]) == cc.e[1];
    if (!fwd13 && !fwd31) {
      problem("crossing " + std::to_string(x + 1) +
              ": over sides (slots 2 and 4) are not consecutive arcs");
      local_ok = false;
    } else if (fwd13 && !fwd31) {
      in_slot[x] = 1;
    } else if (fwd31 && !fwd13) {
      in_slot[x] = 3;
    }
  }
  if (!local_ok) return false;

  // Heads determined so far; then resolve two-edge over/over components.
  std::vector<int> heads(arcs, 0), tails(arcs, 0);
  for (int x = 0; x < c; ++x) {
    ++heads[codes[x].e[0]];
    ++tails[codes[x].e[2]];
    if (in_slot[x]) {
      ++heads[codes[x].e[in_slot[x]]];
      ++tails[codes[x].e[in_slot[x] ^ 2]];
    }
  }
  for (int x = 0; x < c; ++x) {
    if (in_slot[x]) continue;
    const auto& e = codes[x].e;
    if (!raw.signs.empty()) {
      in_slot[x] = raw.signs[x] > 0 ? 1 : 3;
    } else if (heads[e[1]] == 0 && heads[e[3]] > 0) {
      in_slot[x] = 1;
    } else if (heads[e[3]] == 0 && heads[e[1]] > 0) {
      in_slot[x] = 3;
    } else {
      in_slot[x] = 1;
    }
    ++heads[e[in_slot[x]]];
    ++tails[e[in_slot[x] ^ 2]];
  }
  for (int x = 0; x < c; ++x) {
    codes[x].sign = in_slot[x] == 1 ? +1 : -1;
    if (!raw.signs.empty() && raw.signs[x] != codes[x].sign)
      problem("crossing " + std::to_string(x + 1) + ": declared sign " +
              std::to_string(raw.signs[x]) + " contradicts arc orientations");
  }
  for (int a = 0; a < arcs; ++a)
    if (heads[a] != 1 || tails[a] != 1)
      problem("arc " + std::to_string(a + 1) + " enters " + std::to_string(heads[a]) +
              " and leaves " + std::to_string(tails[a]) + " crossings (expected 1 and 1)");
  return rep.ok();
}

}  // namespace

ValidationError::ValidationError(ValidationReport r)
    : std::runtime_error(join_problems(r)), report_(std::move(r)) {}

ValidationReport validate(const RawDiagram& raw) {
  ValidationReport rep;
  std::vector<CrossingCode> codes;
  std::vector<int> first, size;
  if (!resolve(raw, rep, codes, first, size)) return rep;
  LinkDiagram d;
  try {
    d = LinkDiagram::from_codes(codes, first, size, raw.oriented);
  } catch (const ValidationError& e) {
    return e.report();
  }
  return rep;
}

LinkDiagram LinkDiagram::from_raw(const RawDiagram& raw) {
  ValidationReport rep;
  std::vector<CrossingCode> codes;
  std::vector<int> first, size;
  if (!resolve(raw, rep, codes, first, size)) throw ValidationError(rep);
  return from_codes(std::move(codes), std::move(first), std::move(size), raw.oriented);
}

LinkDiagram LinkDiagram::from_codes(std::vector<CrossingCode> crossings, std::vector<int> comp_first,
                                    std::vector<int> comp_size, bool oriented) {
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  d.comp_first_ = std::move(comp_first);
  d.comp_size_ = std::move(comp_size);
  d.oriented_ = oriented;
  for (size_t k = 0; k < d.comp_size_.size(); ++k)
    if (d.comp_size_[k] == 0) d.comp_first_[k] = -1;
  d.index();
  ValidationReport rep = validate(d);
  if (!rep.ok()) throw ValidationError(rep);
  return d;
}

LinkDiagram LinkDiagram::trivial(int components) {
  return from_codes({}, std::vector<int>(components, -1), std::vector<int>(components, 0));
}

LinkDiagram LinkDiagram::with_oriented(bool flag) const {
  LinkDiagram d = *this;
  d.oriented_ = flag;
  return d;
}

void LinkDiagram::index() {
  const int arcs = 2 * crossing_count();
  edge_comp_.assign(arcs, -1);
  for (int k = 0; k < component_count(); ++k)
    for (int i = 0; i < comp_size_[k]; ++i) {
      int e = comp_first_[k] + i;
      if (e >= 0 && e < arcs) edge_comp_[e] = k;
    }
  head_.assign(arcs, {});
  tail_.assign(arcs, {});
  for (int x = 0; x < crossing_count(); ++x) {
    const auto& cc = crossings_[x];
    int oin = cc.sign > 0 ? 1 : 3;
    auto put = [&](std::vector<EdgeEnd>& v, int e, int s) {
      if (e >= 0 && e < arcs) v[e] = {x, s};
    };
    put(head_, cc.e[0], 0);
    put(tail_, cc.e[2], 2);
    put(head_, cc.e[oin], oin);
    put(tail_, cc.e[oin ^ 2], oin ^ 2);
  }
}

RawDiagram LinkDiagram::to_raw() const {
  RawDiagram raw;
  raw.oriented = oriented_;
  bool ambiguous = false;
  for (const auto& cc : crossings_) {
    raw.crossings.push_back({cc.e[0] + 1, cc.e[1] + 1, cc.e[2] + 1, cc.e[3] + 1});
    if (next_edge(cc.e[1]) == cc.e[3] && next_edge(cc.e[3]) == cc.e[1]) ambiguous = true;
  }
  for (int k = 0; k < component_count(); ++k) {
    if (comp_size_[k] == 0)
      raw.components.push_back(std::nullopt);
    else
      raw.components.push_back(std::make_pair(comp_first_[k] + 1, comp_first_[k] + comp_size_[k]));
  }
  if (ambiguous)
    for (const auto& cc : crossings_) raw.signs.push_back(cc.sign);
  return raw;
}

int LinkDiagram::free_loop_count() const {
  return static_cast<int>(std::count(comp_size_.begin(), comp_size_.end(), 0));
}

const CrossingCode& LinkDiagram::crossing(int x) const {
  if (x < 0 || x >= crossing_count())
    throw std::out_of_range("unknown crossing id " + std::to_string(x + 1));
  return crossings_[x];
}

int LinkDiagram::sign(int x) const { return crossing(x).sign; }

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& cc : crossings_) w += cc.sign;
  return w;
}

int LinkDiagram::free_loop_edge(int k) const {
  int idx = 0;
  for (int j = 0; j < k; ++j)
    if (comp_size_[j] == 0) ++idx;
  return edge_count() + idx;
}

int LinkDiagram::component_of_edge(int e) const {
  if (e < edge_count()) return edge_comp_[e];
  int idx = e - edge_count();
  for (int k = 0; k < component_count(); ++k)
    if (comp_size_[k] == 0 && idx-- == 0) return k;
  throw std::out_of_range("unknown arc " + std::to_string(e + 1));
}

int LinkDiagram::next_edge(int e) const {
  if (e >= edge_count()) return e;
  int k = edge_comp_[e];
  return comp_first_[k] + (e - comp_first_[k] + 1) % comp_size_[k];
}

int LinkDiagram::prev_edge(int e) const {
  if (e >= edge_count()) return e;
  int k = edge_comp_[e];
  return comp_first_[k] + (e - comp_first_[k] + comp_size_[k] - 1) % comp_size_[k];
}

int LinkDiagram::over_component(int x) const {
  return edge_comp_[crossing(x).e[over_in_slot(x)]];
}

int LinkDiagram::under_component(int x) const { return edge_comp_[crossing(x).e[0]]; }

std::vector<std::vector<int>> LinkDiagram::linking_matrix() const {
  const int n = component_count();
  std::vector<std::vector<int>> twice(n, std::vector<int>(n, 0));
  for (int x = 0; x < crossing_count(); ++x) {
    int a = over_component(x), b = under_component(x);
    if (a == b) continue;
    twice[a][b] += crossings_[x].sign;
    twice[b][a] += crossings_[x].sign;
  }
  for (auto& row : twice)
    for (int& v : row) v /= 2;
  return twice;
}

std::vector<Face> LinkDiagram::faces() const {
  const int arcs = edge_count();
  std::vector<int> piece = crossing_piece();
  std::vector<char> seen(2 * arcs, 0);
  std::vector<Face> out;
  for (int start = 0; start < 2 * arcs; ++start) {
    if (seen[start]) continue;
    Face f;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = 1;
      Dart d{cur / 2, cur % 2 == 0};
      EdgeEnd at = d.fwd ? head_[d.edge] : tail_[d.edge];
      f.darts.push_back(d);
      f.corners.push_back(at.crossing);
      int s = (at.slot + 3) % 4;
      int e2 = crossings_[at.crossing].e[s];
      bool fwd2 = tail_[e2].crossing == at.crossing && tail_[e2].slot == s;
      cur = dart_index({e2, fwd2});
    }
    f.piece = piece[f.corners.front()];
    out.push_back(std::move(f));
  }
  int loop_piece = 0;
  for (int p : piece) loop_piece = std::max(loop_piece, p + 1);
  for (int k = 0, idx = 0; k < component_count(); ++k) {
    if (comp_size_[k] != 0) continue;
    int e = arcs + idx++;
    for (bool fwd : {true, false}) {
      Face f;
      f.darts.push_back({e, fwd});
      f.corners.push_back(-1);
      f.piece = loop_piece;
      out.push_back(std::move(f));
    }
    ++loop_piece;
  }
  return out;
}

std::vector<int> LinkDiagram::dart_faces(const std::vector<Face>& fs) const {
  std::vector<int> out(2 * dart_edge_count(), -1);
  for (size_t i = 0; i < fs.size(); ++i)
    for (const auto& d : fs[i].darts) out[dart_index(d)] = static_cast<int>(i);
  return out;
}

std::vector<int> LinkDiagram::crossing_piece() const {
  const int c = crossing_count();
  UnionFind uf(std::max(c, 1));
  for (int e = 0; e < edge_count(); ++e) uf.unite(head_[e].crossing, tail_[e].crossing);
  std::map<int, int> ids;
  std::vector<int> out(c);
  for (int x = 0; x < c; ++x) {
    auto [it, _] = ids.try_emplace(uf.find(x), static_cast<int>(ids.size()));
    out[x] = it->second;
  }
  return out;
}

int LinkDiagram::piece_count() const {
  std::vector<int> p = crossing_piece();
  int m = 0;
  for (int v : p) m = std::max(m, v + 1);
  return m + free_loop_count();
}

bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
  return a.crossings_ == b.crossings_ && a.comp_first_ == b.comp_first_ &&
         a.comp_size_ == b.comp_size_ && a.oriented_ == b.oriented_;
}

ValidationReport validate(const LinkDiagram& d) {
  ValidationReport rep;
  auto problem = [&](std::string s) { rep.problems.push_back(std::move(s)); };
  const int c = d.crossing_count();
  const int arcs = 2 * c;
  if (d.component_count() == 0) problem("diagram has no components");
  // Ranges partition 0..arcs-1.
  std::vector<int> owner(arcs, -1);
  for (int k = 0; k < d.component_count(); ++k) {
    if (d.comp_size(k) == 0) continue;
    int f = d.comp_first(k), s = d.comp_size(k);
    if (f < 0 || f + s > arcs) {
      problem("component " + std::to_string(k + 1) + ": range outside arcs");
      return rep;
    }
    for (int e = f; e < f + s; ++e) {
      if (owner[e] >= 0) {
        problem("arc " + std::to_string(e + 1) + " claimed twice");
        return rep;
      }
      owner[e] = k;
    }
  }
  for (int e = 0; e < arcs; ++e)
    if (owner[e] < 0) {
      problem("arc " + std::to_string(e + 1) + " belongs to no component");
      return rep;
    }
  std::vector<int> heads(arcs, 0), tails(arcs, 0), seen(arcs, 0);
  for (int x = 0; x < c; ++x) {
    const auto& cc = d.crossings()[x];
    for (int v : cc.e)
      if (v < 0 || v >= arcs) {
        problem("crossing " + std::to_string(x + 1) + ": arc label out of range");
        return rep;
      }
    for (int v : cc.e) ++seen[v];
    if (cc.sign != 1 && cc.sign != -1) problem("crossing " + std::to_string(x + 1) + ": bad sign");
    int oin = cc.sign > 0 ? 1 : 3;
    if (d.next_edge(cc.e[0]) != cc.e[2])
      problem("crossing " + std::to_string(x + 1) + ": under sides are not consecutive arcs");
    if (d.next_edge(cc.e[oin]) != cc.e[oin ^ 2])
      problem("crossing " + std::to_string(x + 1) + ": over sides are not consecutive arcs");
    ++heads[cc.e[0]];
    ++tails[cc.e[2]];
    ++heads[cc.e[oin]];
    ++tails[cc.e[oin ^ 2]];
  }
  for (int e = 0; e < arcs; ++e) {
    if (seen[e] > 2) problem("duplicate arc " + std::to_string(e + 1));
    else if (heads[e] != 1 || tails[e] != 1)
      problem("arc " + std::to_string(e + 1) + " is not entered and left exactly once");
  }
  if (!rep.ok()) return rep;

  // Sphere Euler check per piece: c_i - 2c_i + f_i = 2.
  auto fs = d.faces();
  std::vector<int> piece = d.crossing_piece();
  int pieces = 0;
  for (int p : piece) pieces = std::max(pieces, p + 1);
  std::vector<int> vcount(pieces, 0), fcount(pieces, 0);
  for (int p : piece) ++vcount[p];
  for (const auto& f : fs)
    if (f.piece < pieces) ++fcount[f.piece];
  for (int p = 0; p < pieces; ++p)
    if (vcount[p] - 2 * vcount[p] + fcount[p] != 2)
      problem("Euler check failed on piece " + std::to_string(p + 1) + ": " +
              std::to_string(vcount[p]) + " crossings, " + std::to_string(fcount[p]) +
              " faces (not a planar diagram)");
  return rep;
}

int crossing_sign(const LinkDiagram& d, int x) { return d.sign(x); }
int writhe(const LinkDiagram& d) { return d.writhe(); }
std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) { return d.linking_matrix(); }
std::vector<Face> faces(const LinkDiagram& d) { return d.faces(); }

namespace {

CrossingCode flipped(const CrossingCode& cc) {
  CrossingCode out;
  if (cc.sign > 0)
    out.e = {cc.e[1], cc.e[2], cc.e[3], cc.e[0]};
  else
    out.e = {cc.e[3], cc.e[0], cc.e[1], cc.e[2]};
  out.sign = -cc.sign;
  return out;
}

std::vector<int> firsts(const LinkDiagram& d) {
  std::vector<int> v;
  for (int k = 0; k < d.component_count(); ++k) v.push_back(d.comp_first(k));
  return v;
}

std::vector<int> sizes(const LinkDiagram& d) {
  std::vector<int> v;
  for (int k = 0; k < d.component_count(); ++k) v.push_back(d.comp_size(k));
  return v;
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<CrossingCode> cs;
  for (const auto& cc : d.crossings()) cs.push_back(flipped(cc));
  return LinkDiagram::from_codes(cs, firsts(d), sizes(d), d.oriented());
}

LinkDiagram crossing_change(const LinkDiagram& d, int x) {
  return crossing_change(d, std::vector<int>{x});
}

LinkDiagram crossing_change(const LinkDiagram& d, const std::vector<int>& xs) {
  std::vector<CrossingCode> cs = d.crossings();
  for (int x : xs) cs.at(x) = flipped(d.crossing(x));
  return LinkDiagram::from_codes(cs, firsts(d), sizes(d), d.oriented());
}

LinkDiagram reverse_component(const LinkDiagram& d, int k) {
  if (k < 0 || k >= d.component_count())
    throw std::out_of_range("unknown component " + std::to_string(k + 1));
  if (d.is_free_loop(k)) return d;
  const int f = d.comp_first(k), m = d.comp_size(k);
  auto relabel = [&](int e) { return d.component_of_edge(e) == k ? f + (m - 1 - (e - f)) : e; };
  std::vector<CrossingCode> cs;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& cc = d.crossing(x);
    bool under_rev = d.under_component(x) == k;
    bool over_rev = d.over_component(x) == k;
    CrossingCode out;
    for (int s = 0; s < 4; ++s) {
      int src = under_rev ? (s + 2) % 4 : s;
      out.e[s] = relabel(cc.e[src]);
    }
    out.sign = (under_rev != over_rev) ? -cc.sign : cc.sign;
    cs.push_back(out);
  }
  return LinkDiagram::from_codes(cs, firsts(d), sizes(d), d.oriented());
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  std::vector<CrossingCode> cs = a.crossings();
  const int shift = a.edge_count();
  for (auto cc : b.crossings()) {
    for (int& v : cc.e) v += shift;
    cs.push_back(cc);
  }
  std::vector<int> f = firsts(a), s = sizes(a);
  for (int k = 0; k < b.component_count(); ++k) {
    f.push_back(b.is_free_loop(k) ? -1 : b.comp_first(k) + shift);
    s.push_back(b.comp_size(k));
  }
  return LinkDiagram::from_codes(cs, f, s, a.oriented() && b.oriented());
}

// Canonical code ----------------------------------------------------------

namespace {

// BFS relabeling of one piece from a start edge; returns the code.
std::vector<int> piece_code(const LinkDiagram& d, int start, bool labeled, std::vector<int>& elab,
                            std::vector<int>& xlab) {
  std::vector<int> touched_e, touched_x, order_x, order_e;
  std::vector<int> queue{start};
  elab[start] = 0;
  touched_e.push_back(start);
  order_e.push_back(start);
  int ne = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    for (EdgeEnd end : {d.head(e), d.tail(e)}) {
      int x = end.crossing;
      if (xlab[x] >= 0) continue;
      xlab[x] = static_cast<int>(order_x.size());
      order_x.push_back(x);
      touched_x.push_back(x);
      for (int k = 0; k < 4; ++k) {
        int e2 = d.crossings()[x].e[(end.slot + k) % 4];
        if (elab[e2] < 0) {
          elab[e2] = ne++;
          touched_e.push_back(e2);
          order_e.push_back(e2);
          queue.push_back(e2);
        }
      }
    }
  }
  std::vector<int> code;
  code.reserve(order_x.size() * 5 + (labeled ? order_e.size() : 0));
  for (int x : order_x) {
    const auto& cc = d.crossings()[x];
    for (int s = 0; s < 4; ++s) code.push_back(elab[cc.e[s]]);
    code.push_back(cc.sign);
  }
  if (labeled)
    for (int e : order_e) code.push_back(d.component_of_edge(e));
  for (int e : touched_e) elab[e] = -1;
  for (int x : touched_x) xlab[x] = -1;
  return code;
}

}  // namespace

std::string canonical_code(const LinkDiagram& d, bool labeled) {
  std::vector<int> piece = d.crossing_piece();
  int pieces = 0;
  for (int p : piece) pieces = std::max(pieces, p + 1);
  std::vector<std::vector<int>> edges_of(pieces);
  for (int e = 0; e < d.edge_count(); ++e) edges_of[piece[d.head(e).crossing]].push_back(e);
  std::vector<int> elab(d.edge_count(), -1), xlab(d.crossing_count(), -1);
  std::vector<std::vector<int>> codes;
  for (int p = 0; p < pieces; ++p) {
    std::vector<int> best;
    for (int e : edges_of[p]) {
      auto c = piece_code(d, e, labeled, elab, xlab);
      if (best.empty() || c < best) best = std::move(c);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::ostringstream out;
  out << d.crossing_count() << ":";
  for (const auto& c : codes) {
    out << "[";
    for (size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << "]";
  }
  if (labeled) {
    out << "o";
    for (int k = 0; k < d.component_count(); ++k)
      if (d.is_free_loop(k)) out << k << ",";
  } else {
    out << "o" << d.free_loop_count();
  }
  return out.str();
}

}  // namespace rmb
