#include "rmb/net.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace rmb {

Net Net::from_diagram(const LinkDiagram& d) {
  Net n;
  n.xs.resize(d.crossing_count());
  for (auto& x : n.xs) x.over_axis = 1;
  for (int e = 0; e < d.edge_count(); ++e) {
    int k = d.component_of_edge(e);
    EdgeEnd t = d.tail(e), h = d.head(e);
    n.add_wire({t.crossing, t.slot}, {h.crossing, h.slot}, +1, k, e - d.comp_first(k));
  }
  for (int k = 0; k < d.component_count(); ++k)
    if (d.is_free_loop(k)) n.add_free_loop(+1, k, 0);
  return n;
}

int Net::add_crossing(int over_axis) {
  Xing x;
  x.over_axis = over_axis;
  xs.push_back(x);
  return static_cast<int>(xs.size()) - 1;
}

int Net::add_wire(End a, End b, int dir, int tag, long key) {
  Wire w;
  w.a = a;
  w.b = b;
  w.dir = dir;
  w.tag = tag;
  w.key = key;
  ws.push_back(w);
  int id = static_cast<int>(ws.size()) - 1;
  xs[a.x].w[a.s] = id;
  xs[b.x].w[b.s] = id;
  return id;
}

int Net::add_free_loop(int dir, int tag, long key) {
  Wire w;
  w.free = true;
  w.dir = dir;
  w.tag = tag;
  w.key = key;
  ws.push_back(w);
  return static_cast<int>(ws.size()) - 1;
}

Net::End& Net::end_of(int w, End at) {
  Wire& wr = ws[w];
  if (wr.a == at) return wr.a;
  if (wr.b == at) return wr.b;
  throw std::logic_error("wire does not end at the given slot");
}

Net::End Net::other_end(int w, End at) const {
  const Wire& wr = ws[w];
  if (wr.a == at) return wr.b;
  if (wr.b == at) return wr.a;
  throw std::logic_error("wire does not end at the given slot");
}

void Net::attach(int w, End at_old, End at_new) {
  end_of(w, at_old) = at_new;
  xs[at_new.x].w[at_new.s] = w;
}

void Net::dissolve(int x, std::array<int, 2> pair1, std::array<int, 2> pair2) {
  for (auto pr : {pair1, pair2}) {
    const End ep{x, pr[0]}, eq{x, pr[1]};
    int w1 = xs[x].w[pr[0]], w2 = xs[x].w[pr[1]];
    if (w1 == w2) {
      Wire& w = ws[w1];
      w.free = true;
      w.a = w.b = End{};
      continue;
    }
    End o1 = other_end(w1, ep), o2 = other_end(w2, eq);
    // orientation of w1 read from o1 toward the dissolved crossing
    int d1 = ws[w1].a == o1 ? ws[w1].dir : -ws[w1].dir;
    int d2 = ws[w2].a == eq ? ws[w2].dir : -ws[w2].dir;
    Wire& m = ws[w1];
    m.dir = d1 != 0 ? d1 : d2;
    if (std::tie(ws[w2].tag, ws[w2].key) < std::tie(m.tag, m.key)) {
      m.tag = ws[w2].tag;
      m.key = ws[w2].key;
    }
    m.a = o1;
    m.b = o2;
    xs[o2.x].w[o2.s] = w1;
    ws[w2].alive = false;
  }
  xs[x].alive = false;
  xs[x].w = {-1, -1, -1, -1};
}

void Net::delete_tags(const std::vector<int>& tags) {
  auto gone = [&](int w) { return std::find(tags.begin(), tags.end(), ws[w].tag) != tags.end(); };
  for (int x = 0; x < static_cast<int>(xs.size()); ++x) {
    if (!xs[x].alive) continue;
    if (gone(xs[x].w[0]) || gone(xs[x].w[1])) dissolve(x, {0, 2}, {1, 3});
  }
  for (int w = 0; w < static_cast<int>(ws.size()); ++w)
    if (ws[w].alive && gone(w)) ws[w].alive = false;
}

LinkDiagram Net::build(bool oriented) const {
  struct Step {
    int w;
    End from, to;
  };
  struct Comp {
    int tag;
    long key;
    bool free;
    std::vector<Step> steps;
  };
  const int nw = static_cast<int>(ws.size());
  std::vector<char> used(nw, 0);
  std::vector<Comp> comps;

  auto walk = [&](int w, End from) {
    std::vector<Step> steps;
    int cur = w;
    End f = from;
    while (true) {
      End t = other_end(cur, f);
      steps.push_back({cur, f, t});
      End nf{t.x, (t.s + 2) % 4};
      int nxt = xs[t.x].w[nf.s];
      if (nxt == w && nf == from) break;
      cur = nxt;
      f = nf;
      if (steps.size() > ws.size() * 2 + 4) throw std::logic_error("net traversal does not close");
    }
    return steps;
  };

  for (int w = 0; w < nw; ++w) {
    if (!ws[w].alive || used[w]) continue;
    if (ws[w].free) {
      used[w] = 1;
      comps.push_back({ws[w].tag, ws[w].key, true, {}});
      continue;
    }
    auto steps = walk(w, ws[w].a);
    int best = w;
    for (const auto& st : steps) {
      used[st.w] = 1;
      if (std::tie(ws[st.w].tag, ws[st.w].key) < std::tie(ws[best].tag, ws[best].key)) best = st.w;
    }
    const Wire& bw = ws[best];
    End start = bw.dir >= 0 ? bw.a : bw.b;
    comps.push_back({bw.tag, bw.key, false, walk(best, start)});
  }
  std::stable_sort(comps.begin(), comps.end(), [](const Comp& p, const Comp& q) {
    return std::tie(p.tag, p.key) < std::tie(q.tag, q.key);
  });

  std::vector<int> xid(xs.size(), -1);
  int nx = 0;
  for (size_t x = 0; x < xs.size(); ++x)
    if (xs[x].alive) xid[x] = nx++;

  // per crossing slot: edge id and whether the edge enters there
  std::vector<std::array<int, 4>> slot_edge(nx), slot_in(nx);
  std::vector<int> first, size;
  int next_edge = 0;
  for (const auto& c : comps) {
    if (c.free) {
      first.push_back(-1);
      size.push_back(0);
      continue;
    }
    first.push_back(next_edge);
    size.push_back(static_cast<int>(c.steps.size()));
    for (const auto& st : c.steps) {
      int e = next_edge++;
      slot_edge[xid[st.from.x]][st.from.s] = e;
      slot_in[xid[st.from.x]][st.from.s] = 0;
      slot_edge[xid[st.to.x]][st.to.s] = e;
      slot_in[xid[st.to.x]][st.to.s] = 1;
    }
  }

  std::vector<CrossingCode> codes(nx);
  for (size_t x = 0; x < xs.size(); ++x) {
    if (!xs[x].alive) continue;
    int i = xid[x];
    int under_axis = xs[x].over_axis ^ 1;
    int u = slot_in[i][under_axis] ? under_axis : under_axis + 2;
    int o = slot_in[i][xs[x].over_axis] ? xs[x].over_axis : xs[x].over_axis + 2;
    for (int k = 0; k < 4; ++k) codes[i].e[k] = slot_edge[i][(u + k) % 4];
    codes[i].sign = (o - u + 4) % 4 == 1 ? +1 : -1;
  }
  return LinkDiagram::from_codes(std::move(codes), std::move(first), std::move(size), oriented);
}

LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& comps) {
  Net n = Net::from_diagram(d);
  std::vector<int> drop;
  for (int k = 0; k < d.component_count(); ++k)
    if (std::find(comps.begin(), comps.end(), k) == comps.end()) drop.push_back(k);
  n.delete_tags(drop);
  return n.build(d.oriented());
}

std::vector<std::vector<int>> piece_components(const LinkDiagram& d) {
  auto cp = d.crossing_piece();
  std::map<int, int> slot;  // crossing piece -> output index
  std::vector<std::vector<int>> out;
  for (int k = 0; k < d.component_count(); ++k) {
    if (d.is_free_loop(k)) {
      out.push_back({k});
      continue;
    }
    int p = cp[d.head(d.comp_first(k)).crossing];
    auto [it, fresh] = slot.try_emplace(p, static_cast<int>(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(k);
  }
  return out;
}

std::vector<LinkDiagram> split_pieces(const LinkDiagram& d) {
  auto pcs = piece_components(d);
  std::vector<LinkDiagram> out;
  for (const auto& comps : pcs) out.push_back(pcs.size() == 1 ? d : sublink(d, comps));
  return out;
}

}  // namespace rmb
