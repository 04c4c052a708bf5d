#include "rmb/identify.hpp"

#include "rmb/moves.hpp"
#include "rmb/net.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace rmb {

namespace {

// Seifert circle of every edge: at its head an under-incoming edge continues
// on the outgoing over edge and vice versa.
std::vector<int> seifert_circles(const LinkDiagram& d, int* count) {
  const int m = d.edge_count();
  std::vector<int> next(m), circle(m, -1);
  for (int e = 0; e < m; ++e) {
    EdgeEnd h = d.head(e);
    const auto& c = d.crossing(h.crossing);
    int o = d.over_in_slot(h.crossing);
    next[e] = h.slot == 0 ? c.e[(o + 2) % 4] : c.e[2];
  }
  int n = 0;
  for (int e = 0; e < m; ++e) {
    if (circle[e] >= 0) continue;
    for (int f = e; circle[f] < 0; f = next[f]) circle[f] = n;
    ++n;
  }
  if (count) *count = n;
  return circle;
}

int seifert_next(const LinkDiagram& d, int e) {
  EdgeEnd h = d.head(e);
  const auto& c = d.crossing(h.crossing);
  int o = d.over_in_slot(h.crossing);
  return h.slot == 0 ? c.e[(o + 2) % 4] : c.e[2];
}

// Vogel moves until no face carries two Seifert circles with the same
// boundary sense.  Each move is an RII between two such edges.
LinkDiagram braided(LinkDiagram d) {
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw std::logic_error("Vogel moves did not terminate");
    auto circle = seifert_circles(d, nullptr);
    auto fs = d.faces();
    bool moved = false;
    for (const auto& f : fs) {
      for (size_t i = 0; i < f.darts.size() && !moved; ++i)
        for (size_t j = i + 1; j < f.darts.size() && !moved; ++j) {
          const Dart a = f.darts[i], b = f.darts[j];
          if (a.fwd != b.fwd || circle[a.edge] == circle[b.edge]) continue;
          MoveEvent ev;
          ev.kind = MoveKind::RII_add;
          ev.d1 = a;
          ev.d2 = b;
          ev.over = 1;
          d = apply(d, ev);
          moved = true;
        }
      if (moved) break;
    }
    if (!moved) return d;
  }
}

struct Band {
  int column;  // 0-based gap between circles column and column+1
  int sign;    // standard sign: +1 for a right-handed crossing
};

std::vector<Band> braid_word(const LinkDiagram& d, int* strands) {
  int nc = 0;
  auto circle = seifert_circles(d, &nc);
  const int nx = d.crossing_count();
  std::vector<std::set<int>> nb(nc);
  std::vector<std::array<int, 2>> xc(nx);
  for (int x = 0; x < nx; ++x) {
    const auto& c = d.crossing(x);
    int o = d.over_in_slot(x);
    int p = circle[c.e[0]], q = circle[c.e[o]];
    if (p == q) throw std::logic_error("crossing joins a Seifert circle to itself");
    xc[x] = {p, q};
    nb[p].insert(q);
    nb[q].insert(p);
  }
  // the circles of a braided connected diagram form a path
  int start = 0;
  for (int c = 0; c < nc; ++c) {
    if (nb[c].size() > 2) throw std::logic_error("diagram is not braided");
    if (nb[c].size() <= 1) start = c;
  }
  std::vector<int> order{start}, pos(nc, -1);
  pos[start] = 0;
  while (static_cast<int>(order.size()) < nc) {
    int nxt = -1;
    for (int c : nb[order.back()])
      if (pos[c] < 0) nxt = c;
    if (nxt < 0) throw std::logic_error("Seifert circles are not a chain");
    pos[nxt] = static_cast<int>(order.size());
    order.push_back(nxt);
  }
  *strands = nc;

  // A ray from inside the first circle to beyond the last one, crossing each
  // circle once at a cut edge; successive faces share the cut edges.
  auto fs = d.faces();
  auto df = d.dart_faces(fs);
  std::vector<int> cut(nc, -1);
  int face = -1;
  for (int f = 0; f < static_cast<int>(fs.size()) && face < 0; ++f) {
    bool on0 = false, on1 = false;
    for (const auto& dt : fs[f].darts) {
      on0 |= pos[circle[dt.edge]] == 0;
      on1 |= nc > 1 && pos[circle[dt.edge]] == 1;
    }
    if (on0 && (on1 || nc == 1)) face = f;
  }
  for (int i = 0; i < nc; ++i) {
    if (face < 0) throw std::logic_error("no cut path through the circles");
    for (const auto& dt : fs[face].darts)
      if (pos[circle[dt.edge]] == i && cut[i] < 0) cut[i] = dt.edge;
    if (i + 1 < nc) {
      // continue from a dart of circle i+1 in this face to its other side
      int e = -1;
      bool fwd = true;
      for (const auto& dt : fs[face].darts)
        if (pos[circle[dt.edge]] == i + 1) {
          e = dt.edge;
          fwd = dt.fwd;
          break;
        }
      if (e < 0) throw std::logic_error("cut path lost");
      cut[i + 1] = e;
      face = df[LinkDiagram::dart_index({e, !fwd})];
    }
  }

  // crossing order along each circle from its cut, merged topologically
  std::vector<std::vector<int>> after(nx);
  std::vector<int> indeg(nx, 0);
  for (int i = 0; i < nc; ++i) {
    std::vector<int> seq;
    int e = cut[i];
    do {
      seq.push_back(d.head(e).crossing);
      e = seifert_next(d, e);
    } while (e != cut[i]);
    for (size_t k = 0; k + 1 < seq.size(); ++k) {
      after[seq[k]].push_back(seq[k + 1]);
      ++indeg[seq[k + 1]];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int x = 0; x < nx; ++x)
    if (indeg[x] == 0) ready.push(x);
  std::vector<Band> word;
  while (!ready.empty()) {
    int x = ready.top();
    ready.pop();
    word.push_back({std::min(pos[xc[x][0]], pos[xc[x][1]]), -d.sign(x)});
    for (int y : after[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (static_cast<int>(word.size()) != nx) throw std::logic_error("crossing orders are inconsistent");
  return word;
}

// Seifert matrix of a closed braid: one generator per pair of consecutive
// bands in a column.
IntMatrix braid_seifert_matrix(const std::vector<Band>& word, int strands) {
  struct Gen {
    int column, a, b;  // band positions a < b
  };
  std::vector<Gen> gens;
  for (int c = 0; c + 1 < strands; ++c) {
    int last = -1;
    for (int p = 0; p < static_cast<int>(word.size()); ++p) {
      if (word[p].column != c) continue;
      if (last >= 0) gens.push_back({c, last, p});
      last = p;
    }
  }
  const size_t n = gens.size();
  IntMatrix v(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    const Gen& g = gens[i];
    int sa = word[g.a].sign, sb = word[g.b].sign;
    v[i][i] = sa == sb ? -sa : 0;
    for (size_t j = 0; j < n; ++j) {
      const Gen& h = gens[j];
      if (h.column == g.column && h.a == g.b) {  // h follows g, sharing band g.b
        if (sb > 0)
          v[i][j] = 1;
        else
          v[j][i] = -1;
      } else if (h.column == g.column + 1) {
        // interleaved generators in neighbouring columns link once
        if (g.a < h.a && h.a < g.b && g.b < h.b) v[j][i] = 1;
        if (h.a < g.a && g.a < h.b && h.b < g.b) v[j][i] = -1;
      }
    }
  }
  return v;
}

SeifertData seifert_connected(const LinkDiagram& d) {
  SeifertData r;
  LinkDiagram b = braided(d);
  int strands = 0;
  auto word = braid_word(b, &strands);
  r.matrix = braid_seifert_matrix(word, strands);
  r.circles = strands;
  // chi = circles - bands = 2 - 2g - components
  r.genus_bound = (2 - strands + static_cast<int>(word.size()) - d.component_count()) / 2;
  return r;
}

}  // namespace

SeifertData seifert(const LinkDiagram& d) {
  if (!d.oriented()) throw std::invalid_argument("seifert requires an oriented diagram");
  auto parts = split_pieces(d);
  const size_t pieces = parts.size();
  std::vector<IntMatrix> blocks;
  SeifertData r;
  for (const auto& part : parts) {
    if (part.crossing_count() == 0) continue;
    SeifertData s = seifert_connected(part);
    blocks.push_back(s.matrix);
    r.circles += s.circles;
    r.genus_bound += s.genus_bound;
  }
  size_t n = pieces > 0 ? pieces - 1 : 0;
  for (const auto& b : blocks) n += b.size();
  r.matrix.assign(n, std::vector<BigInt>(n, 0));
  size_t off = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r.matrix[off + i][off + j] = b[i][j];
    off += b.size();
  }
  Inertia in = inertia(add(r.matrix, transpose(r.matrix)));
  r.signature = in.signature();
  r.nullity = in.zero;
  return r;
}

}  // namespace rmb
