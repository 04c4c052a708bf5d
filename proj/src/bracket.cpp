#include "rmb/identify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rmb {

namespace {

// Greedy order keeping the frontier (edges with exactly one processed end) small.
std::vector<int> processing_order(const LinkDiagram& d) {
  const int n = d.crossing_count();
  std::vector<char> done(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = 0;
    for (int x = 0; x < n; ++x) {
      if (done[x]) continue;
      int score = 0;
      for (int e : d.crossing(x).e) {
        EdgeEnd t = d.tail(e), h = d.head(e);
        int other = t.crossing == x ? h.crossing : t.crossing;
        if (other == x) continue;
        score += done[other] ? 1 : -1;
      }
      if (best < 0 || score > best_score) {
        best = x;
        best_score = score;
      }
    }
    done[best] = 1;
    order.push_back(best);
  }
  return order;
}

struct Local {
  std::vector<std::array<int, 2>> adj;
  void reset(size_t n) { adj.assign(n, {-1, -1}); }
  void link(int a, int b) {
    (adj[a][0] < 0 ? adj[a][0] : adj[a][1]) = b;
    (adj[b][0] < 0 ? adj[b][0] : adj[b][1]) = a;
  }
  int degree(int a) const { return (adj[a][0] >= 0) + (adj[a][1] >= 0); }
};

}  // namespace

LaurentPoly kauffman_bracket(const LinkDiagram& d) {
  const LaurentPoly loop = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> loop_pow{LaurentPoly(1)};
  auto power = [&](int k) -> const LaurentPoly& {
    while (static_cast<int>(loop_pow.size()) <= k) loop_pow.push_back(loop_pow.back() * loop);
    return loop_pow[k];
  };

  std::vector<int> frontier;  // sorted edge ids
  std::map<std::vector<int>, LaurentPoly> states{{{}, LaurentPoly(1)}};
  std::vector<char> processed(d.crossing_count(), 0);
  Local g;

  for (int x : processing_order(d)) {
    const auto& e = d.crossing(x).e;
    const int f = static_cast<int>(frontier.size());
    auto frontier_index = [&](int edge) {
      auto it = std::lower_bound(frontier.begin(), frontier.end(), edge);
      return it != frontier.end() && *it == edge ? static_cast<int>(it - frontier.begin()) : -1;
    };

    // New frontier: untouched old entries plus edges leaving x toward
    // unprocessed crossings.  Node ids: old frontier 0..f-1, slots f..f+3.
    std::vector<std::pair<int, int>> next;  // (edge id, node id)
    std::vector<char> touched(f, 0);
    std::array<int, 4> slot_peer{-1, -1, -1, -1};  // frontier index or slot
    for (int s = 0; s < 4; ++s) {
      int i = frontier_index(e[s]);
      if (i >= 0) {
        touched[i] = 1;
        slot_peer[s] = i;
        continue;
      }
      for (int t = 0; t < 4; ++t)
        if (t != s && e[t] == e[s]) slot_peer[s] = f + t;
      if (slot_peer[s] < 0) next.push_back({e[s], f + s});
    }
    for (int i = 0; i < f; ++i)
      if (!touched[i]) next.push_back({frontier[i], i});
    std::sort(next.begin(), next.end());
    std::vector<int> new_frontier;
    std::vector<int> node_to_new(f + 4, -1);
    for (size_t k = 0; k < next.size(); ++k) {
      new_frontier.push_back(next[k].first);
      node_to_new[next[k].second] = static_cast<int>(k);
    }

    std::map<std::vector<int>, LaurentPoly> out;
    for (const auto& [partner, value] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        g.reset(f + 4);
        for (int i = 0; i < f; ++i)
          if (i < partner[i]) g.link(i, partner[i]);
        for (int s = 0; s < 4; ++s)
          if (slot_peer[s] >= 0 && slot_peer[s] < f + s) g.link(f + s, slot_peer[s]);
        if (smoothing == 0) {  // A: {0,1},{2,3}
          g.link(f + 0, f + 1);
          g.link(f + 2, f + 3);
        } else {  // B: {0,3},{1,2}
          g.link(f + 0, f + 3);
          g.link(f + 1, f + 2);
        }
        std::vector<int> np(new_frontier.size(), -1);
        std::vector<char> seen(f + 4, 0);
        auto walk = [&](int start) {
          int prev = -1, cur = start;
          while (true) {
            seen[cur] = 1;
            int nxt = g.adj[cur][0] != prev ? g.adj[cur][0] : g.adj[cur][1];
            if (nxt < 0 || seen[nxt]) return cur;
            prev = cur;
            cur = nxt;
          }
        };
        for (int node = 0; node < f + 4; ++node) {
          if (seen[node] || node_to_new[node] < 0 || g.degree(node) != 1) continue;
          int end = walk(node);
          np[node_to_new[node]] = node_to_new[end];
          np[node_to_new[end]] = node_to_new[node];
        }
        int loops = 0;
        for (int node = 0; node < f + 4; ++node) {
          if (seen[node] || g.degree(node) == 0) continue;
          walk(node);
          ++loops;
        }
        LaurentPoly term = value * power(loops);
        term = term.shifted(smoothing == 0 ? 1 : -1);
        out[np] += term;
      }
    }
    states = std::move(out);
    frontier = std::move(new_frontier);
    processed[x] = 1;
  }

  LaurentPoly total;
  for (const auto& [partner, value] : states) total += value;
  total *= power(d.free_loop_count());
  return total.divided_exact(loop);
}

LaurentPoly jones(const LinkDiagram& d) {
  if (!d.oriented()) throw std::invalid_argument("jones requires an oriented diagram");
  const int w = d.writhe();
  LaurentPoly f = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, 3 * w);
  // A^e -> q^{-e/4}, stored in q^{1/2} units
  return (f * kauffman_bracket(d)).exponents_divided(-2);
}

BigInt determinant(const LinkDiagram& d) {
  // Orientation and writhe only change <D> by a unit +-A^k, which leaves
  // |V(t=-1)| alone.  After shifting, exponents are multiples of 4, and
  // t = -1 corresponds to A^2 = i.
  LaurentPoly b = kauffman_bracket(d);
  b = b.shifted(-b.min_exponent()).exponents_divided(2);
  auto [re, im] = b.eval_at_i();
  return abs(re) + abs(im);
}

}  // namespace rmb
