#include "rmb/construct.hpp"

#include "rmb/net.hpp"

#include <stdexcept>

namespace rmb {

namespace {

// Strands run downward through crossings placed between adjacent positions.
// Crossing slots: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left.
// Links between crossing ends and virtual points are contracted into wires.
class Layout {
public:
  explicit Layout(int positions) : cur_(positions) {
    for (auto& c : cur_) c = virtual_node();
  }

  int top(int p) const { return cur_[p]; }
  int virtual_node() {
    adj_.push_back({});
    is_end_.push_back(-1);
    return static_cast<int>(adj_.size()) - 1;
  }
  void link(int a, int b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  int at(int p) const { return cur_[p]; }

  /// Crossing between positions p and p+1; `sign` is the sign it gets when
  /// both strands run downward.
  void cross(int p, int sign) {
    int x = net_.add_crossing(sign > 0 ? 1 : 0);
    int base = static_cast<int>(adj_.size());
    for (int s = 0; s < 4; ++s) {
      adj_.push_back({});
      is_end_.push_back(4 * x + s);
    }
    link(cur_[p], base + 3);
    link(cur_[p + 1], base + 2);
    cur_[p] = base + 0;
    cur_[p + 1] = base + 1;
  }

  LinkDiagram build() {
    const int n = static_cast<int>(adj_.size());
    std::vector<char> seen(n, 0);
    long key = 0;
    auto end_of = [&](int node) { return Net::End{is_end_[node] / 4, is_end_[node] % 4}; };
    // Chains start at bottom slots (0, 1) first so that braid strands are
    // oriented downward.
    for (int pass = 0; pass < 2; ++pass)
      for (int v = 0; v < n; ++v) {
        if (seen[v] || is_end_[v] < 0) continue;
        if (pass == 0 && is_end_[v] % 4 >= 2) continue;
        seen[v] = 1;
        int prev = v, cur = adj_[v].at(0);
        while (is_end_[cur] < 0) {
          seen[cur] = 1;
          int nxt = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
          prev = cur;
          cur = nxt;
        }
        seen[cur] = 1;
        net_.add_wire(end_of(v), end_of(cur), +1, 0, key++);
      }
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      int prev = -1, cur = v;
      while (!seen[cur]) {
        seen[cur] = 1;
        int nxt = adj_[cur][0] != prev ? adj_[cur][0] : adj_[cur][1];
        prev = cur;
        cur = nxt;
      }
      net_.add_free_loop(+1, 0, key++);
    }
    return net_.build(true);
  }

private:
  Net net_;
  std::vector<int> cur_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> is_end_;  // 4*x+s for crossing ends, -1 for virtual points
};

}  // namespace

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  Layout lay(strands);
  std::vector<int> top(strands);
  for (int p = 0; p < strands; ++p) top[p] = lay.at(p);
  for (int letter : word) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= strands) throw std::invalid_argument("braid letter out of range");
    lay.cross(i - 1, letter > 0 ? +1 : -1);
  }
  for (int p = 0; p < strands; ++p) lay.link(lay.at(p), top[p]);
  return lay.build();
}

LinkDiagram rational_link(const std::vector<int>& conway) {
  if (conway.empty()) throw std::invalid_argument("empty Conway notation");
  for (int a : conway)
    if (a <= 0) throw std::invalid_argument("Conway entries must be positive");
  std::vector<int> a = conway;
  if (a.size() % 2 == 0) {  // [.., x] = [.., x-1, 1]
    if (a.back() == 1) {
      a.pop_back();
      a.back() += 1;
    } else {
      a.back() -= 1;
      a.push_back(1);
    }
  }
  Layout lay(4);
  lay.link(lay.at(0), lay.at(1));
  lay.link(lay.at(2), lay.at(3));
  for (size_t k = 0; k < a.size(); ++k)
    for (int r = 0; r < a[k]; ++r) {
      if (k % 2 == 0)
        lay.cross(1, +1);
      else
        lay.cross(0, -1);
    }
  lay.link(lay.at(0), lay.at(1));
  lay.link(lay.at(2), lay.at(3));
  return lay.build();
}

long long continuant(const std::vector<int>& conway) {
  long long p0 = 1, p1 = 0;  // K() = 1, K(-1) = 0
  for (int a : conway) {
    long long p2 = a * p0 + p1;
    p1 = p0;
    p0 = p2;
  }
  return p0;
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b, int ka, int kb) {
  if (ka < 0 || ka >= a.component_count() || kb < 0 || kb >= b.component_count())
    throw std::out_of_range("unknown component");
  Net n = Net::from_diagram(a);
  Net m = Net::from_diagram(b);
  const int xo = static_cast<int>(n.xs.size());
  const int wo = static_cast<int>(n.ws.size());
  const int to = a.component_count();
  for (auto x : m.xs) {
    for (auto& w : x.w) w += wo;
    n.xs.push_back(x);
  }
  for (auto w : m.ws) {
    if (!w.free) {
      w.a.x += xo;
      w.b.x += xo;
    }
    w.tag = w.tag == kb ? ka : w.tag + to;
    n.ws.push_back(w);
  }
  auto wire_of = [&](const LinkDiagram& d, int k, int offset) {
    return d.is_free_loop(k) ? offset + d.edge_count() +
                                   [&] {
                                     int c = 0;
                                     for (int j = 0; j < k; ++j) c += d.is_free_loop(j);
                                     return c;
                                   }()
                             : offset + d.comp_first(k);
  };
  int wa = wire_of(a, ka, 0), wb = wire_of(b, kb, wo);
  Net::Wire& A = n.ws[wa];
  Net::Wire& B = n.ws[wb];
  if (A.free && B.free) {
    B.alive = false;
  } else if (A.free || B.free) {
    // A crossing-free summand is the unit.
    (A.free ? A : B).alive = false;
  } else {
    // wires run tail (a) -> head (b): a.tail->b.head and b.tail->a.head
    Net::End bh = B.b, ah = A.b;
    A.b = bh;
    n.xs[bh.x].w[bh.s] = wa;
    B.b = ah;
    n.xs[ah.x].w[ah.s] = wb;
  }
  LinkDiagram r = n.build(a.oriented() && b.oriented());
  return r;
}

}  // namespace rmb
