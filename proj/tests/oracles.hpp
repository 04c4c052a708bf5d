#pragma once
// Independent reference computations used only by the tests.

#include "rmb/diagram.hpp"
#include "rmb/laurent.hpp"
#include "rmb/linalg.hpp"

#include <numeric>

namespace oracle {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

/// Kauffman bracket by brute force over all 2^c states.
inline rmb::LaurentPoly bracket(const rmb::LinkDiagram& d) {
  const int c = d.crossing_count();
  const int m = d.edge_count();
  rmb::LaurentPoly loop = rmb::LaurentPoly::monomial(-1, 2) + rmb::LaurentPoly::monomial(-1, -2);
  rmb::LaurentPoly total;
  for (long mask = 0; mask < (1L << c); ++mask) {
    UF uf(std::max(m, 1));
    int a = 0;
    for (int x = 0; x < c; ++x) {
      const auto& e = d.crossing(x).e;
      if (mask >> x & 1) {  // B
        uf.unite(e[0], e[3]);
        uf.unite(e[1], e[2]);
      } else {
        uf.unite(e[0], e[1]);
        uf.unite(e[2], e[3]);
        ++a;
      }
    }
    int loops = d.free_loop_count();
    for (int e = 0; e < m; ++e) loops += uf.find(e) == e;
    rmb::LaurentPoly term = rmb::LaurentPoly::monomial(1, a - (c - a));
    for (int k = 1; k < loops; ++k) term *= loop;
    total += term;
  }
  return total;
}

/// Signature by the Gordon-Litherland formula sigma = sign(G) - mu on a
/// checkerboard surface (Goeritz matrix G, correction mu from the crossings
/// where the oriented smoothing joins the shaded corners).  Connected
/// diagrams with at least one crossing.
inline int gl_signature(const rmb::LinkDiagram& d, bool swap_colors = false) {
  auto fs = d.faces();
  auto df = d.dart_faces(fs);
  const int nf = static_cast<int>(fs.size());
  std::vector<int> color(nf, -1);
  color[0] = swap_colors ? 1 : 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (const auto& dt : fs[f].darts) {
      int g = df[rmb::LinkDiagram::dart_index({dt.edge, !dt.fwd})];
      if (color[g] < 0) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      }
    }
  }
  // corner face: a dart arriving at slot s bounds the corner between slots s-1 and s
  const int c = d.crossing_count();
  std::vector<std::array<int, 4>> corner(c);
  for (int f = 0; f < nf; ++f)
    for (const auto& dt : fs[f].darts) {
      rmb::EdgeEnd at = dt.fwd ? d.head(dt.edge) : d.tail(dt.edge);
      corner[at.crossing][(at.slot + 3) % 4] = f;
    }
  std::vector<int> shaded_id(nf, -1);
  int ns = 0;
  for (int f = 0; f < nf; ++f)
    if (color[f] == 1) shaded_id[f] = ns++;
  rmb::IntMatrix g(ns, std::vector<rmb::BigInt>(ns, 0));
  int mu = 0;
  for (int x = 0; x < c; ++x) {
    // corner k lies between slots k and k+1; A-corners are 1 and 3
    int k = color[corner[x][1]] == 1 ? 1 : 0;
    int eta = k == 1 ? -1 : +1;
    int p = shaded_id[corner[x][k]], q = shaded_id[corner[x][k + 2]];
    if (p != q) {
      g[p][q] -= eta;
      g[q][p] -= eta;
      g[p][p] += eta;
      g[q][q] += eta;
    }
    // The oriented smoothing joins corners {0,2} for sign +1 and {1,3} for
    // sign -1; where it separates the shaded corners the surface is
    // incompatible with the orientation.
    bool type2 = (d.sign(x) > 0) == (k == 1);
    if (type2) mu += eta;
  }
  rmb::IntMatrix reduced(ns - 1, std::vector<rmb::BigInt>(ns - 1));
  for (int i = 1; i < ns; ++i)
    for (int j = 1; j < ns; ++j) reduced[i - 1][j - 1] = g[i][j];
  return rmb::inertia(reduced).signature() - mu;
}

using PolyMatrix = std::vector<std::vector<rmb::LaurentPoly>>;

/// Fraction-free determinant over Z[t, 1/t].
inline rmb::LaurentPoly poly_det(PolyMatrix a) {
  const size_t n = a.size();
  if (n == 0) return rmb::LaurentPoly(1);
  rmb::LaurentPoly prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divided_exact(prev);
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

/// Representative of p up to multiplication by +-t^k.
inline rmb::LaurentPoly unit_normalized(rmb::LaurentPoly p) {
  if (p.is_zero()) return p;
  p = p.shifted(-p.min_exponent());
  if (p.coeff(p.max_exponent()) < 0) p = -p;
  return p;
}

/// Alexander polynomial of a knot from the Wirtinger presentation, up to
/// units.  Generators are the over-arcs.
inline rmb::LaurentPoly alexander(const rmb::LinkDiagram& d) {
  const int m = d.edge_count();
  UF uf(std::max(m, 1));
  for (int e = 0; e < m; ++e)
    if (d.head(e).slot % 2 == 1) uf.unite(e, d.next_edge(e));
  std::vector<int> arc(m, -1);
  int na = 0;
  for (int e = 0; e < m; ++e)
    if (uf.find(e) == e) arc[e] = na++;
  for (int e = 0; e < m; ++e) arc[e] = arc[uf.find(e)];
  const int c = d.crossing_count();
  if (c == 0) return rmb::LaurentPoly(1);
  using rmb::LaurentPoly;
  PolyMatrix a(c, std::vector<LaurentPoly>(na));
  const LaurentPoly t = LaurentPoly::monomial(1, 1), one(1);
  for (int x = 0; x < c; ++x) {
    const auto& e = d.crossing(x).e;
    int i = arc[e[0]], j = arc[e[2]], k = arc[e[1]];
    // x_j = x_k x_i x_k^-1 for one crossing sign, x_k^-1 x_i x_k for the other
    if (d.sign(x) > 0) {
      a[x][k] += one - t;
      a[x][i] += t;
      a[x][j] -= one;
    } else {
      a[x][k] += t - one;
      a[x][i] += one;
      a[x][j] -= t;
    }
  }
  PolyMatrix minor(c - 1, std::vector<LaurentPoly>(na - 1));
  for (int r = 1; r < c; ++r)
    for (int q = 1; q < na; ++q) minor[r - 1][q - 1] = a[r][q];
  return unit_normalized(poly_det(minor));
}

/// det(V - t V^T) up to units.
inline rmb::LaurentPoly alexander_from_seifert(const rmb::IntMatrix& v) {
  using rmb::LaurentPoly;
  PolyMatrix a(v.size(), std::vector<LaurentPoly>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      a[i][j] = LaurentPoly(v[i][j]) - LaurentPoly::monomial(v[j][i], 1);
  return unit_normalized(poly_det(a));
}

}  // namespace oracle
