#include "rmb/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace rmb {

using Rational = boost::multiprecision::cpp_rational;

IntMatrix transpose(const IntMatrix& m) {
  const size_t n = m.size();
  IntMatrix t(n, std::vector<BigInt>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

IntMatrix subtract(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

BigInt determinant(const IntMatrix& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Inertia inertia(const IntMatrix& symmetric) {
  const size_t n = symmetric.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (symmetric[i][j] != symmetric[j][i]) throw std::invalid_argument("matrix is not symmetric");
      a[i][j] = Rational(symmetric[i][j]);
    }
  Inertia r;
  std::vector<char> done(n, 0);
  for (size_t step = 0; step < n; ++step) {
    size_t p = n;
    for (size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && a[i][i] != 0) p = i;
    if (p == n) {
      // No usable diagonal entry: x_i -> x_i + x_j makes a[i][i] = 2 a[i][j].
      size_t pi = n, pj = n;
      for (size_t i = 0; i < n && pi == n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // remaining block is zero
      for (size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      p = pi;
    }
    const Rational piv = a[p][p];
    (piv > 0 ? r.positive : r.negative)++;
    done[p] = 1;
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      Rational f = a[i][p] / piv;
      for (size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
    }
    for (size_t k = 0; k < n; ++k)
      if (!done[k]) a[p][k] = a[k][p] = 0;
  }
  r.zero = static_cast<int>(n) - r.positive - r.negative;
  return r;
}

}  // namespace rmb
