#pragma once

#include "rmb/laurent.hpp"

#include <vector>

namespace rmb {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix transpose(const IntMatrix& m);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix subtract(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free elimination); 1 for the empty matrix.
BigInt determinant(const IntMatrix& m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

/// Inertia of a symmetric matrix by exact congruence diagonalization.
Inertia inertia(const IntMatrix& symmetric);

}  // namespace rmb
