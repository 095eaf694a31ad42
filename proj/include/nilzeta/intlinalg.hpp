#pragma once

#include "nilzeta/rational.hpp"

#include <vector>

namespace nilzeta {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Row Hermite normal form: U * A = H with U unimodular. The first `rank` rows of H
// are the echelon basis (positive pivots, entries above a pivot reduced into
// [0, pivot)); the remaining rows of H are zero.
struct RowHNF {
  IntMatrix H;
  IntMatrix U;
  int rank = 0;
};
RowHNF row_hnf(const IntMatrix& A);

// Left kernel basis: integer rows n with n * A = 0.
IntMatrix left_kernel(const IntMatrix& A);

// Nonzero Smith invariant factors d1 | d2 | ... of A.
std::vector<BigInt> smith_invariants(const IntMatrix& A);

IntMatrix transpose(const IntMatrix& A);

}  // namespace nilzeta
