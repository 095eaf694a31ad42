#include "nilzeta/intlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace nilzeta {

namespace {

void axpy_row(std::vector<BigInt>& dst, const std::vector<BigInt>& src, const BigInt& q) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= q * src[k];
}

IntMatrix identity(std::size_t n) {
  IntMatrix I(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

}  // namespace

IntMatrix transpose(const IntMatrix& A) {
  if (A.empty()) return {};
  IntMatrix T(A[0].size(), std::vector<BigInt>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
  return T;
}

RowHNF row_hnf(const IntMatrix& A) {
  RowHNF out;
  out.H = A;
  const std::size_t m = A.size();
  out.U = identity(m);
  if (m == 0) return out;
  const std::size_t n = A[0].size();
  std::size_t prow = 0;
  for (std::size_t col = 0; col < n && prow < m; ++col) {
    // Euclid on column `col` among rows prow..m-1
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = prow; i < m; ++i)
        if (out.H[i][col] != 0 && (best == m || abs(out.H[i][col]) < abs(out.H[best][col]))) best = i;
      if (best == m) break;
      std::swap(out.H[prow], out.H[best]);
      std::swap(out.U[prow], out.U[best]);
      bool done = true;
      for (std::size_t i = prow + 1; i < m; ++i) {
        if (out.H[i][col] == 0) continue;
        BigInt q = floor_div(out.H[i][col], out.H[prow][col]);
        axpy_row(out.H[i], out.H[prow], q);
        axpy_row(out.U[i], out.U[prow], q);
        if (out.H[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (out.H[prow][col] == 0) continue;
    if (out.H[prow][col] < 0) {
      for (auto& v : out.H[prow]) v = -v;
      for (auto& v : out.U[prow]) v = -v;
    }
    for (std::size_t i = 0; i < prow; ++i) {
      BigInt q = floor_div(out.H[i][col], out.H[prow][col]);
      if (q != 0) {
        axpy_row(out.H[i], out.H[prow], q);
        axpy_row(out.U[i], out.U[prow], q);
      }
    }
    ++prow;
  }
  out.rank = static_cast<int>(prow);
  return out;
}

IntMatrix left_kernel(const IntMatrix& A) {
  RowHNF r = row_hnf(A);
  IntMatrix K;
  for (std::size_t i = static_cast<std::size_t>(r.rank); i < r.U.size(); ++i) K.push_back(r.U[i]);
  return K;
}

std::vector<BigInt> smith_invariants(const IntMatrix& A) {
  IntMatrix M = A;
  if (M.empty() || M[0].empty()) return {};
  auto is_diagonal = [](const IntMatrix& X) {
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = 0; j < X[i].size(); ++j)
        if (i != j && X[i][j] != 0) return false;
    return true;
  };
  for (int iter = 0; iter < 1000 && !is_diagonal(M); ++iter) {
    M = row_hnf(M).H;
    M = transpose(row_hnf(transpose(M)).H);
  }
  if (!is_diagonal(M)) throw std::runtime_error("smith_invariants: no convergence");
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < M.size() && i < M[0].size(); ++i)
    if (M[i][i] != 0) d.push_back(abs(M[i][i]));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      BigInt l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace nilzeta
