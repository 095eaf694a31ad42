#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace nilzeta {

using cplx = std::complex<double>;

// Square complex band matrix stored by diagonals; diag(k)[i] holds entry (i, i+k).
class BandMatrix {
 public:
  BandMatrix() = default;
  BandMatrix(int n, int lower, int upper);
  static BandMatrix identity(int n, cplx scale = 1.0);
  static BandMatrix from_dense(const Eigen::MatrixXcd& m, double drop = 0.0);

  int size() const { return n_; }
  int lower() const { return lower_; }
  int upper() const { return upper_; }

  cplx operator()(int i, int j) const;
  void set(int i, int j, cplx v);  // (i, j) must lie inside the band
  std::vector<cplx>& diag(int k) { return d_[static_cast<std::size_t>(k + lower_)]; }
  const std::vector<cplx>& diag(int k) const { return d_[static_cast<std::size_t>(k + lower_)]; }

  BandMatrix adjoint() const;
  BandMatrix leading(int m) const;
  Eigen::MatrixXcd dense() const;
  Eigen::MatrixXcd dense_leading(int m) const;
  double max_abs() const;
  // Drop outer diagonals that are exactly zero.
  void trim();

  BandMatrix& operator+=(const BandMatrix& o);
  BandMatrix& operator-=(const BandMatrix& o);
  BandMatrix& operator*=(cplx c);
  friend BandMatrix operator+(BandMatrix a, const BandMatrix& b) { return a += b; }
  friend BandMatrix operator-(BandMatrix a, const BandMatrix& b) { return a -= b; }
  friend BandMatrix operator*(cplx c, BandMatrix a) { return a *= c; }
  friend BandMatrix operator*(const BandMatrix& a, const BandMatrix& b);

 private:
  void widen(int lower, int upper);

  int n_ = 0;
  int lower_ = 0;
  int upper_ = 0;
  std::vector<std::vector<cplx>> d_;
};

// Block matrix of equally sized band blocks; a zero block is stored as an empty BandMatrix.
struct BlockBand {
  int rows = 0, cols = 0, n = 0;
  std::vector<BandMatrix> blocks;  // row-major

  BlockBand() = default;
  BlockBand(int r, int c, int n_);
  BandMatrix& at(int i, int j) { return blocks[static_cast<std::size_t>(i * cols + j)]; }
  const BandMatrix& at(int i, int j) const { return blocks[static_cast<std::size_t>(i * cols + j)]; }
  bool block_zero(int i, int j) const { return at(i, j).size() == 0; }
  void accumulate(int i, int j, const BandMatrix& m);

  BlockBand adjoint() const;
  BlockBand leading(int m) const;
  // Dense matrix of the leading m x m part of every block, block-ordered.
  Eigen::MatrixXcd dense_leading(int m) const;
  int bandwidth() const;
  friend BlockBand operator*(const BlockBand& a, const BlockBand& b);
  friend BlockBand operator+(const BlockBand& a, const BlockBand& b);
};

}  // namespace nilzeta
