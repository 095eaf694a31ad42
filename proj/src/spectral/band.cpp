#include "nilzeta/band.hpp"

#include "nilzeta/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nilzeta {

BandMatrix::BandMatrix(int n, int lower, int upper)
    : n_(n), lower_(lower), upper_(upper),
      d_(static_cast<std::size_t>(lower + upper + 1), std::vector<cplx>(static_cast<std::size_t>(n))) {
  if (n < 0 || lower < 0 || upper < 0) throw std::invalid_argument("BandMatrix: negative size");
}

BandMatrix BandMatrix::identity(int n, cplx scale) {
  BandMatrix m(n, 0, 0);
  std::fill(m.diag(0).begin(), m.diag(0).end(), scale);
  return m;
}

BandMatrix BandMatrix::from_dense(const Eigen::MatrixXcd& a, double drop) {
  const int n = static_cast<int>(a.rows());
  int lo = 0, up = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(a(i, j)) > drop) {
        lo = std::max(lo, i - j);
        up = std::max(up, j - i);
      }
  BandMatrix m(n, lo, up);
  for (int i = 0; i < n; ++i)
    for (int j = std::max(0, i - lo); j <= std::min(n - 1, i + up); ++j) m.set(i, j, a(i, j));
  return m;
}

cplx BandMatrix::operator()(int i, int j) const {
  const int k = j - i;
  if (k < -lower_ || k > upper_ || i < 0 || j < 0 || i >= n_ || j >= n_) return 0.0;
  return diag(k)[static_cast<std::size_t>(i)];
}

void BandMatrix::set(int i, int j, cplx v) {
  const int k = j - i;
  if (k < -lower_ || k > upper_) throw std::out_of_range("BandMatrix::set outside band");
  diag(k)[static_cast<std::size_t>(i)] = v;
}

void BandMatrix::widen(int lower, int upper) {
  if (lower <= lower_ && upper <= upper_) return;
  const int nl = std::max(lower, lower_), nu = std::max(upper, upper_);
  std::vector<std::vector<cplx>> nd(static_cast<std::size_t>(nl + nu + 1), std::vector<cplx>(static_cast<std::size_t>(n_)));
  for (int k = -lower_; k <= upper_; ++k) nd[static_cast<std::size_t>(k + nl)] = std::move(diag(k));
  d_ = std::move(nd);
  lower_ = nl;
  upper_ = nu;
}

BandMatrix BandMatrix::adjoint() const {
  BandMatrix m(n_, upper_, lower_);
  for (int k = -lower_; k <= upper_; ++k) {
    const auto& src = diag(k);
    auto& dst = m.diag(-k);
    for (int i = std::max(0, -k); i < std::min(n_, n_ - k); ++i)
      dst[static_cast<std::size_t>(i + k)] = std::conj(src[static_cast<std::size_t>(i)]);
  }
  return m;
}

BandMatrix BandMatrix::leading(int m) const {
  m = std::min(m, n_);
  BandMatrix out(m, std::min(lower_, std::max(m - 1, 0)), std::min(upper_, std::max(m - 1, 0)));
  for (int k = -out.lower_; k <= out.upper_; ++k)
    for (int i = std::max(0, -k); i < std::min(m, m - k); ++i)
      out.diag(k)[static_cast<std::size_t>(i)] = diag(k)[static_cast<std::size_t>(i)];
  return out;
}

Eigen::MatrixXcd BandMatrix::dense_leading(int m) const {
  m = std::min(m, n_);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m, m);
  for (int k = -lower_; k <= upper_; ++k)
    for (int i = std::max(0, -k); i < std::min(m, m - k); ++i) a(i, i + k) = diag(k)[static_cast<std::size_t>(i)];
  return a;
}

Eigen::MatrixXcd BandMatrix::dense() const { return dense_leading(n_); }

double BandMatrix::max_abs() const {
  double m = 0;
  for (const auto& d : d_)
    for (const auto& v : d) m = std::max(m, std::abs(v));
  return m;
}

void BandMatrix::trim() {
  auto zero = [](const std::vector<cplx>& v) {
    return std::all_of(v.begin(), v.end(), [](cplx x) { return x == cplx(0); });
  };
  int lo = lower_, up = upper_;
  while (lo > 0 && zero(diag(-lo))) --lo;
  while (up > 0 && zero(diag(up))) --up;
  if (lo == lower_ && up == upper_) return;
  std::vector<std::vector<cplx>> nd;
  for (int k = -lo; k <= up; ++k) nd.push_back(std::move(diag(k)));
  d_ = std::move(nd);
  lower_ = lo;
  upper_ = up;
}

BandMatrix& BandMatrix::operator+=(const BandMatrix& o) {
  if (o.n_ == 0) return *this;
  if (n_ == 0) return *this = o;
  if (o.n_ != n_) throw std::invalid_argument("BandMatrix size mismatch");
  widen(o.lower_, o.upper_);
  for (int k = -o.lower_; k <= o.upper_; ++k) {
    auto& dst = diag(k);
    const auto& src = o.diag(k);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  }
  return *this;
}

BandMatrix& BandMatrix::operator-=(const BandMatrix& o) {
  BandMatrix neg = o;
  neg *= -1.0;
  return *this += neg;
}

BandMatrix& BandMatrix::operator*=(cplx c) {
  for (auto& d : d_)
    for (auto& v : d) v *= c;
  return *this;
}

BandMatrix operator*(const BandMatrix& a, const BandMatrix& b) {
  if (a.n_ == 0 || b.n_ == 0) return {};
  if (a.n_ != b.n_) throw std::invalid_argument("BandMatrix size mismatch");
  const int n = a.n_;
  BandMatrix c(n, std::min(a.lower_ + b.lower_, n - 1), std::min(a.upper_ + b.upper_, n - 1));
  for (int p = -a.lower_; p <= a.upper_; ++p)
    for (int q = -b.lower_; q <= b.upper_; ++q) {
      const int k = p + q;
      if (k < -c.lower_ || k > c.upper_) continue;
      const int i0 = std::max({0, -p, -k});
      const int i1 = std::min({n, n - p, n - k});
      if (i1 <= i0) continue;
      kernels::cmul_acc(c.diag(k).data() + i0, a.diag(p).data() + i0, b.diag(q).data() + i0 + p,
                        static_cast<std::size_t>(i1 - i0));
    }
  return c;
}

BlockBand::BlockBand(int r, int c, int n_) : rows(r), cols(c), n(n_), blocks(static_cast<std::size_t>(r * c)) {}

void BlockBand::accumulate(int i, int j, const BandMatrix& m) { at(i, j) += m; }

BlockBand BlockBand::adjoint() const {
  BlockBand out(cols, rows, n);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!block_zero(i, j)) out.at(j, i) = at(i, j).adjoint();
  return out;
}

BlockBand BlockBand::leading(int m) const {
  BlockBand out(rows, cols, std::min(m, n));
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (blocks[k].size() != 0) out.blocks[k] = blocks[k].leading(m);
  return out;
}

Eigen::MatrixXcd BlockBand::dense_leading(int m) const {
  m = std::min(m, n);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows * m, cols * m);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (!block_zero(i, j)) a.block(i * m, j * m, m, m) = at(i, j).dense_leading(m);
  return a;
}

int BlockBand::bandwidth() const {
  int w = 0;
  for (const auto& b : blocks)
    if (b.size() != 0) w = std::max({w, b.lower(), b.upper()});
  return w;
}

BlockBand operator*(const BlockBand& a, const BlockBand& b) {
  if (a.cols != b.rows || a.n != b.n) throw std::invalid_argument("BlockBand shape mismatch");
  BlockBand c(a.rows, b.cols, a.n);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      for (int k = 0; k < a.cols; ++k)
        if (!a.block_zero(i, k) && !b.block_zero(k, j)) c.accumulate(i, j, a.at(i, k) * b.at(k, j));
  return c;
}

BlockBand operator+(const BlockBand& a, const BlockBand& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("BlockBand shape mismatch");
  BlockBand c = a;
  for (std::size_t k = 0; k < c.blocks.size(); ++k) c.blocks[k] += b.blocks[k];
  return c;
}

}  // namespace nilzeta
