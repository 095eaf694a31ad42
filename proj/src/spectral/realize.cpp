#include "nilzeta/spectral.hpp"

#include <cmath>
#include <map>

namespace nilzeta {

namespace {

constexpr double kTwoPi = 2 * M_PI;
const cplx kI(0, 1);

// Oscillator-basis matrices for frequency omega.
BandMatrix theta_matrix(int n, double omega) {
  BandMatrix m(n, 1, 1);
  for (int k = 0; k + 1 < n; ++k) {
    const double v = std::sqrt((k + 1) / (2 * omega));
    m.set(k, k + 1, v);
    m.set(k + 1, k, v);
  }
  return m;
}

BandMatrix dtheta_matrix(int n, double omega) {
  BandMatrix m(n, 1, 1);
  for (int k = 0; k + 1 < n; ++k) {
    const double v = std::sqrt(omega / 2) * std::sqrt(k + 1.0);
    m.set(k, k + 1, v);
    m.set(k + 1, k, -v);
  }
  return m;
}

BandMatrix theta_sq_matrix(int n, double omega) {
  BandMatrix m(n, 2, 2);
  for (int k = 0; k < n; ++k) m.set(k, k, (2 * k + 1) / (2 * omega));
  for (int k = 0; k + 2 < n; ++k) {
    const double v = std::sqrt((k + 1.0) * (k + 2.0)) / (2 * omega);
    m.set(k, k + 2, v);
    m.set(k + 2, k, v);
  }
  return m;
}

BandMatrix zero_matrix(int n) { return BandMatrix(n, 0, 0); }

class Evaluator {
 public:
  explicit Evaluator(const RepRealization& R) : R_(R) {}

  const BandMatrix& power(int i, int e) {
    auto& v = pow_[static_cast<std::size_t>(i)];
    if (v.empty()) v.push_back(BandMatrix::identity(R_.Nb));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * R_.X[static_cast<std::size_t>(i)]);
    return v[static_cast<std::size_t>(e)];
  }

  BandMatrix monomial(const PBWMonomial& m) {
    auto it = mono_.find(m);
    if (it != mono_.end()) return it->second;
    BandMatrix acc = BandMatrix::identity(R_.Nb);
    for (int i = 0; i < 5; ++i)
      if (m[static_cast<std::size_t>(i)] > 0) acc = acc * power(i, m[static_cast<std::size_t>(i)]);
    acc.trim();
    mono_.emplace(m, acc);
    return acc;
  }

  BandMatrix poly(const UEAPoly& p) {
    BandMatrix acc;
    for (const auto& [m, c] : p.terms) acc += c.to_double() * monomial(m);
    if (acc.size() != 0) acc.trim();
    return acc;
  }

 private:
  const RepRealization& R_;
  std::array<std::vector<BandMatrix>, 5> pow_;
  std::map<PBWMonomial, BandMatrix> mono_;
};

double frob_leading(const BlockBand& B, int N) { return B.dense_leading(N).norm(); }

}  // namespace

RepRealization realize(const RepLabel& label, int N, int margin) {
  validate_label(label);
  RepRealization R;
  R.label = label;
  if (auto* s = std::get_if<ScalarLabel>(&label)) {
    R.N = R.Nb = 1;
    R.X[0] = BandMatrix::identity(1, kTwoPi * kI * s->alpha);
    R.X[1] = BandMatrix::identity(1, kTwoPi * kI * s->beta);
    for (int i = 2; i < 5; ++i) R.X[static_cast<std::size_t>(i)] = zero_matrix(1);
    return R;
  }
  if (N < 16) throw std::invalid_argument("realize: N must be >= 16 for non-scalar labels");
  if (margin < 8) throw std::invalid_argument("realize: margin must be >= 8");
  R.N = N;
  R.Nb = N + margin;
  const int n = R.Nb;
  if (auto* h = std::get_if<SchrodingerLabel>(&label)) {
    R.omega = kTwoPi * std::abs(h->hbar);
    R.X[0] = dtheta_matrix(n, R.omega);
    R.X[1] = (kTwoPi * kI * h->hbar) * theta_matrix(n, R.omega);
    R.X[2] = BandMatrix::identity(n, kTwoPi * kI * h->hbar);
    R.X[3] = zero_matrix(n);
    R.X[4] = zero_matrix(n);
    return R;
  }
  const auto& g = std::get<GenericLabel>(label);
  const double rr = g.lambda * g.lambda + g.mu * g.mu;
  const double c = std::cbrt(rr);
  R.omega = kTwoPi;
  const BandMatrix d = dtheta_matrix(n, R.omega);
  BandMatrix q = theta_sq_matrix(n, R.omega) + BandMatrix::identity(n, g.nu / (c * c));
  q *= 0.5;
  R.X[0] = (g.lambda / c) * d - (kTwoPi * kI * g.mu / c) * q;
  R.X[1] = (g.mu / c) * d + (kTwoPi * kI * g.lambda / c) * q;
  R.X[2] = (kTwoPi * kI * c) * theta_matrix(n, R.omega);
  R.X[3] = BandMatrix::identity(n, kTwoPi * kI * g.lambda);
  R.X[4] = BandMatrix::identity(n, kTwoPi * kI * g.mu);
  return R;
}

BandMatrix evaluate(const UEAPoly& p, const RepRealization& R) {
  Evaluator ev(R);
  BandMatrix out = ev.poly(p);
  if (out.size() == 0) out = zero_matrix(R.Nb);
  return out;
}

BlockBand evaluate(const UEAMatrix& m, const RepRealization& R) {
  Evaluator ev(R);
  BlockBand out(m.rows, m.cols, R.Nb);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = ev.poly(m.at(i, j));
  return out;
}

namespace {

BlockBand laplacian_parts(const RepRealization& R, int q, int pow_down, int pow_up) {
  const int dim = kCohomologyDims[static_cast<std::size_t>(q)];
  BlockBand total(dim, dim, R.Nb);
  auto raise = [](const BlockBand& B, int p) {
    BlockBand acc = B;
    for (int k = 1; k < p; ++k) acc = acc * B;
    return acc;
  };
  if (q > 0) {
    const BlockBand D = evaluate(rumin_matrix(q - 1), R);
    total = total + raise(D * D.adjoint(), pow_down);
  }
  if (q < 5) {
    const BlockBand D = evaluate(rumin_matrix(q), R);
    total = total + raise(D.adjoint() * D, pow_up);
  }
  return total;
}

}  // namespace

BlockBand first_order_laplacian(const RepRealization& R, int q) {
  if (q < 0 || q > 5) throw std::invalid_argument("first_order_laplacian: q out of range");
  return laplacian_parts(R, q, 1, 1).leading(R.N);
}

Eigen::MatrixXcd delta_q(const RepRealization& R, int q, bool literal) {
  if (q < 0 || q > 5) throw std::invalid_argument("delta_q: q out of range");
  if (!literal) return first_order_laplacian(R, q).dense_leading(R.N);
  const int a_down = q > 0 ? Constants::aq[static_cast<std::size_t>(q - 1)] : 1;
  const int a_up = q < 5 ? Constants::aq[static_cast<std::size_t>(q)] : 1;
  if (std::holds_alternative<ScalarLabel>(R.label)) return laplacian_parts(R, q, a_down, a_up).dense_leading(1);
  // powers widen the band; realize again with enough margin for an exact leading block
  const int need = 16 * std::max(a_down, a_up) + 16;
  const RepRealization W = R.Nb - R.N >= need ? R : realize(R.label, R.N, need);
  return laplacian_parts(W, q, a_down, a_up).dense_leading(W.N);
}

double casimir_check(const RepRealization& R) {
  const auto* g = std::get_if<GenericLabel>(&R.label);
  if (!g) throw std::invalid_argument("casimir_check needs a Generic label");
  const UEAPoly p = normal_form({3, 3}) + QSqrt2(2) * normal_form({1, 5}) - QSqrt2(2) * normal_form({2, 4});
  BandMatrix m = evaluate(p, R);
  const double target = kTwoPi * kTwoPi * g->nu;
  m -= BandMatrix::identity(R.Nb, target);
  const Eigen::MatrixXcd lead = m.dense_leading(R.N);
  const double res = lead.cwiseAbs().maxCoeff();
  return g->nu != 0 ? res / std::abs(target) : res;
}

double chain_residual(const RepRealization& R, int q) {
  if (q < 0 || q > 3) throw std::invalid_argument("chain_residual: q in 0..3");
  const BlockBand A = evaluate(rumin_matrix(q + 1), R);
  const BlockBand B = evaluate(rumin_matrix(q), R);
  const BlockBand P = A * B;
  const double den = frob_leading(A, R.N) * frob_leading(B, R.N);
  return den > 0 ? frob_leading(P, R.N) / den : frob_leading(P, R.N);
}

double adjoint_residual(const RepRealization& R, int q) {
  const BlockBand A = evaluate(formal_adjoint(rumin_matrix(q)), R);
  const BlockBand B = evaluate(rumin_matrix(q), R).adjoint();
  const Eigen::MatrixXcd a = A.dense_leading(R.N), b = B.dense_leading(R.N);
  const double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace nilzeta
