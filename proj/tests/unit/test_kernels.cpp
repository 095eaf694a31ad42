#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilzeta/kernels.hpp"

#include <random>

using namespace nilzeta;
using namespace nilzeta::kernels;

namespace {

struct Impl {
  Isa isa;
  double (*exp_sum)(const double*, const double*, std::size_t, double);
  PowSum (*pow_sum)(const double*, std::size_t, double);
  void (*cmul)(std::complex<double>*, const std::complex<double>*, const std::complex<double>*, std::size_t);
};

std::vector<Impl> implementations() {
  std::vector<Impl> out;
  for (Isa i : available_isas()) {
    if (i == Isa::Scalar) out.push_back({i, scalar::sum_exp_neg, scalar::sum_pow_neg, scalar::cmul_acc});
#ifdef NILZETA_HAVE_AVX2
    if (i == Isa::Avx2) out.push_back({i, avx2::sum_exp_neg, avx2::sum_pow_neg, avx2::cmul_acc});
#endif
#ifdef NILZETA_HAVE_NEON
    if (i == Isa::Neon) out.push_back({i, neon::sum_exp_neg, neon::sum_pow_neg, neon::cmul_acc});
#endif
  }
  return out;
}

}  // namespace

TEST_CASE("scalar is always available and selectable") {
  const auto isas = available_isas();
  REQUIRE(!isas.empty());
  CHECK(isas.front() == Isa::Scalar);
  set_active_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  set_active_isa(isas.back());
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
  std::mt19937_64 g(41);
  std::uniform_real_distribution<double> u(0.5, 5000.0), wt(0.0, 3.0);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1001u}) {
    std::vector<double> x(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = u(g);
      w[i] = wt(g);
    }
    std::vector<std::complex<double>> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = {wt(g) - 1.5, wt(g) - 1.5};
      b[i] = {wt(g) - 1.5, wt(g) - 1.5};
    }
    const double e_ref = scalar::sum_exp_neg(x.data(), w.data(), n, 1e-3);
    const double e1_ref = scalar::sum_exp_neg(x.data(), nullptr, n, 2e-3);
    const PowSum p_ref = scalar::sum_pow_neg(x.data(), n, 1.7);
    std::vector<std::complex<double>> y_ref(n, {1, -1});
    scalar::cmul_acc(y_ref.data(), a.data(), b.data(), n);
    for (const auto& impl : implementations()) {
      CAPTURE(isa_name(impl.isa));
      CAPTURE(n);
      CHECK(impl.exp_sum(x.data(), w.data(), n, 1e-3) == doctest::Approx(e_ref).epsilon(1e-13));
      CHECK(impl.exp_sum(x.data(), nullptr, n, 2e-3) == doctest::Approx(e1_ref).epsilon(1e-13));
      const PowSum p = impl.pow_sum(x.data(), n, 1.7);
      CHECK(p.value == doctest::Approx(p_ref.value).epsilon(1e-13));
      CHECK(p.log_moment == doctest::Approx(p_ref.log_moment).epsilon(1e-13));
      std::vector<std::complex<double>> y(n, {1, -1});
      impl.cmul(y.data(), a.data(), b.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y[i] - y_ref[i]) <= 1e-15 * (1 + std::abs(y_ref[i])));
    }
  }
}

TEST_CASE("dispatcher routes to the active ISA") {
  const double x[3] = {1.0, 2.0, 4.0};
  for (Isa i : available_isas()) {
    set_active_isa(i);
    CHECK(sum_pow_neg(x, 3, 1.0).value == doctest::Approx(1.75));
    CHECK(sum_exp_neg(x, nullptr, 3, 0.0) == doctest::Approx(3.0));
  }
}
