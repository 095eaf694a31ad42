#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilzeta/spectral.hpp"
#include "nilzeta/uea.hpp"

#include <random>

using namespace nilzeta;

TEST_CASE("Q(sqrt2) arithmetic") {
  const QSqrt2 a(Rational(1), Rational(1)), b(Rational(3, 2), Rational(-1));
  CHECK((a * b) / b == a);
  CHECK(a * QSqrt2(Rational(-1), Rational(1)) == QSqrt2(Rational(1)));
}

TEST_CASE("brackets in normal form") {
  CHECK(normal_form({2, 1}) == generator(1) * generator(2) - generator(3));
  CHECK(normal_form({3, 1}) == generator(1) * generator(3) - generator(4));
  CHECK(normal_form({3, 2}) == generator(2) * generator(3) - generator(5));
  CHECK(normal_form({4, 1}) == generator(1) * generator(4));
}

TEST_CASE("associativity and confluence on random words") {
  std::mt19937_64 g(21);
  std::uniform_int_distribution<int> gen(1, 5), len(1, 5);
  for (int i = 0; i < 100; ++i) {
    std::vector<int> a(static_cast<std::size_t>(len(g))), b(static_cast<std::size_t>(len(g))), c(static_cast<std::size_t>(len(g)));
    for (auto* w : {&a, &b, &c})
      for (auto& x : *w) x = gen(g);
    const auto A = normal_form(a), B = normal_form(b), C = normal_form(c);
    CHECK((A * B) * C == A * (B * C));
    CHECK(normal_form_randomized(a, QSqrt2(1), g) == A);
  }
}

TEST_CASE("Rumin complex") {
  const std::array<std::pair<int, int>, 5> shapes{{{2, 1}, {3, 2}, {3, 3}, {2, 3}, {1, 2}}};
  for (int q = 0; q < 5; ++q) {
    const auto D = rumin_matrix(q);
    CHECK(D.rows == shapes[static_cast<std::size_t>(q)].first);
    CHECK(D.cols == shapes[static_cast<std::size_t>(q)].second);
    CHECK(D.weighted_degree() == Constants::kq[static_cast<std::size_t>(q)]);
  }
  for (int q = 0; q < 4; ++q) CHECK(compose(rumin_matrix(q + 1), rumin_matrix(q)).is_zero());
  CHECK_THROWS(rumin_matrix(5));
}

TEST_CASE("formal adjoint reverses composition") {
  for (int q = 0; q < 4; ++q) {
    const auto a = rumin_matrix(q + 1), b = rumin_matrix(q);
    CHECK(formal_adjoint(compose(a, b)) == compose(formal_adjoint(b), formal_adjoint(a)));
  }
  CHECK(antipode(generator(1) * generator(2)) == generator(2) * generator(1));
}

TEST_CASE("weights") {
  CHECK(weight({1, 1, 1, 1, 1}) == 10);
  CHECK(total_degree({1, 2, 0, 0, 3}) == 6);
  CHECK(normal_form({1, 2}).weighted_degree() == 2);
}
