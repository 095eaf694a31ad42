#include "nilzeta/uea.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace nilzeta {

int weight(const PBWMonomial& m) { return m[0] + m[1] + 2 * m[2] + 3 * m[3] + 3 * m[4]; }

int total_degree(const PBWMonomial& m) { return m[0] + m[1] + m[2] + m[3] + m[4]; }

std::vector<int> word_of(const PBWMonomial& m) {
  std::vector<int> w;
  for (int i = 0; i < 5; ++i) w.insert(w.end(), m[i], i + 1);
  return w;
}

UEAPoly::UEAPoly(const QSqrt2& c) {
  if (!c.is_zero()) terms[PBWMonomial{0, 0, 0, 0, 0}] = c;
}

void UEAPoly::add_term(const PBWMonomial& m, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

int UEAPoly::weighted_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, weight(m));
  return d;
}

UEAPoly& UEAPoly::operator+=(const UEAPoly& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

UEAPoly& UEAPoly::operator-=(const UEAPoly& o) {
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

UEAPoly& UEAPoly::operator*=(const QSqrt2& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

UEAPoly operator+(UEAPoly p, const UEAPoly& q) { return p += q; }
UEAPoly operator-(UEAPoly p, const UEAPoly& q) { return p -= q; }
UEAPoly operator-(UEAPoly p) { return p *= QSqrt2(-1); }
UEAPoly operator*(QSqrt2 c, UEAPoly p) { return p *= c; }
UEAPoly operator*(const UEAPoly& p, const UEAPoly& q) { return multiply_poly(p, q); }

UEAPoly generator(int i) {
  if (i < 1 || i > 5) throw std::out_of_range("generator index");
  PBWMonomial m{0, 0, 0, 0, 0};
  m[i - 1] = 1;
  UEAPoly p;
  p.add_term(m, QSqrt2(1));
  return p;
}

namespace {

// [X_i, X_j] for i < j; 0 when the bracket vanishes.
int bracket(int i, int j) {
  if (i == 1 && j == 2) return 3;
  if (i == 1 && j == 3) return 4;
  if (i == 2 && j == 3) return 5;
  return 0;
}

std::string key_of(const std::vector<int>& w) { return std::string(w.begin(), w.end()); }

std::vector<int> descents(const std::vector<int>& w) {
  std::vector<int> d;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1]) d.push_back(static_cast<int>(p));
  return d;
}

template <class Pick>
UEAPoly rewrite(const std::vector<int>& w, Pick&& pick,
                std::unordered_map<std::string, UEAPoly>* memo) {
  if (memo) {
    auto it = memo->find(key_of(w));
    if (it != memo->end()) return it->second;
  }
  UEAPoly result;
  const auto ds = descents(w);
  if (ds.empty()) {
    PBWMonomial m{0, 0, 0, 0, 0};
    for (int g : w) ++m[g - 1];
    result.add_term(m, QSqrt2(1));
  } else {
    const int p = pick(ds);
    const int j = w[p], i = w[p + 1];
    std::vector<int> swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    result = rewrite(swapped, pick, memo);
    // X_j X_i = X_i X_j - [X_i, X_j]
    if (int k = bracket(i, j)) {
      std::vector<int> reduced(w.begin(), w.begin() + p);
      reduced.push_back(k);
      reduced.insert(reduced.end(), w.begin() + p + 2, w.end());
      result -= rewrite(reduced, pick, memo);
    }
  }
  if (memo) memo->emplace(key_of(w), result);
  return result;
}

std::unordered_map<std::string, UEAPoly>& nf_cache() {
  thread_local std::unordered_map<std::string, UEAPoly> cache;
  return cache;
}

}  // namespace

UEAPoly normal_form(const std::vector<int>& word, const QSqrt2& coeff) {
  for (int g : word)
    if (g < 1 || g > 5) throw std::out_of_range("generator index in word");
  auto first = [](const std::vector<int>& ds) { return ds.front(); };
  UEAPoly p = rewrite(word, first, &nf_cache());
  return p *= coeff;
}

UEAPoly normal_form_randomized(const std::vector<int>& word, const QSqrt2& coeff, std::mt19937_64& rng) {
  auto any = [&rng](const std::vector<int>& ds) {
    std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
    return ds[pick(rng)];
  };
  UEAPoly p = rewrite(word, any, nullptr);
  return p *= coeff;
}

UEAPoly multiply_poly(const UEAPoly& p, const UEAPoly& q) {
  UEAPoly r;
  for (const auto& [m1, c1] : p.terms) {
    const auto w1 = word_of(m1);
    for (const auto& [m2, c2] : q.terms) {
      auto w = w1;
      const auto w2 = word_of(m2);
      w.insert(w.end(), w2.begin(), w2.end());
      r += normal_form(w, c1 * c2);
    }
  }
  return r;
}

UEAPoly antipode(const UEAPoly& p) {
  UEAPoly r;
  for (const auto& [m, c] : p.terms) {
    auto w = word_of(m);
    std::reverse(w.begin(), w.end());
    r += normal_form(w, (w.size() % 2) ? -c : c);
  }
  return r;
}

std::string to_string(const UEAPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    if (!first) s += " + ";
    first = false;
    s += "(" + to_string(c) + ")";
    for (int i = 0; i < 5; ++i) {
      if (!m[i]) continue;
      s += "*X" + std::to_string(i + 1);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

UEAMatrix::UEAMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r * c)) {
  if (r <= 0 || c <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

bool UEAMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const UEAPoly& p) { return p.is_zero(); });
}

int UEAMatrix::weighted_degree() const {
  int d = -1;
  for (const auto& p : entries) d = std::max(d, p.weighted_degree());
  return d;
}

UEAMatrix identity_matrix(int n) {
  UEAMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = UEAPoly(QSqrt2(1));
  return m;
}

namespace {

UEAPoly W(const char* digits, const QSqrt2& c = QSqrt2(1)) {
  std::vector<int> w;
  for (const char* p = digits; *p; ++p) w.push_back(*p - '0');
  return normal_form(w, c);
}

}  // namespace

UEAMatrix rumin_matrix(int q) {
  const QSqrt2 one(1), m1(-1), s2(0, 1), ms2(0, -1), h(0, Rational(1, 2)), mh(0, Rational(-1, 2));
  switch (q) {
    case 0: {
      UEAMatrix d(2, 1);
      d.at(0, 0) = W("1");
      d.at(1, 0) = W("2");
      return d;
    }
    case 1: {
      UEAMatrix d(3, 2);
      d.at(0, 0) = W("112", m1) + W("13", m1) + W("4", m1);
      d.at(0, 1) = W("111");
      d.at(1, 0) = W("122", ms2) + W("5", ms2);
      d.at(1, 1) = W("211", s2) + W("4", ms2);
      d.at(2, 0) = W("222", m1);
      d.at(2, 1) = W("221") + W("23", m1) + W("5", m1);
      return d;
    }
    case 2: {
      UEAMatrix d(3, 3);
      d.at(0, 0) = W("12", m1) + W("3", m1);
      d.at(0, 1) = W("11", h);
      d.at(1, 0) = W("22", mh);
      d.at(1, 1) = W("3", QSqrt2(Rational(-3, 2)));
      d.at(1, 2) = W("11", h);
      d.at(2, 1) = W("22", mh);
      d.at(2, 2) = W("21") + W("3", m1);
      return d;
    }
    case 3: {
      UEAMatrix d(2, 3);
      d.at(0, 0) = W("122") + W("32") + W("5", m1);
      d.at(0, 1) = W("112", ms2) + W("4", s2);
      d.at(0, 2) = W("111");
      d.at(1, 0) = W("222");
      d.at(1, 1) = W("221", ms2) + W("5", ms2);
      d.at(1, 2) = W("211") + W("31", m1) + W("4", one);
      return d;
    }
    case 4: {
      UEAMatrix d(1, 2);
      d.at(0, 0) = W("2", m1);
      d.at(0, 1) = W("1");
      return d;
    }
    default:
      throw std::out_of_range("rumin_matrix: q must be in 0..4");
  }
}

UEAMatrix compose(const UEAMatrix& a, const UEAMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("compose: dimension mismatch");
  UEAMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      for (int k = 0; k < a.cols; ++k) c.at(i, j) += multiply_poly(a.at(i, k), b.at(k, j));
  return c;
}

UEAMatrix formal_adjoint(const UEAMatrix& a) {
  UEAMatrix r(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = antipode(a.at(i, j));
  return r;
}

}  // namespace nilzeta
