#pragma once

#include "dual.hpp"

// Precision-generic kernels shared by the zeta_special sources.
namespace nilzeta::detail {

template <class T>
Dual<T> rgamma(const Dual<T>& z);

template <class T>
struct HurwitzOut {
  Dual<T> value;
  T abs_error;
};
template <class T>
HurwitzOut<T> hurwitz(const Dual<T>& s, T a);

template <class T>
constexpr T eps_of() {
  return std::numeric_limits<T>::epsilon();
}

}  // namespace nilzeta::detail
