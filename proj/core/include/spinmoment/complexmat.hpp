#pragma once

#include <array>
#include <complex>

#include "spinmoment/vec3.hpp"

namespace spinmoment {

using cplx = std::complex<double>;

using CVec2 = std::array<cplx, 2>;
using CVec4 = std::array<cplx, 4>;

template <int N>
struct CMat {
  std::array<cplx, N * N> a{};

  cplx& operator()(int i, int j) { return a[i * N + j]; }
  const cplx& operator()(int i, int j) const { return a[i * N + j]; }

  static CMat identity() {
    CMat m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  CMat adjoint() const {
    CMat m;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  friend CMat operator*(const CMat& x, const CMat& y) {
    CMat r;
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        const cplx xik = x(i, k);
        if (xik == cplx{}) continue;
        for (int j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend CMat operator+(CMat x, const CMat& y) {
    for (int i = 0; i < N * N; ++i) x.a[i] += y.a[i];
    return x;
  }
  friend CMat operator-(CMat x, const CMat& y) {
    for (int i = 0; i < N * N; ++i) x.a[i] -= y.a[i];
    return x;
  }
  friend CMat operator*(cplx s, CMat x) {
    for (auto& v : x.a) v *= s;
    return x;
  }

  std::array<cplx, N> apply(const std::array<cplx, N>& v) const {
    std::array<cplx, N> r{};
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    return m;
  }
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

template <int N>
CMat<N> anticommutator(const CMat<N>& x, const CMat<N>& y) {
  return x * y + y * x;
}

/// <v|w> with the left argument conjugated
template <std::size_t N>
cplx inner(const std::array<cplx, N>& v, const std::array<cplx, N>& w) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(v[i]) * w[i];
  return s;
}

/// <v|M|w>
template <int N, std::size_t M>
cplx sandwich(const std::array<cplx, M>& v, const CMat<N>& m, const std::array<cplx, M>& w) {
  static_assert(M == static_cast<std::size_t>(N), "vector/matrix size mismatch");
  return inner(v, m.apply(w));
}

template <std::size_t N>
double norm2(const std::array<cplx, N>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

}  // namespace spinmoment
