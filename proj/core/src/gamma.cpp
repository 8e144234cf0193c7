#include "spinmoment/gamma.hpp"

#include <array>
#include <stdexcept>

namespace spinmoment::gamma {

namespace {

const cplx I{0.0, 1.0};

std::array<CMat2, 4> make_pauli() {
  std::array<CMat2, 4> s;  // index 0 unused
  s[1](0, 1) = 1.0;
  s[1](1, 0) = 1.0;
  s[2](0, 1) = -I;
  s[2](1, 0) = I;
  s[3](0, 0) = 1.0;
  s[3](1, 1) = -1.0;
  return s;
}

const std::array<CMat2, 4>& pauli_table() {
  static const std::array<CMat2, 4> t = make_pauli();
  return t;
}

CMat4 embed(const CMat2& ul, const CMat2& ur, const CMat2& ll, const CMat2& lr) {
  CMat4 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = ul(i, j);
      m(i, j + 2) = ur(i, j);
      m(i + 2, j) = ll(i, j);
      m(i + 2, j + 2) = lr(i, j);
    }
  return m;
}

std::array<CMat4, 4> make_gamma() {
  const auto& s = pauli_table();
  CMat2 id = CMat2::identity();
  CMat2 zero;
  std::array<CMat4, 4> g;
  g[0] = embed(id, zero, zero, cplx{-1.0} * id);
  for (int k = 1; k <= 3; ++k) g[k] = embed(zero, s[k], cplx{-1.0} * s[k], zero);
  return g;
}

const std::array<CMat4, 4>& gamma_table() {
  static const std::array<CMat4, 4> t = make_gamma();
  return t;
}

std::array<CMat4, 4> make_spin() {
  const auto& s = pauli_table();
  CMat2 zero;
  std::array<CMat4, 4> t;
  for (int k = 1; k <= 3; ++k) t[k] = embed(s[k], zero, zero, s[k]);
  return t;
}

const std::array<CMat4, 4>& spin_table() {
  static const std::array<CMat4, 4> t = make_spin();
  return t;
}

std::array<CMat4, 4> make_g0g() {
  std::array<CMat4, 4> t;
  for (int k = 1; k <= 3; ++k) t[k] = gamma_table()[0] * gamma_table()[k];
  return t;
}

const std::array<CMat4, 4>& g0g_table() {
  static const std::array<CMat4, 4> t = make_g0g();
  return t;
}

void check_spatial(int k) {
  if (k < 1 || k > 3) throw std::out_of_range("spatial index must be 1, 2 or 3");
}

}  // namespace

double eta(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw std::out_of_range("metric index must be 0..3");
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

const CMat2& pauli(int k) {
  check_spatial(k);
  return pauli_table()[k];
}

const CMat4& gamma(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("gamma index must be 0..3");
  return gamma_table()[mu];
}

const CMat4& spin(int k) {
  check_spatial(k);
  return spin_table()[k];
}

const CMat4& gamma0_gamma(int k) {
  check_spatial(k);
  return g0g_table()[k];
}

CMat2 pauli_dot(const Vec3& a) {
  CMat2 m;
  for (int k = 1; k <= 3; ++k) m = m + cplx{a[k - 1]} * pauli(k);
  return m;
}

CMat4 spin_dot(const Vec3& a) {
  CMat4 m;
  for (int k = 1; k <= 3; ++k) m = m + cplx{a[k - 1]} * spin(k);
  return m;
}

}  // namespace spinmoment::gamma
