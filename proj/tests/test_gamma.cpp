#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "spinmoment/gamma.hpp"

using namespace spinmoment;

namespace {

double max_abs_diff(const CMat4& a, const CMat4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double max_abs_diff2(const CMat2& a, const CMat2& b) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace

TEST_CASE("Clifford algebra: {gamma^mu, gamma^nu} = 2 eta^{mu nu}") {
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const CMat4 lhs = anticommutator(gamma::gamma(mu), gamma::gamma(nu));
      const CMat4 rhs = cplx(2.0 * gamma::eta(mu, nu)) * CMat4::identity();
      CHECK(max_abs_diff(lhs, rhs) <= 1e-14);
    }
  }
}

TEST_CASE("Pauli algebra: sigma_i sigma_j = delta_ij + i eps_ijk sigma_k") {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const CMat2 prod = gamma::pauli(i) * gamma::pauli(j);
      CMat2 want;
      if (i == j) {
        want = CMat2::identity();
      } else {
        const int k = 6 - i - j;
        const double sign = ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1))
                                ? 1.0
                                : -1.0;
        want = cplx(0.0, sign) * gamma::pauli(k);
      }
      CHECK(max_abs_diff2(prod, want) <= 1e-15);
    }
  }
}

TEST_CASE("spin matrices from gamma products") {
  // sigma^k = i gamma^i gamma^j for cyclic (i, j, k)
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& t : cyc) {
    const CMat4 built = cplx(0.0, 1.0) * (gamma::gamma(t[0]) * gamma::gamma(t[1]));
    CHECK(max_abs_diff(built, gamma::spin(t[2])) <= 1e-15);
  }
}

TEST_CASE("hermiticity: gamma^0, gamma^0 gamma^k, and spin are self-adjoint") {
  CHECK(max_abs_diff(gamma::gamma(0), gamma::gamma(0).adjoint()) == 0.0);
  for (int k = 1; k <= 3; ++k) {
    CHECK(max_abs_diff(gamma::gamma0_gamma(k), gamma::gamma0_gamma(k).adjoint()) == 0.0);
    CHECK(max_abs_diff(gamma::spin(k), gamma::spin(k).adjoint()) == 0.0);
    // spatial gamma^k alone is anti-Hermitian
    const CMat4 g = gamma::gamma(k);
    CHECK(max_abs_diff(g, cplx(-1.0) * g.adjoint()) == 0.0);
  }
}

TEST_CASE("gamma0_gamma matches the explicit product") {
  for (int k = 1; k <= 3; ++k) {
    CHECK(max_abs_diff(gamma::gamma0_gamma(k), gamma::gamma(0) * gamma::gamma(k)) == 0.0);
  }
}

TEST_CASE("contractions are linear in the vector") {
  const Vec3 a{0.3, -1.7, 2.2};
  CMat2 pd;
  CMat4 sd;
  for (int k = 1; k <= 3; ++k) {
    pd = pd + cplx(a[k - 1]) * gamma::pauli(k);
    sd = sd + cplx(a[k - 1]) * gamma::spin(k);
  }
  CHECK(max_abs_diff2(gamma::pauli_dot(a), pd) == 0.0);
  CHECK(max_abs_diff(gamma::spin_dot(a), sd) == 0.0);
}

TEST_CASE("metric") {
  CHECK(gamma::eta(0, 0) == 1.0);
  for (int k = 1; k <= 3; ++k) CHECK(gamma::eta(k, k) == -1.0);
  CHECK(gamma::eta(0, 1) == 0.0);
  CHECK(gamma::eta(2, 3) == 0.0);
}
