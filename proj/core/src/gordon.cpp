#include "spinmoment/gordon.hpp"

#include "spinmoment/gamma.hpp"

namespace spinmoment {

namespace {

/// gamma^0 sigma^k (Hermitian), cached
const CMat4& g0_sigma(int k) {
  static const CMat4 cache[3] = {gamma::gamma(0) * gamma::spin(1),
                                 gamma::gamma(0) * gamma::spin(2),
                                 gamma::gamma(0) * gamma::spin(3)};
  return cache[k - 1];
}

/// psi^dag gamma^0 sigma psi and its Jacobian d_j S_k, from analytic gradients
void spin_density_jacobian(const SpinorState& state, const Vec3& x, double t, Vec3& S,
                           double dS[3][3]) {
  const CVec4 psi = state.evaluate(x, t);
  const auto grad = state.gradient(x, t);
  for (int k = 1; k <= 3; ++k) {
    S[k - 1] = sandwich(psi, g0_sigma(k), psi).real();
    // d_j (psi^dag M psi) = 2 Re(psi^dag M d_j psi) for Hermitian M
    for (int j = 0; j < 3; ++j)
      dS[j][k - 1] = 2.0 * sandwich(psi, g0_sigma(k), grad[j]).real();
  }
}

}  // namespace

Vec3 magnetization_current(const SpinorState& state, const Vec3& x, double t) {
  const PhysicalScales& s = state.scales();
  Vec3 S;
  double dS[3][3];
  spin_density_jacobian(state, x, t, S, dS);
  const Vec3 curl{dS[1][2] - dS[2][1], dS[2][0] - dS[0][2], dS[0][1] - dS[1][0]};
  return -(s.e * s.hbar / (2.0 * s.m)) * curl;
}

Vec3 magnetization_density(const SpinorState& state, const Vec3& x, double t) {
  const PhysicalScales& s = state.scales();
  const CVec4 psi = state.evaluate(x, t);
  Vec3 S;
  for (int k = 1; k <= 3; ++k) S[k - 1] = sandwich(psi, g0_sigma(k), psi).real();
  return -(s.e * s.hbar / (2.0 * s.m * s.c)) * S;
}

Vec3 a_coupling_current(const SpinorState& state, const VectorField3& A, const Vec3& x,
                        double t) {
  const PhysicalScales& s = state.scales();
  const CVec4 psi = state.evaluate(x, t);
  const double rho0 = sandwich(psi, gamma::gamma(0), psi).real();
  return -(s.e * s.e / (s.m * s.c)) * rho0 * A(x);
}

GordonTermsAt gordon_terms(const SpinorState& state, const VectorField3& A, const Vec3& x,
                           double t) {
  const PhysicalScales& s = state.scales();
  const CVec4 psi = state.evaluate(x, t);
  const auto grad = state.gradient(x, t);
  const CVec4 dt_psi = state.time_derivative(x, t);

  GordonTermsAt out;
  for (int k = 1; k <= 3; ++k) {
    // d/dt (psi^dag gamma^k psi) = z - conj(z) with z = psi^dag gamma^k dt_psi
    // (gamma^k is anti-Hermitian), so the term is -(e hbar/mc) Im(z).
    const cplx zt = sandwich(psi, gamma::gamma(k), dt_psi);
    out.polarization[k - 1] = -(s.e * s.hbar / (s.m * s.c)) * zt.imag();
    const cplx zc = sandwich(psi, gamma::gamma(0), grad[k - 1]);
    out.convection[k - 1] = -(s.e * s.hbar / s.m) * zc.imag();
  }
  out.magnetization = magnetization_current(state, x, t);
  out.a_coupling = a_coupling_current(state, A, x, t);
  return out;
}

GordonTerms gordon_decomposition(const SpinorState& state, const VectorField3& A) {
  GordonTerms f;
  f.polarization = VectorField3(
      [state, A](const Vec3& x) { return gordon_terms(state, A, x).polarization; });
  f.convection = VectorField3(
      [state, A](const Vec3& x) { return gordon_terms(state, A, x).convection; });
  f.magnetization =
      VectorField3([state](const Vec3& x) { return magnetization_current(state, x); });
  f.a_coupling =
      VectorField3([state, A](const Vec3& x) { return a_coupling_current(state, A, x); });
  return f;
}

Vec3 gordon_residual(const SpinorState& state, const VectorField3& A, const Vec3& x,
                     double t) {
  return gordon_terms(state, A, x, t).sum() - state.current_density(x);
}

}  // namespace spinmoment
