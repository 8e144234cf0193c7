#include "spinmoment/states.hpp"

#include <cmath>
#include <stdexcept>

#include "spinmoment/gamma.hpp"

namespace spinmoment {

namespace {

constexpr cplx kI{0.0, 1.0};

CVec4 scaled4(const CVec4& v, cplx s) {
  return {v[0] * s, v[1] * s, v[2] * s, v[3] * s};
}

}  // namespace

CVec2 spin_up_spinor(const Vec3& n_in) {
  const Vec3 n = normalized(n_in);
  if (norm(n_in) == 0.0) throw std::invalid_argument("spin_up_spinor: zero direction");
  if (n.z < -1.0 + 1e-14) return {cplx{0.0, 0.0}, cplx{1.0, 0.0}};
  const double theta = std::acos(std::min(1.0, std::max(-1.0, n.z)));
  const double phi = std::atan2(n.y, n.x);
  return {cplx{std::cos(theta / 2), 0.0},
          std::exp(kI * phi) * std::sin(theta / 2)};
}

SpinorState SpinorState::gaussian_packet(const PhysicalScales& s, const Vec3& spin_dir) {
  s.validate();
  SpinorState st;
  st.family_ = Family::GaussianPacket;
  st.scales_ = s;
  st.spin_dir_ = normalized(spin_dir);
  st.xi_ = spin_up_spinor(spin_dir);
  st.energy_ = s.m * s.c * s.c;
  st.packet_norm_ = std::pow(M_PI * s.d * s.d, -0.75);
  st.u_ = {st.xi_[0], st.xi_[1], cplx{}, cplx{}};
  return st;
}

SpinorState SpinorState::plane_wave_in_uniform_A(const PhysicalScales& s,
                                                 const Vec3& kinetic_momentum,
                                                 const Vec3& spin_dir, const Vec3& A0) {
  s.validate();
  SpinorState st;
  st.family_ = Family::PlaneWave;
  st.scales_ = s;
  st.spin_dir_ = normalized(spin_dir);
  st.xi_ = spin_up_spinor(spin_dir);
  st.p_ = kinetic_momentum;
  st.A0_ = A0;
  st.q_ = kinetic_momentum - (s.e / s.c) * A0;

  const double mc2 = s.m * s.c * s.c;
  const double e_tot = std::sqrt(mc2 * mc2 + s.c * s.c * norm2(st.p_));
  st.energy_ = e_tot;

  // positive-energy spinor of the kinetic momentum, u^dag u = 1
  const double amp = std::sqrt((e_tot + mc2) / (2.0 * e_tot));
  const CMat2 sp = gamma::pauli_dot((s.c / (e_tot + mc2)) * st.p_);
  const CVec2 lower = sp.apply(st.xi_);
  st.u_ = {amp * st.xi_[0], amp * st.xi_[1], amp * lower[0], amp * lower[1]};
  return st;
}

SpinorState SpinorState::plane_wave(const PhysicalScales& s, const Vec3& momentum,
                                    const Vec3& spin_dir) {
  return plane_wave_in_uniform_A(s, momentum, spin_dir, Vec3{});
}

CVec4 SpinorState::evaluate(const Vec3& x, double t) const {
  if (family_ == Family::GaussianPacket) {
    const double g = packet_norm_ * std::exp(-norm2(x) / (2.0 * scales_.d * scales_.d));
    return scaled4(u_, g);
  }
  const cplx phase = std::exp(kI * ((dot(q_, x) - energy_ * t) / scales_.hbar));
  return scaled4(u_, phase);
}

std::array<CVec4, 3> SpinorState::gradient(const Vec3& x, double t) const {
  const CVec4 psi = evaluate(x, t);
  std::array<CVec4, 3> g;
  if (family_ == Family::GaussianPacket) {
    const double inv_d2 = 1.0 / (scales_.d * scales_.d);
    for (int k = 0; k < 3; ++k) g[k] = scaled4(psi, -x[k] * inv_d2);
  } else {
    for (int k = 0; k < 3; ++k) g[k] = scaled4(psi, kI * q_[k] / scales_.hbar);
  }
  return g;
}

CVec4 SpinorState::time_derivative(const Vec3& x, double t) const {
  if (family_ == Family::GaussianPacket) return {};
  return scaled4(evaluate(x, t), -kI * energy_ / scales_.hbar);
}

double SpinorState::probability_density(const Vec3& x) const {
  const CVec4 psi = evaluate(x);
  return norm2(psi);
}

double SpinorState::charge_density(const Vec3& x) const {
  return -scales_.e * probability_density(x);
}

Vec3 SpinorState::current_density(const Vec3& x) const {
  const CVec4 psi = evaluate(x);
  Vec3 j;
  for (int k = 0; k < 3; ++k)
    j[k] = -scales_.e * scales_.c * sandwich(psi, gamma::gamma0_gamma(k + 1), psi).real();
  return j;
}

EnergyDensityTerms SpinorState::energy_density(const Vec3& x, const Vec3& A, double t) const {
  const CVec4 psi = evaluate(x, t);
  const auto grad = gradient(x, t);

  EnergyDensityTerms out;
  out.mass = scales_.m * scales_.c * scales_.c * sandwich(psi, gamma::gamma(0), psi).real();

  cplx s{};
  for (int k = 0; k < 3; ++k) s += sandwich(psi, gamma::gamma0_gamma(k + 1), grad[k]);
  // -(i hbar c/2)(s - conj(s)) = hbar c Im(s)
  out.gradient = scales_.hbar * scales_.c * s.imag();

  for (int k = 0; k < 3; ++k)
    out.coupling += scales_.e * A[k] * sandwich(psi, gamma::gamma0_gamma(k + 1), psi).real();
  return out;
}

CVec4 SpinorState::dirac_residual(const Vec3& x, double t) const {
  const cplx ihbar = kI * scales_.hbar;
  const CVec4 dt = time_derivative(x, t);
  const CVec4 psi = evaluate(x, t);
  const auto grad = gradient(x, t);

  CVec4 h{};
  for (int i = 0; i < 4; ++i) h[i] = ihbar * dt[i];

  const double mc2 = scales_.m * scales_.c * scales_.c;
  const CVec4 mass = gamma::gamma(0).apply(psi);
  for (int k = 0; k < 3; ++k) {
    const CVec4 gk = gamma::gamma0_gamma(k + 1).apply(grad[k]);
    const CVec4 ak = gamma::gamma0_gamma(k + 1).apply(psi);
    for (int i = 0; i < 4; ++i) {
      h[i] += kI * scales_.hbar * scales_.c * gk[i];  // -(-i hbar c) grad term
      h[i] -= scales_.e * A0_[k] * ak[i];
    }
  }
  for (int i = 0; i < 4; ++i) h[i] -= mc2 * mass[i];
  return h;
}

}  // namespace spinmoment
