#pragma once

#include <array>

#include "spinmoment/complexmat.hpp"
#include "spinmoment/scales.hpp"
#include "spinmoment/vec3.hpp"

namespace spinmoment {

/// The three pieces of the energy density (erg/cm^3): the mass term
/// psi^dag gamma^0 psi m c^2, the symmetrized gradient term
/// -(i hbar c/2)[psi^dag gamma^0 gamma . grad psi - (grad psi)^dag . gamma^0 gamma psi],
/// and the potential coupling e psi^dag gamma^0 gamma psi . A.
struct EnergyDensityTerms {
  double mass = 0.0;
  double gradient = 0.0;
  double coupling = 0.0;
  double total() const { return mass + gradient + coupling; }
};

/// Spin coherent 2-spinor (cos(theta/2), e^{i phi} sin(theta/2)) pointing
/// along the unit vector n; the continuous limit (0,1) is used at n = -z.
CVec2 spin_up_spinor(const Vec3& n);

/// Analytic four-spinor states in Dirac representation, Gaussian CGS.
///
/// Two families: a frozen Gaussian packet of width d whose lower components
/// vanish (normalized to 1), and positive-energy plane waves normalized per
/// unit volume, optionally in a uniform background potential A0 (phi = 0).
/// For the background family the spinor is the free one of the kinetic
/// momentum p while the phase carries the canonical momentum p - (e/c) A0,
/// which keeps the state an exact solution of the coupled equation.
class SpinorState {
 public:
  enum class Family { GaussianPacket, PlaneWave };

  static SpinorState gaussian_packet(const PhysicalScales& s, const Vec3& spin_dir);
  static SpinorState plane_wave(const PhysicalScales& s, const Vec3& momentum,
                                const Vec3& spin_dir);
  static SpinorState plane_wave_in_uniform_A(const PhysicalScales& s,
                                             const Vec3& kinetic_momentum,
                                             const Vec3& spin_dir, const Vec3& A0);

  Family family() const { return family_; }
  const PhysicalScales& scales() const { return scales_; }
  const Vec3& spin_direction() const { return spin_dir_; }
  const CVec2& spin_spinor() const { return xi_; }
  const Vec3& kinetic_momentum() const { return p_; }
  const Vec3& canonical_momentum() const { return q_; }
  const Vec3& background_potential() const { return A0_; }
  /// plane waves: sqrt(m^2 c^4 + c^2 p^2); packet: m c^2
  double energy() const { return energy_; }

  CVec4 evaluate(const Vec3& x, double t = 0.0) const;
  /// analytic spatial derivatives (d/dx, d/dy, d/dz)
  std::array<CVec4, 3> gradient(const Vec3& x, double t = 0.0) const;
  CVec4 time_derivative(const Vec3& x, double t = 0.0) const;

  double probability_density(const Vec3& x) const;  // psi^dag psi
  double charge_density(const Vec3& x) const;       // -e psi^dag psi
  Vec3 current_density(const Vec3& x) const;        // -e c psi^dag gamma^0 gamma psi

  EnergyDensityTerms energy_density(const Vec3& x, const Vec3& A, double t = 0.0) const;

  /// i hbar dpsi/dt - (-i hbar c gamma^0 gamma . grad + gamma^0 m c^2
  /// + e gamma^0 gamma . A0) psi at (x, t), with the state's own uniform A0
  /// (zero for the packet and free waves). Vanishes on exact solutions.
  CVec4 dirac_residual(const Vec3& x, double t = 0.0) const;

 private:
  SpinorState() = default;

  Family family_ = Family::GaussianPacket;
  PhysicalScales scales_;
  Vec3 spin_dir_{0, 0, 1};
  CVec2 xi_{};
  Vec3 p_{};       // kinetic momentum (plane waves)
  Vec3 q_{};       // canonical momentum entering the phase
  Vec3 A0_{};      // uniform background potential
  double energy_ = 0.0;
  CVec4 u_{};      // constant spinor factor (plane waves)
  double packet_norm_ = 0.0;  // (pi d^2)^{-3/4}
};

}  // namespace spinmoment
