#pragma once

#include <string>
#include <vector>

#include "spinmoment/fields.hpp"
#include "spinmoment/quadrature.hpp"
#include "spinmoment/states.hpp"

namespace spinmoment {

/// Self-field summary for one state. The potentials and energies assume a
/// frozen source (static approximation), which every report flags.
struct SelfFieldReport {
  VectorField3 A1;           // first-order self potential, G cm
  VectorField3 J1;           // first-order current correction, statC/(cm^2 s)
  double U_electric = 0.0;   // erg
  double U_magnetic = 0.0;   // erg
  double m_em = 0.0;         // g
  double electric_coefficient = 0.0;  // dimensionless constant in U_E = C e^2/d
  double magnetic_coefficient = 0.0;  // dimensionless constant in U_B = C e^2 hbar^2/(m^2 c^2 d^3)
  bool include_magnetic = false;
  bool static_approximation = true;
  bool width_warning = false;  // d below twice the Compton radius
  double d_over_compton = 0.0;

  std::string to_json() const;
};

/// true when d < 2 hbar/(m_e c), where the slow-variation assumptions degrade
bool narrow_width_warning(const PhysicalScales& s);

/// J_M of the Gaussian packet as an azimuthal profile about the spin axis:
/// (e hbar/m d^2)(pi d^2)^{-3/2} e^{-r^2/d^2} (x cross spin_dir).
AzimuthalField magnetization_current_profile(const SpinorState& state);

/// A_1(x) = (1/c) int J_M(y)/|x-y| d^3y in closed form via the Gaussian
/// dipole kernel; azimuthal about the spin axis.
AzimuthalField self_potential(const SpinorState& state);

/// Potential of an azimuthal current: exact radial collapse of the Coulomb
/// integral. Works for any profile with decay scale J.scale().
Vec3 vector_potential_from_current(const AzimuthalField& J, double c, const Vec3& x);
AzimuthalField vector_potential_profile(const AzimuthalField& J, double c);

/// Raw quadrature route for a generic decaying current: the 1/|x-y|
/// singularity is removed by integrating in spherical shells around x.
/// Independent of the closed-kernel path; used for cross-checks.
struct RawPotentialOptions {
  double length_scale = 1.0;  // decay scale of J, sets panel widths
  double tail = 12.0;         // radial range |x| + tail*length_scale
  int radial_nodes = 24;      // Gauss-Legendre nodes per panel
  int theta_nodes = 24;       // Gauss-Legendre nodes in cos(theta)
  int phi_nodes = 48;         // uniform azimuthal nodes
};
Vec3 vector_potential_from_current(const VectorField3& J, double c, const Vec3& x,
                                   const RawPotentialOptions& opt);

/// J_1(x) = -(e^2/mc) psi^dag gamma^0 psi A_1(x), with A_1 built from J_M
Vec3 first_order_current_correction(const SpinorState& state, const Vec3& x);
AzimuthalField first_order_current_profile(const SpinorState& state);

/// Iterated corrections J_1..J_n: each stage couples the density to the
/// potential of the previous stage's current. order > 3 is rejected (cost
/// guard); profiles are tabulated on a dense radial grid between stages.
std::vector<AzimuthalField> iterate_current_correction(const SpinorState& state, int order);

/// (1/2) int int rho(x) rho(y)/|x-y| = C_E e^2/d for the Gaussian packet
double electric_self_energy(const SpinorState& state, const quad::Options& opt = {});

/// (1/2c) int J_M . A_1 = (C_I/2) e^2 hbar^2/(m^2 c^2 d^3) for the packet
double magnetic_self_energy(const SpinorState& state, const quad::Options& opt = {});

/// (U_electric [+ U_magnetic]) / c^2
double electromagnetic_mass(const SpinorState& state, bool include_magnetic,
                            const quad::Options& opt = {});

SelfFieldReport self_field_report(const SpinorState& state, bool include_magnetic,
                                  const quad::Options& opt = {});

}  // namespace spinmoment
