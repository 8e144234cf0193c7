#pragma once

#include <array>
#include <string>

#include "spinmoment/fields.hpp"
#include "spinmoment/quadrature.hpp"
#include "spinmoment/selffield.hpp"
#include "spinmoment/states.hpp"

namespace spinmoment {

/// Two-component analytic states for the non-relativistic reduction:
/// the normalized Gaussian packet and plane waves (phi = 0 throughout;
/// external potentials are uniform-B vector potentials A = B cross x / 2).
class PauliState {
 public:
  enum class Family { Gaussian, PlaneWave };

  static PauliState gaussian(const PhysicalScales& s, const Vec3& spin_dir);
  static PauliState plane_wave(const PhysicalScales& s, const Vec3& momentum,
                               const Vec3& spin_dir);
  /// upper components of a packet SpinorState
  static PauliState from(const SpinorState& state);

  Family family() const { return family_; }
  const PhysicalScales& scales() const { return scales_; }
  const Vec3& spin_direction() const { return spin_dir_; }
  const Vec3& momentum() const { return p_; }

  CVec2 chi(const Vec3& x) const;
  std::array<CVec2, 3> grad_chi(const Vec3& x) const;
  CVec2 laplacian_chi(const Vec3& x) const;

 private:
  PauliState() = default;
  Family family_ = Family::Gaussian;
  PhysicalScales scales_;
  Vec3 spin_dir_{0, 0, 1};
  CVec2 xi_{};
  Vec3 p_{};
  double packet_norm_ = 0.0;
};

/// (-i hbar c sigma . grad + e sigma . A) chi / (2 m c^2)
CVec2 lower_from_upper(const PauliState& state, const VectorField3& A, const Vec3& x);

/// L2 norm ratio ||chi_l|| / ||chi_u|| with A = 0; equals
/// (hbar/2mcd) sqrt(3/2) for the Gaussian and scales as 1/d.
double lower_upper_norm_ratio(const PauliState& state, const quad::Options& opt = {});

/// (H chi)(x) for H = (-i hbar grad + (e/c) A)^2 / 2m + (e hbar/2mc)
/// sigma . B with uniform B and A = B cross x / 2, phi = 0.
CVec2 apply_hamiltonian(const PauliState& state, const Vec3& B_ext, const Vec3& x);

/// L2 norm of (H - E_eff) chi. The Gaussian is not an eigenstate; the
/// residual is a consistency report, not an assertion target. Plane-wave
/// residuals are spatially uniform, so their pointwise magnitude is
/// reported instead of a diverging volume norm.
double pauli_residual(const PauliState& state, const Vec3& B_ext, double E_eff,
                      const quad::Options& opt = {});

/// L2 norm of H chi (for residual ratios) and the expectation <H>.
double hamiltonian_norm(const PauliState& state, const Vec3& B_ext,
                        const quad::Options& opt = {});
double hamiltonian_expectation(const PauliState& state, const Vec3& B_ext,
                               const quad::Options& opt = {});

/// (e hbar/2mc) int chi^dag sigma chi . B_ext d^3x (erg); the moment read
/// off against U = -m.B
double sigma_B_expectation(const PauliState& state, const Vec3& B_ext,
                           const quad::Options& opt = {});

/// Raw-quadrature evaluation of the A_ext . A_self cross term read off as a
/// moment: -(e^2/2mc^3) int int chi^dag chi(x) [x cross J_M(y)]/|x-y|.
/// Shares no kernel code with the closed-form route in module moments.
struct CrossTermQuadrature {
  double outer_extent = 8.0;  // outer radial range, units of d
  int outer_nodes = 24;       // nodes per unit-d outer panel
  // raw potential of J_M at each outer radius; length_scale <= 0 derives it
  // (and the defaults below are tuned) from the packet width
  RawPotentialOptions inner{0.0, 6.0, 16, 16, 24};
};

Vec3 cross_term_moment(const SpinorState& state, const CrossTermQuadrature& q = {});

/// Method-1 vs Method-2 comparison serialized to JSON.
std::string equivalence_report_json(const SpinorState& state,
                                    const quad::Options& opt = {},
                                    const CrossTermQuadrature& q = {});

}  // namespace spinmoment
