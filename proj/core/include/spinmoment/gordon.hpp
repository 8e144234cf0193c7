#pragma once

#include "spinmoment/fields.hpp"
#include "spinmoment/states.hpp"
#include "spinmoment/vec3.hpp"

namespace spinmoment {

/// The four pieces of the decomposed Dirac current at one point,
/// statC/(cm^2 s). For exact solutions their sum equals current_density;
/// for the frozen packet the mismatch is reported, not asserted away.
struct GordonTermsAt {
  Vec3 polarization;   // (i e hbar/2mc) d/dt (psi^dag gamma psi)
  Vec3 convection;     // (i e hbar/2m) [psi^dag gamma^0 grad psi - h.c.]
  Vec3 magnetization;  // -(e hbar/2m) curl (psi^dag gamma^0 sigma psi)
  Vec3 a_coupling;     // -(e^2/mc) psi^dag gamma^0 psi A
  Vec3 sum() const { return polarization + convection + magnetization + a_coupling; }
};

/// The same four pieces as whole fields, bound to a state and a potential.
struct GordonTerms {
  VectorField3 polarization;
  VectorField3 convection;
  VectorField3 magnetization;
  VectorField3 a_coupling;
};

/// -(e hbar/2m) curl(psi^dag gamma^0 sigma psi), evaluated analytically.
Vec3 magnetization_current(const SpinorState& state, const Vec3& x, double t = 0.0);

/// Magnetic moment density M = -(e hbar/2mc) psi^dag gamma^0 sigma psi
/// (erg/(G cm^3)); satisfies magnetization_current = c curl M.
Vec3 magnetization_density(const SpinorState& state, const Vec3& x, double t = 0.0);

/// -(e^2/mc) psi^dag gamma^0 psi A(x)
Vec3 a_coupling_current(const SpinorState& state, const VectorField3& A, const Vec3& x,
                        double t = 0.0);

GordonTermsAt gordon_terms(const SpinorState& state, const VectorField3& A, const Vec3& x,
                           double t = 0.0);
GordonTerms gordon_decomposition(const SpinorState& state, const VectorField3& A);

/// sum of the four terms minus current_density at x; zero on exact solutions
Vec3 gordon_residual(const SpinorState& state, const VectorField3& A, const Vec3& x,
                     double t = 0.0);

}  // namespace spinmoment
