#pragma once

#include "spinmoment/complexmat.hpp"
#include "spinmoment/vec3.hpp"

namespace spinmoment::gamma {

/// Metric signature (+,-,-,-).
double eta(int mu, int nu);

/// Pauli matrix sigma_k, k in {1,2,3}.
const CMat2& pauli(int k);

/// Dirac-representation gamma^mu, mu in {0,1,2,3}:
/// gamma^0 = diag(I, -I), gamma^k = [[0, sigma_k], [-sigma_k, 0]].
const CMat4& gamma(int mu);

/// 4x4 spin matrix sigma^k = diag(sigma_k, sigma_k); equals i gamma^i gamma^j
/// for (i,j,k) a cyclic permutation of (1,2,3).
const CMat4& spin(int k);

/// gamma^0 gamma^k, the velocity-type matrices entering the current density.
const CMat4& gamma0_gamma(int k);

/// sigma . a on two components
CMat2 pauli_dot(const Vec3& a);

/// 4x4 spin matrix contracted with a vector
CMat4 spin_dot(const Vec3& a);

}  // namespace spinmoment::gamma
