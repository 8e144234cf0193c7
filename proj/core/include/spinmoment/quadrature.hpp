#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "spinmoment/vec3.hpp"

namespace spinmoment::quad {

enum class Method { Deterministic, MonteCarlo };

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr std::uint64_t kDefaultMcBudget = 10'000'000;
inline constexpr int kDefaultNodesPerAxis = 64;  // deterministic default, 64^3 grid

struct Options {
  Method method = Method::Deterministic;
  std::uint64_t budget = 0;  // 0 = per-method default (64^3 nodes / 1e7 samples)
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;  // chunk partial sums are combined in index order regardless
};

/// `std_error` is the standard error of the mean for Monte Carlo results and a
/// grid-refinement estimate (|full grid - half grid|) for deterministic ones.
struct QuadratureResult {
  double value = 0.0;
  double std_error = 0.0;
  Method method = Method::Deterministic;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------- 1D rules

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule: sum w_i f(x_i) ~ int e^{-t^2} f(t) dt. n <= 196.
const Rule1D& gauss_hermite(int n);

/// Gauss-Legendre rule on [-1,1]. n <= 196.
const Rule1D& gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a,b].
Rule1D gauss_legendre_ab(int n, double a, double b);

/// Composite Gauss-Legendre over [a,b] split into panels of width <= max_panel.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel = 1.0, int nodes_per_panel = 24);

// ------------------------------------------------------------ 3D integrals

/// Integral of f over R^3. Deterministic: tensor Gauss-Hermite (budget =
/// total node count, nodes per axis = cbrt). Monte Carlo: importance sampling
/// from the unit Gaussian exp(-|x|^2). Both require f to decay like a
/// Gaussian; coordinates are expected to be pre-scaled so the decay width
/// is O(1).
QuadratureResult integrate_3d(const std::function<double(const Vec3&)>& f,
                              const Options& opt = {});

// --------------------------------------------------- Coulomb convolutions

/// int g(|y|)/|x-y| d^3y for spherically symmetric g, evaluated at |x| = r.
/// Shell reduction: (4pi/r) int_0^r g s^2 ds + 4pi int_r^inf g s ds.
double coulomb_convolution(const std::function<double(double)>& g, double r,
                           double tail_cut = 12.0);

/// D(r) such that int g(|y|) y /|x-y| d^3y = D(|x|) x for spherically
/// symmetric g: D(r) = (4pi/3) [ r^-3 int_0^r g s^4 ds + int_r^inf g s ds ].
double dipole_convolution(const std::function<double(double)>& g, double r,
                          double tail_cut = 12.0);

/// Closed forms of the two kernels for the unit-width Gaussian g = e^{-s^2}:
/// pi^{3/2} erf(r)/r (value 2 pi at r = 0) and
/// pi [ (sqrt(pi)/2) erf(r)/r^3 - e^{-r^2}/r^2 ] (value 2 pi/3 at r = 0).
/// Series expansions are used at small r to avoid cancellation.
double gaussian_coulomb_kernel(double r);
double gaussian_dipole_kernel(double r);

// ------------------------------------------------------------ 6D integrals

struct KernelMonomial {
  double coeff = 1.0;
  std::array<int, 3> xpow{0, 0, 0};
  std::array<int, 3> ypow{0, 0, 0};
};

/// I = int int e^{-|x|^2} e^{-|y|^2} K(x,y) / |x-y| d^3x d^3y with K a
/// polynomial given as a list of monomials. Total degree above 4 is rejected.
struct CoulombPairIntegrand {
  std::vector<KernelMonomial> kernel;
  void validate() const;  // throws std::invalid_argument
};

/// Deterministic path: the inner integral is collapsed analytically with the
/// Gaussian Coulomb/dipole kernels (monomials must be at most linear in one
/// of the two arguments; higher ones are rejected with instructions to use
/// Monte Carlo), leaving a 3D tensor Gauss-Hermite integral.
/// Monte Carlo path: importance sampling from the two Gaussians; sample pairs
/// closer than 1e-12 are redrawn; chunked fixed-order reduction.
QuadratureResult integrate_6d_coulomb(const CoulombPairIntegrand& integrand,
                                      const Options& opt = {});

// ------------------------------------------- packet interaction constants

/// C_E: (1/2pi^3) int int e^{-|x|^2-|y|^2}/|x-y|; electrostatic constant of
/// the unit Gaussian packet (closed form 1/sqrt(2 pi)).
QuadratureResult electric_constant(const Options& opt = {});

/// C_I: (1/pi^3) int int e^{-|x|^2-|y|^2}(x1 y1 + x2 y2)/|x-y|; the
/// circulating-current interaction constant (closed form sqrt(2/pi)/6).
QuadratureResult interaction_constant(const Options& opt = {});

/// C_B = C_I/4; magnetic self-energy constant.
QuadratureResult magnetic_constant(const Options& opt = {});

}  // namespace spinmoment::quad
