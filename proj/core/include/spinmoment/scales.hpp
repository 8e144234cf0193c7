#pragma once

#include <map>
#include <string>

namespace spinmoment {

/// Gaussian-CGS inputs of every calculation. `m` is the mass parameter of the
/// wave equation; `m_e` is the observed electron mass used in the
/// renormalized prefactors. They coincide by default.
struct PhysicalScales {
  double e = 4.80320425e-10;      // elementary charge, statC (electron carries -e)
  double m = 9.1093837015e-28;    // wave-equation mass, g
  double m_e = 9.1093837015e-28;  // observed electron mass, g
  double c = 2.99792458e10;       // speed of light, cm/s
  double hbar = 1.054571817e-27;  // reduced Planck constant, erg s
  double d = 1.9307963386214169e-10;  // packet width, cm (default 5 Compton radii)

  /// fine-structure constant e^2/(hbar c)
  double alpha() const { return e * e / (hbar * c); }

  /// Compton radius hbar/(m_e c), the natural unit for d
  double compton_radius() const { return hbar / (m_e * c); }

  double d_over_compton() const { return d / compton_radius(); }

  /// throws std::domain_error if any entry is not positive and finite
  void validate() const;
};

/// e hbar / (2 m c), built from the wave-equation mass
double bohr_magneton(const PhysicalScales& s);

/// e hbar / (2 m_e c), built from the observed mass
double bohr_magneton_observed(const PhysicalScales& s);

/// magnitude of the moment including the leading radiative correction:
/// bohr_magneton * (1 + alpha/2pi)
double qed_first_order_moment(const PhysicalScales& s);

/// g such that mu = g (e/2mc) S. Throws std::invalid_argument when spin == 0.
double g_factor(const PhysicalScales& s, double mu_magnitude, double spin_magnitude);

/// Parse a key = value file ('#' starts a comment, blank lines skipped).
/// Throws std::runtime_error when the file cannot be read or a line is malformed.
std::map<std::string, std::string> load_key_value_file(const std::string& path);

/// Apply recognized keys (e, m, m_e, c, hbar, d, d_compton) to s.
/// Unknown keys are left for the caller. d_compton is applied after the
/// constants so it is interpreted with the configured m_e, c, hbar.
void apply_config(PhysicalScales& s, const std::map<std::string, std::string>& kv);

}  // namespace spinmoment
