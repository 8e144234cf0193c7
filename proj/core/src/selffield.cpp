#include "spinmoment/selffield.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "json.hpp"

namespace spinmoment {

namespace {

void require_packet(const SpinorState& state, const char* who) {
  if (state.family() != SpinorState::Family::GaussianPacket)
    throw std::invalid_argument(std::string(who) + ": requires the Gaussian packet family");
}

/// dense radial tabulation of a profile, linearly interpolated; zero past rmax
class TabulatedProfile {
 public:
  TabulatedProfile(const std::function<double(double)>& f, double rmax, int n)
      : rmax_(rmax), inv_h_((n - 1) / rmax) {
    values_.reserve(n);
    for (int i = 0; i < n; ++i) values_.push_back(f(rmax * i / (n - 1)));
  }

  double operator()(double r) const {
    if (r >= rmax_ || r < 0.0) return 0.0;
    const double u = r * inv_h_;
    const auto i = static_cast<std::size_t>(u);
    const double t = u - static_cast<double>(i);
    return values_[i] * (1.0 - t) + values_[i + 1] * t;
  }

 private:
  double rmax_;
  double inv_h_;
  std::vector<double> values_;
};

}  // namespace

bool narrow_width_warning(const PhysicalScales& s) {
  return s.d < 2.0 * s.compton_radius();
}

AzimuthalField magnetization_current_profile(const SpinorState& state) {
  require_packet(state, "magnetization_current_profile");
  const PhysicalScales s = state.scales();
  const double d2 = s.d * s.d;
  const double coeff = (s.e * s.hbar / (s.m * d2)) * std::pow(M_PI * d2, -1.5);
  return AzimuthalField([coeff, d2](double r) { return coeff * std::exp(-r * r / d2); },
                        state.spin_direction(), s.d);
}

AzimuthalField self_potential(const SpinorState& state) {
  require_packet(state, "self_potential");
  const PhysicalScales s = state.scales();
  const double d = s.d;
  const double coeff = (s.e * s.hbar / (s.m * s.c)) * std::pow(M_PI * d * d, -1.5);
  return AzimuthalField(
      [coeff, d](double r) { return coeff * quad::gaussian_dipole_kernel(r / d); },
      state.spin_direction(), d);
}

AzimuthalField vector_potential_profile(const AzimuthalField& J, double c) {
  const double L = J.scale();
  // int j(|y|) y/|x-y| d^3y = L^2 D(r/L) x with D the dipole convolution of
  // the rescaled profile; azimuthal structure is preserved.
  auto profile = [J, c, L](double r) {
    const double D = quad::dipole_convolution([&J, L](double u) { return J.profile(L * u); },
                                              r / L);
    return L * L * D / c;
  };
  return AzimuthalField(profile, J.axis(), L);
}

Vec3 vector_potential_from_current(const AzimuthalField& J, double c, const Vec3& x) {
  const double L = J.scale();
  const double r = norm(x);
  const double D = quad::dipole_convolution([&J, L](double u) { return J.profile(L * u); },
                                            r / L);
  return (L * L * D / c) * cross(x, J.axis());
}

Vec3 vector_potential_from_current(const VectorField3& J, double c, const Vec3& x,
                                   const RawPotentialOptions& opt) {
  if (!(opt.length_scale > 0.0) || !std::isfinite(opt.length_scale))
    throw std::invalid_argument("vector_potential_from_current: bad length_scale");
  // int J(y)/|x-y| d^3y = int_0^inf r dr int dOmega J(x + r omega): the
  // Jacobian cancels the singularity.
  const double rmax = norm(x) + opt.tail * opt.length_scale;
  const auto& th = quad::gauss_legendre(opt.theta_nodes);
  const auto& leg = quad::gauss_legendre(opt.radial_nodes);
  const int panels = std::max(1, static_cast<int>(std::ceil(rmax / opt.length_scale)));
  const double dphi = 2.0 * M_PI / opt.phi_nodes;

  Vec3 acc{};
  for (int p = 0; p < panels; ++p) {
    const double a = rmax * p / panels;
    const double b = rmax * (p + 1) / panels;
    for (std::size_t ir = 0; ir < leg.nodes.size(); ++ir) {
      const double r = 0.5 * (a + b) + 0.5 * (b - a) * leg.nodes[ir];
      const double wr = 0.5 * (b - a) * leg.weights[ir];
      Vec3 ang{};
      for (std::size_t it = 0; it < th.nodes.size(); ++it) {
        const double ct = th.nodes[it];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        Vec3 ring{};
        for (int ip = 0; ip < opt.phi_nodes; ++ip) {
          const double phi = dphi * ip;
          const Vec3 omega{st * std::cos(phi), st * std::sin(phi), ct};
          ring += J(x + r * omega);
        }
        ang += (th.weights[it] * dphi) * ring;
      }
      acc += (wr * r) * ang;
    }
  }
  return (1.0 / c) * acc;
}

AzimuthalField first_order_current_profile(const SpinorState& state) {
  require_packet(state, "first_order_current_profile");
  const PhysicalScales s = state.scales();
  const double d = s.d;
  const double rho_coeff = std::pow(M_PI * d * d, -1.5);  // psi^dag psi profile
  const double a_coeff = (s.e * s.hbar / (s.m * s.c)) * rho_coeff;
  const double coupling = -(s.e * s.e / (s.m * s.c));
  auto profile = [=](double r) {
    return coupling * rho_coeff * std::exp(-r * r / (d * d)) * a_coeff *
           quad::gaussian_dipole_kernel(r / d);
  };
  return AzimuthalField(profile, state.spin_direction(), d);
}

Vec3 first_order_current_correction(const SpinorState& state, const Vec3& x) {
  return first_order_current_profile(state)(x);
}

std::vector<AzimuthalField> iterate_current_correction(const SpinorState& state, int order) {
  require_packet(state, "iterate_current_correction");
  if (order < 1) throw std::invalid_argument("iterate_current_correction: order must be >= 1");
  if (order > 3)
    throw std::invalid_argument(
        "iterate_current_correction: order > 3 rejected (cost guard; each stage nests "
        "another radial convolution)");

  const PhysicalScales s = state.scales();
  const double d = s.d;
  const double rho_coeff = std::pow(M_PI * d * d, -1.5);
  const double coupling = -(s.e * s.e / (s.m * s.c));
  constexpr double kTail = 14.0;   // profile support in units of d
  constexpr int kSamples = 2048;   // radial tabulation between stages

  std::vector<AzimuthalField> stages;
  AzimuthalField current = magnetization_current_profile(state);
  for (int k = 1; k <= order; ++k) {
    const AzimuthalField potential = vector_potential_profile(current, s.c);
    auto next_profile = [=](double r) {
      return coupling * rho_coeff * std::exp(-r * r / (d * d)) * potential.profile(r);
    };
    // tabulate so later stages do not re-evaluate the nested convolution
    auto tab = std::make_shared<TabulatedProfile>(next_profile, kTail * d, kSamples);
    AzimuthalField stage([tab](double r) { return (*tab)(r); }, state.spin_direction(), d);
    stages.push_back(stage);
    current = stage;
  }
  return stages;
}

double electric_self_energy(const SpinorState& state, const quad::Options& opt) {
  require_packet(state, "electric_self_energy");
  const PhysicalScales s = state.scales();
  // (1/2) int int rho rho'/|x-y| rescales exactly to C_E e^2/d
  return quad::electric_constant(opt).value * s.e * s.e / s.d;
}

double magnetic_self_energy(const SpinorState& state, const quad::Options& opt) {
  require_packet(state, "magnetic_self_energy");
  const PhysicalScales s = state.scales();
  // (1/2c) int J_M . A_1 rescales exactly to (C_I/2) e^2 hbar^2/(m^2 c^2 d^3)
  const double unit = s.e * s.e * s.hbar * s.hbar / (s.m * s.m * s.c * s.c * s.d * s.d * s.d);
  return 0.5 * quad::interaction_constant(opt).value * unit;
}

double electromagnetic_mass(const SpinorState& state, bool include_magnetic,
                            const quad::Options& opt) {
  double u = electric_self_energy(state, opt);
  if (include_magnetic) u += magnetic_self_energy(state, opt);
  return u / (state.scales().c * state.scales().c);
}

SelfFieldReport self_field_report(const SpinorState& state, bool include_magnetic,
                                  const quad::Options& opt) {
  const PhysicalScales s = state.scales();
  SelfFieldReport r;
  r.A1 = self_potential(state).as_field();
  r.J1 = first_order_current_profile(state).as_field();
  r.electric_coefficient = quad::electric_constant(opt).value;
  r.magnetic_coefficient = 0.5 * quad::interaction_constant(opt).value;
  r.U_electric = r.electric_coefficient * s.e * s.e / s.d;
  r.U_magnetic = r.magnetic_coefficient * s.e * s.e * s.hbar * s.hbar /
                 (s.m * s.m * s.c * s.c * s.d * s.d * s.d);
  r.include_magnetic = include_magnetic;
  r.m_em = (r.U_electric + (include_magnetic ? r.U_magnetic : 0.0)) / (s.c * s.c);
  r.width_warning = narrow_width_warning(s);
  r.d_over_compton = s.d_over_compton();
  return r;
}

std::string SelfFieldReport::to_json() const {
  nlohmann::ordered_json j;
  j["U_electric_erg"] = U_electric;
  j["U_magnetic_erg"] = U_magnetic;
  j["m_em_g"] = m_em;
  j["electric_coefficient"] = electric_coefficient;
  j["magnetic_coefficient"] = magnetic_coefficient;
  j["include_magnetic"] = include_magnetic;
  j["static_approximation"] = static_approximation;
  j["width_warning"] = width_warning;
  j["d_over_compton"] = d_over_compton;
  return j.dump(2);
}

}  // namespace spinmoment
