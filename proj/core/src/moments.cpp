#include "spinmoment/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "spinmoment/selffield.hpp"

namespace spinmoment {

namespace {

Vec3 moment_direction(const SpinorState& state) { return state.spin_direction(); }

}  // namespace

void SphereSpec::validate() const {
  if (!(R > 0.0) || !std::isfinite(R)) throw std::domain_error("SphereSpec: R must be > 0");
  if (!std::isfinite(omega)) throw std::domain_error("SphereSpec: omega must be finite");
  if (!std::isfinite(Q)) throw std::domain_error("SphereSpec: Q must be finite");
}

VectorField3 SphereSpec::current() const {
  validate();
  const double rho0 = 3.0 * Q / (4.0 * M_PI * R * R * R);
  const double R2 = R * R;
  const double om = omega;
  return VectorField3([rho0, om, R2](const Vec3& x) {
    if (norm2(x) >= R2) return Vec3{};
    return rho0 * om * cross(Vec3{0, 0, 1}, x);
  });
}

Vec3 SphereSpec::closed_form_moment(double c) const {
  return {0.0, 0.0, Q * omega * R * R / (5.0 * c)};
}

Vec3 magnetic_moment_from_current(const VectorField3& J, double c, double length_scale,
                                  const quad::Options& opt) {
  if (!(length_scale > 0.0) || !std::isfinite(length_scale))
    throw std::invalid_argument("magnetic_moment_from_current: bad length_scale");

  const double L = length_scale;
  Vec3 m;
  double err2 = 0.0;
  for (int k = 0; k < 3; ++k) {
    auto f = [&J, L, k](const Vec3& u) {
      const Vec3 x = L * u;
      return cross(x, J(x))[k];
    };
    const quad::QuadratureResult r = quad::integrate_3d(f, opt);
    m[k] = r.value * L * L * L / (2.0 * c);
    const double e = r.std_error * L * L * L / (2.0 * c);
    err2 += e * e;
  }
  const double err = std::sqrt(err2);
  if (err > 0.1 * std::max(norm(m), 1e-300))
    throw std::runtime_error(
        "magnetic_moment_from_current: integral did not converge within the budget; "
        "the current may not decay");
  return m;
}

Vec3 magnetic_moment_from_current(const AzimuthalField& J, double c) {
  const double L = J.scale();
  // m = (1/2c) int x cross f(r)(x cross axis) = -(4pi/3c) int f r^4 dr * axis
  const double radial = quad::integrate_panels(
      [&J, L](double u) {
        const double r = L * u;
        return J.profile(r) * r * r * r * r;
      },
      0.0, 12.0);
  return (-(4.0 * M_PI / 3.0) * L * radial / c) * J.axis();
}

Vec3 magnetic_moment_from_current(const SphereSpec& sphere, double c, int radial_nodes,
                                  int theta_nodes, int phi_nodes) {
  sphere.validate();
  const VectorField3 J = sphere.current();
  const quad::Rule1D rad = quad::gauss_legendre_ab(radial_nodes, 0.0, sphere.R);
  const auto& th = quad::gauss_legendre(theta_nodes);
  const double dphi = 2.0 * M_PI / phi_nodes;

  Vec3 m{};
  for (std::size_t ir = 0; ir < rad.nodes.size(); ++ir) {
    const double r = rad.nodes[ir];
    for (std::size_t it = 0; it < th.nodes.size(); ++it) {
      const double ct = th.nodes[it];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int ip = 0; ip < phi_nodes; ++ip) {
        const double phi = dphi * ip;
        const Vec3 x{r * st * std::cos(phi), r * st * std::sin(phi), r * ct};
        m += (rad.weights[ir] * th.weights[it] * dphi * r * r) * cross(x, J(x));
      }
    }
  }
  return m / (2.0 * c);
}

Vec3 first_order_si_moment(const SpinorState& state, const quad::Options& opt) {
  if (state.family() != SpinorState::Family::GaussianPacket)
    throw std::invalid_argument("first_order_si_moment: requires the Gaussian packet family");
  const PhysicalScales s = state.scales();
  const double unit = s.e * s.e * s.e * s.hbar / (s.m * s.m * s.c * s.c * s.c * s.d);

  if (opt.method == quad::Method::MonteCarlo)
    return (0.5 * quad::interaction_constant(opt).value * unit) * moment_direction(state);

  // moment of J_1 = -(e^2/mc) rho A_1 with the closed-form potential: the
  // radial collapse leaves (8 pi/3 pi^3) int e^{-u^2} K_d(u) u^4 du = C_I
  const double c_i = (8.0 * M_PI / 3.0) / (M_PI * M_PI * M_PI) *
                     quad::integrate_panels(
                         [](double u) {
                           return std::exp(-u * u) * quad::gaussian_dipole_kernel(u) * u * u *
                                  u * u;
                         },
                         0.0, 12.0);
  return (0.5 * c_i * unit) * moment_direction(state);
}

Vec3 mass_renorm_moment_correction(const SpinorState& state, const quad::Options& opt) {
  if (state.family() != SpinorState::Family::GaussianPacket)
    throw std::invalid_argument(
        "mass_renorm_moment_correction: requires the Gaussian packet family");
  const PhysicalScales s = state.scales();
  const double m_em = electromagnetic_mass(state, false, opt);
  const double ratio = m_em / s.m_e;
  if (!(ratio < 0.1))
    throw std::domain_error(
        "mass_renorm_moment_correction: m_em/m_e = " + std::to_string(ratio) +
        " exceeds the Taylor validity bound 0.1");
  // strengthens the Dirac moment: parallel to m0 = -mu_B * spin_dir
  return (s.e * s.hbar * m_em / (2.0 * s.m_e * s.m_e * s.c)) * (-moment_direction(state));
}

MomentBreakdown total_moment(const SpinorState& state, Convention convention,
                             const quad::Options& opt) {
  if (state.family() != SpinorState::Family::GaussianPacket)
    throw std::invalid_argument("total_moment: requires the Gaussian packet family");
  const PhysicalScales s = state.scales();
  const Vec3 n = moment_direction(state);

  MomentBreakdown b;
  b.convention = convention;
  b.d_over_compton = s.d_over_compton();
  b.width_warning = narrow_width_warning(s);
  b.m0 = magnetic_moment_from_current(magnetization_current_profile(state), s.c);

  if (convention == Convention::PaperAsPublished) {
    const double unit =
        s.e * s.e * s.e * s.hbar / (2.0 * s.m_e * s.m_e * s.c * s.c * s.c * s.d);
    b.m1_selfinteraction = (0.071 * unit) * n;
    b.m_massrenorm = (0.403 * unit) * (-n);
  } else {
    b.m1_selfinteraction = first_order_si_moment(state, opt);
    b.m_massrenorm = mass_renorm_moment_correction(state, opt);
  }
  b.total = b.m0 + b.m1_selfinteraction + b.m_massrenorm;
  b.mu_over_muB = norm(b.total) / bohr_magneton_observed(s);
  return b;
}

WidthSolve solve_matching_width(Convention convention, const PhysicalScales& base,
                                const quad::Options& opt, double target_anomaly,
                                double tol_compton) {
  PhysicalScales s = base;
  s.validate();
  const double lc = s.compton_radius();
  const double target = target_anomaly >= 0.0 ? target_anomaly : s.alpha() / (2.0 * M_PI);

  auto anomaly_at = [&](double d_compton) {
    PhysicalScales trial = s;
    trial.d = d_compton * lc;
    const SpinorState state = SpinorState::gaussian_packet(trial, Vec3{0, 0, 1});
    return total_moment(state, convention, opt).mu_over_muB - 1.0 - target;
  };

  double a = 0.1, b = 100.0;
  double fa = anomaly_at(a), fb = anomaly_at(b);
  if (fa * fb > 0.0)
    throw std::runtime_error(
        "solve_matching_width: no sign change in the bracket [0.1, 100] Compton radii");

  WidthSolve out;
  out.target_anomaly = target;
  while (b - a > tol_compton) {
    const double mid = 0.5 * (a + b);
    const double fm = anomaly_at(mid);
    ++out.iterations;
    if (fa * fm <= 0.0) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
  }
  out.d_star_compton = 0.5 * (a + b);
  out.width_warning = out.d_star_compton < 2.0;
  return out;
}

std::string MomentBreakdown::to_json() const {
  nlohmann::ordered_json j;
  auto vec = [](const Vec3& v) { return nlohmann::ordered_json::array({v.x, v.y, v.z}); };
  j["convention"] =
      convention == Convention::PaperAsPublished ? "PaperAsPublished" : "OracleResolved";
  j["d_over_compton"] = d_over_compton;
  j["m0_erg_per_G"] = vec(m0);
  j["m1_selfinteraction_erg_per_G"] = vec(m1_selfinteraction);
  j["m_massrenorm_erg_per_G"] = vec(m_massrenorm);
  j["total_erg_per_G"] = vec(total);
  j["mu_over_muB"] = mu_over_muB;
  j["width_warning"] = width_warning;
  return j.dump(2);
}

}  // namespace spinmoment
