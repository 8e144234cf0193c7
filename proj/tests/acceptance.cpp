// Acceptance gate: one self-contained check per numbered criterion.
// Run with no arguments for the full battery or with an index (1..11)
// for a single criterion. Prints one PASS/FAIL line per criterion and
// exits nonzero if any executed criterion fails.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "goldens.hpp"
#include "spinmoment/gordon.hpp"
#include "spinmoment/moments.hpp"
#include "spinmoment/pauli.hpp"
#include "spinmoment/quadrature.hpp"
#include "spinmoment/selffield.hpp"
#include "spinmoment/states.hpp"

using namespace spinmoment;

namespace {

double unit_uniform(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}
double uniform(std::mt19937_64& g, double a, double b) {
  return a + (b - a) * unit_uniform(g);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

SpinorState packet_at(double d_compton, const Vec3& n = Vec3{0, 0, 1}) {
  PhysicalScales s;
  s.d = d_compton * s.compton_radius();
  return SpinorState::gaussian_packet(s, n);
}

bool identical(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

// 1. rotating-sphere oracle against Q omega R^2/(5c)
bool c01_sphere(std::string& detail) {
  PhysicalScales s;
  double worst = 0.0;
  for (const SphereSpec spec : {SphereSpec{1.0, 1.0, 1.0}, SphereSpec{-2.5, 0.7, 3.0}}) {
    const Vec3 numeric = magnetic_moment_from_current(spec, s.c);
    const Vec3 closed = spec.closed_form_moment(s.c);
    worst = std::max(worst, norm(numeric - closed) / norm(closed));
  }
  detail = "max relative error " + fmt(worst);
  return worst <= 1e-6;
}

// 2. magnetization-current moment is -mu_B z-hat at every width
bool c02_dirac_moment(std::string& detail) {
  PhysicalScales s;
  const double muB = bohr_magneton(s);
  double worst = 0.0;
  for (const double dc : {2.0, 10.0}) {
    const SpinorState packet = packet_at(dc);
    const Vec3 m =
        magnetic_moment_from_current(magnetization_current_profile(packet), s.c);
    worst = std::max(worst, norm(m - Vec3{0.0, 0.0, -muB}) / muB);
  }
  detail = "max relative error " + fmt(worst) + " at widths 2 and 10";
  return worst <= 1e-6;
}

// 3. deterministic and Monte Carlo engines agree on C_E, C_I, C_B
bool c03_dual_engine(std::string& detail) {
  quad::Options det;
  quad::Options mc;
  mc.method = quad::Method::MonteCarlo;
  mc.budget = 10000000;
  mc.threads = 4;

  struct Row {
    const char* name;
    quad::QuadratureResult a, b;
    double closed;
  };
  const Row rows[] = {
      {"C_E", quad::electric_constant(det), quad::electric_constant(mc),
       goldens::kElectric},
      {"C_I", quad::interaction_constant(det), quad::interaction_constant(mc),
       goldens::kInteraction},
      {"C_B", quad::magnetic_constant(det), quad::magnetic_constant(mc),
       goldens::kMagnetic},
  };
  double max_sigmas = 0.0, max_abs = 0.0;
  for (const Row& r : rows) {
    const double combined = std::hypot(r.a.std_error, r.b.std_error);
    max_sigmas = std::max(max_sigmas, std::abs(r.a.value - r.b.value) / combined);
    max_abs = std::max(max_abs, std::abs(r.b.value - r.closed));
  }
  detail = "max disagreement " + fmt(max_sigmas) + " sigma, max MC error " +
           fmt(max_abs) + " at 1e7 samples";
  return max_sigmas <= 3.0 && max_abs <= 1e-3;
}

// 4. loose audit of the published coefficients
bool c04_published_audit(std::string& detail) {
  PhysicalScales s;
  const double ce = quad::electric_constant({}).value;
  const double cb = quad::magnetic_constant({}).value;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const double unit = std::pow(s.e, 3) * s.hbar / (s.m * s.m * std::pow(s.c, 3) * s.d);
  const double m1 = first_order_si_moment(packet, {}).z / unit;
  const double rel_ce = std::abs(ce - 0.403) / 0.403;
  const double rel_m1 = std::abs(m1 - 0.071) / 0.071;
  const double rel_cb = std::abs(cb - 0.036) / 0.036;
  detail = "C_E " + fmt(ce) + " vs 0.403 (" + fmt(100 * rel_ce) + "%), m1 " + fmt(m1) +
           " vs 0.071 (" + fmt(100 * rel_m1) + "%), C_B " + fmt(cb) + " vs 0.036 (" +
           fmt(100 * rel_cb) + "%)";
  return rel_ce <= 0.05 && rel_m1 <= 0.10 && rel_cb <= 0.10;
}

// 5. matching widths: published bookkeeping near 2.09, resolved pinned
bool c05_matching_width(std::string& detail) {
  PhysicalScales s;
  const WidthSolve pub = solve_matching_width(Convention::PaperAsPublished, s, {});
  const WidthSolve res = solve_matching_width(Convention::OracleResolved, s, {});
  detail = "published " + fmt(pub.d_star_compton) + ", resolved " +
           fmt(res.d_star_compton) + " vs pin " + fmt(goldens::kDStarResolved);
  const bool pub_ok =
      pub.d_star_compton >= 2.09 - 0.01 && pub.d_star_compton <= 2.09 + 0.01;
  const bool res_ok = std::abs(res.d_star_compton - goldens::kDStarResolved) <= 2e-4;
  return pub_ok && res_ok;
}

// 6. raw cross-term route equals the closed first-order route
bool c06_equivalence(std::string& detail) {
  double worst = 0.0;
  for (const double dc : {2.0, 5.0, 10.0, 20.0}) {
    const SpinorState packet = packet_at(dc);
    const Vec3 m1 = first_order_si_moment(packet, {});
    const Vec3 mc = cross_term_moment(packet);
    worst = std::max(worst, norm(mc - m1) / norm(m1));
  }
  detail = "max relative difference " + fmt(worst) + " over widths {2,5,10,20}";
  return worst <= 1e-3;
}

// 7. Gordon decomposition sums to the Dirac current on random waves
bool c07_gordon(std::string& detail) {
  PhysicalScales s;
  std::mt19937_64 rng(0xACCE7u);
  const double pscale = s.m * s.c;
  const double ascale = s.m * s.c * s.c / s.e;
  const double tscale = s.hbar / (s.m * s.c * s.c);
  const double xscale = 3.0 * s.compton_radius();
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Vec3 p{uniform(rng, -pscale, pscale), uniform(rng, -pscale, pscale),
                 uniform(rng, -pscale, pscale)};
    Vec3 n{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    if (norm(n) < 1e-6) n = Vec3{0.0, 0.0, 1.0};
    const Vec3 a0{uniform(rng, -ascale, ascale), uniform(rng, -ascale, ascale),
                  uniform(rng, -ascale, ascale)};
    const Vec3 x{uniform(rng, -xscale, xscale), uniform(rng, -xscale, xscale),
                 uniform(rng, -xscale, xscale)};
    const double t = uniform(rng, 0.0, tscale);
    const SpinorState w = SpinorState::plane_wave_in_uniform_A(s, p, n, a0);
    const VectorField3 A([a0](const Vec3&) { return a0; });
    const Vec3 current = w.current_density(x);
    worst = std::max(worst, norm(gordon_terms(w, A, x, t).sum() - current) / norm(current));
  }
  detail = "max relative residual " + fmt(worst) + " over 20 waves";
  return worst <= 1e-10;
}

// 8. scaling laws by doubling the width
bool c08_scaling(std::string& detail) {
  const SpinorState a = packet_at(5.0);
  const SpinorState b = packet_at(10.0);
  const double m1 = first_order_si_moment(a, {}).z / first_order_si_moment(b, {}).z;
  const double ue = electric_self_energy(a, {}) / electric_self_energy(b, {});
  const double ub = magnetic_self_energy(a, {}) / magnetic_self_energy(b, {});
  detail = "m1 ratio " + fmt(m1) + " vs 2, U_E ratio " + fmt(ue) + " vs 2, U_B ratio " +
           fmt(ub) + " vs 8";
  return std::abs(m1 / 2.0 - 1.0) <= 0.02 && std::abs(ue / 2.0 - 1.0) <= 0.02 &&
         std::abs(ub / 8.0 - 1.0) <= 0.02;
}

// 9. electromagnetic mass at d equal to the Compton radius
bool c09_mass_bound(std::string& detail) {
  PhysicalScales s;
  s.d = s.compton_radius();
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const double ratio = electromagnetic_mass(packet, false, {}) / s.m_e;
  detail = "measured m_em = " + fmt(ratio) + " m_e against the stated bound 0.00042; " +
           "the electric self-energy alone fixes m_em/m_e = C_E*alpha*(lambda_C/d) = " +
           fmt(goldens::kElectric * goldens::kAlpha) + " at this width";
  return ratio <= 0.00042;
}

// 10. the first-order current opposes the magnetization current pointwise
bool c10_opposing_currents(std::string& detail) {
  const SpinorState packet = packet_at(5.0);
  const double d = packet.scales().d;
  const AzimuthalField jm = magnetization_current_profile(packet);
  const AzimuthalField j1 = first_order_current_profile(packet);
  int sampled = 0, opposed = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (const double z : {0.0, 0.7 * d, -1.3 * d}) {
        const Vec3 x{-3.0 * d + 6.0 * d * i / 7.0, -3.0 * d + 6.0 * d * j / 7.0, z};
        const Vec3 u = jm(x);
        const Vec3 v = j1(x);
        if (norm(u) == 0.0 || norm(v) == 0.0) continue;
        ++sampled;
        if (dot(u, v) < 0.0) ++opposed;
      }
  detail = fmt(opposed) + " of " + fmt(sampled) + " sampled pairs anti-aligned";
  return sampled > 100 && opposed == sampled;
}

// 11. fixed-seed Monte Carlo runs are bit-identical
bool c11_determinism(std::string& detail) {
  quad::Options mc;
  mc.method = quad::Method::MonteCarlo;
  mc.budget = 200000;
  mc.seed = 99;
  const double a = quad::interaction_constant(mc).value;
  const double b = quad::interaction_constant(mc).value;
  quad::Options mc4 = mc;
  mc4.threads = 4;
  const double c = quad::interaction_constant(mc4).value;
  const SpinorState packet = packet_at(5.0);
  const double m1a = first_order_si_moment(packet, mc).z;
  const double m1b = first_order_si_moment(packet, mc).z;
  const bool ok = identical(a, b) && identical(a, c) && identical(m1a, m1b);
  detail = ok ? "repeat and cross-thread runs bit-identical"
              : "runs differ: " + fmt(a) + " vs " + fmt(b) + " vs " + fmt(c);
  return ok;
}

struct Criterion {
  int id;
  const char* what;
  bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "rotating-sphere moment equals Q*omega*R^2/(5c) within 1e-6", c01_sphere},
    {2, "packet magnetization moment equals -mu_B z-hat within 1e-6", c02_dirac_moment},
    {3, "deterministic and MC engines agree within 3 sigma and 1e-3", c03_dual_engine},
    {4, "published coefficients reproduced within their stated slack", c04_published_audit},
    {5, "matching widths land on 2.09 (published) and the resolved pin", c05_matching_width},
    {6, "cross-term route equals first-order route within 1e-3", c06_equivalence},
    {7, "Gordon terms sum to the Dirac current within 1e-10", c07_gordon},
    {8, "m1 ~ 1/d, U_E ~ 1/d, U_B ~ 1/d^3 within 2%", c08_scaling},
    {9, "electromagnetic mass at d = lambda_C below 0.00042 m_e", c09_mass_bound},
    {10, "first-order current anti-parallel to magnetization current", c10_opposing_currents},
    {11, "fixed-seed Monte Carlo output is bit-identical", c11_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 11) {
      std::fprintf(stderr, "usage: %s [criterion 1..11]\n", argv[0]);
      return 2;
    }
  }
  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %2d: %s [%s]\n", ok ? "PASS" : "FAIL", c.id, c.what,
                detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
