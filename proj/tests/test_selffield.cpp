#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "goldens.hpp"
#include "spinmoment/gordon.hpp"
#include "spinmoment/selffield.hpp"

using namespace spinmoment;

namespace {

double unit_uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
double uniform(std::mt19937_64& g, double a, double b) { return a + (b - a) * unit_uniform(g); }

// curl of g(|x|) (x cross n): B = -2 g n + (g'/r)((x.n) x - r^2 n)
Vec3 azimuthal_curl(const AzimuthalField& A, const Vec3& n, const Vec3& x, double h) {
  const double r = norm(x);
  const double g = A.profile(r);
  const double gp = (A.profile(r + h) - A.profile(r - h)) / (2.0 * h);
  return (-2.0 * g) * n + (gp / std::max(r, 1e-300)) * ((dot(x, n)) * x - (r * r) * n);
}

}  // namespace

TEST_CASE("magnetization current profile matches its closed form") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const AzimuthalField jm = magnetization_current_profile(packet);
  const double coeff = (s.e * s.hbar / (s.m * s.d * s.d)) * std::pow(M_PI * s.d * s.d, -1.5);
  for (const double f : {0.0, 0.5, 1.0, 2.5}) {
    CHECK(jm.profile(f * s.d) ==
          doctest::Approx(coeff * std::exp(-f * f)).epsilon(1e-13));
  }
  CHECK(jm.scale() == doctest::Approx(s.d).epsilon(1e-15));
  CHECK(norm(jm.axis() - Vec3{0, 0, 1}) == 0.0);
}

TEST_CASE("profiles require the packet family") {
  PhysicalScales s;
  const SpinorState w = SpinorState::plane_wave(s, Vec3{1e-17, 0, 0}, Vec3{0, 0, 1});
  CHECK_THROWS_AS(magnetization_current_profile(w), std::invalid_argument);
  CHECK_THROWS_AS(self_potential(w), std::invalid_argument);
  CHECK_THROWS_AS(electric_self_energy(w, {}), std::invalid_argument);
}

TEST_CASE("self potential: closed kernel vs radial collapse of the convolution") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const AzimuthalField a_closed = self_potential(packet);
  const AzimuthalField a_radial =
      vector_potential_profile(magnetization_current_profile(packet), s.c);
  for (const double f : {0.1, 0.7, 1.0, 2.0, 4.0}) {
    const double r = f * s.d;
    CHECK(a_radial.profile(r) == doctest::Approx(a_closed.profile(r)).epsilon(1e-10));
  }
  // closed value at r = d
  const double want = (s.e * s.hbar / (s.m * s.c)) * std::pow(M_PI * s.d * s.d, -1.5) *
                      quad::gaussian_dipole_kernel(1.0);
  CHECK(a_closed.profile(s.d) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("raw spherical-shell potential agrees with the closed kernel") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const AzimuthalField a_closed = self_potential(packet);
  const VectorField3 jm = magnetization_current_profile(packet).as_field();
  RawPotentialOptions opt;
  opt.length_scale = s.d;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 6; ++i) {
    const Vec3 x{uniform(rng, -2, 2) * s.d, uniform(rng, -2, 2) * s.d,
                 uniform(rng, -2, 2) * s.d};
    const Vec3 raw = vector_potential_from_current(jm, s.c, x, opt);
    const Vec3 closed = a_closed(x);
    const double scale = std::max(norm(closed), a_closed.profile(0.0) * s.d * 1e-6);
    CHECK(norm(raw - closed) <= 1e-8 * scale);
  }
}

TEST_CASE("raw route is translation covariant") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const AzimuthalField a_closed = self_potential(packet);
  const AzimuthalField jm = magnetization_current_profile(packet);
  const Vec3 shift{1.3 * s.d, -0.4 * s.d, 0.9 * s.d};
  const VectorField3 jm_shifted(
      [jm, shift](const Vec3& y) { return jm(y - shift); });
  RawPotentialOptions opt;
  opt.length_scale = s.d;
  const Vec3 probe{0.6 * s.d, 0.2 * s.d, -0.5 * s.d};
  const Vec3 got = vector_potential_from_current(jm_shifted, s.c, probe + shift, opt);
  const Vec3 want = a_closed(probe);
  CHECK(norm(got - want) <= 1e-8 * norm(want));
}

TEST_CASE("first-order current correction opposes the magnetization current") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const Vec3 x{s.d, 0.0, 0.0};
  const Vec3 j1 = first_order_current_correction(packet, x);
  const Vec3 jm = magnetization_current(packet, x);
  CHECK(j1.y > 0.0);  // J_M points along -y there
  CHECK(dot(j1, jm) < 0.0);
  // pointwise function matches the azimuthal profile
  const AzimuthalField prof = first_order_current_profile(packet);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 8; ++i) {
    const Vec3 p{uniform(rng, -2, 2) * s.d, uniform(rng, -2, 2) * s.d,
                 uniform(rng, -2, 2) * s.d};
    const Vec3 a = first_order_current_correction(packet, p);
    const Vec3 b = prof(p);
    CHECK(norm(a - b) <= 1e-10 * (norm(b) + prof.profile(0.0) * s.d * 1e-8));
  }
  CHECK(norm(first_order_current_correction(packet, Vec3{})) == 0.0);
}

TEST_CASE("iterated corrections: first stage is exact, second is alpha-suppressed") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const auto stages = iterate_current_correction(packet, 2);
  REQUIRE(stages.size() == 2);
  const AzimuthalField closed = first_order_current_profile(packet);
  for (const double f : {0.3, 1.0, 2.0}) {
    const double r = f * s.d;
    CHECK(stages[0].profile(r) == doctest::Approx(closed.profile(r)).epsilon(1e-3));
  }
  // each extra stage costs one power of the coupling, so ~alpha/5 here
  const double r1 = std::abs(stages[0].profile(s.d));
  const double r2 = std::abs(stages[1].profile(s.d));
  CHECK(r2 < 0.01 * r1);

  CHECK_THROWS_AS(iterate_current_correction(packet, 0), std::invalid_argument);
  CHECK_THROWS_AS(iterate_current_correction(packet, 4), std::invalid_argument);
}

TEST_CASE("electric self-energy: closed coefficient, 1/d law, e^2 scaling") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const double ue = electric_self_energy(packet, {});
  CHECK(ue * s.d / (s.e * s.e) == doctest::Approx(goldens::kElectric).epsilon(1e-10));

  PhysicalScales s2 = s;
  s2.d = 2.0 * s.d;
  const double ue2 = electric_self_energy(SpinorState::gaussian_packet(s2, Vec3{0, 0, 1}), {});
  CHECK(ue / ue2 == doctest::Approx(2.0).epsilon(1e-9));

  PhysicalScales se = s;
  se.e = 2.0 * s.e;
  const double ue4 = electric_self_energy(SpinorState::gaussian_packet(se, Vec3{0, 0, 1}), {});
  CHECK(ue4 / ue == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("electric self-energy equals the field energy of the smeared charge") {
  // (1/8pi) int |E|^2 with E_r = -e [erf(u) - 2u exp(-u^2)/sqrt(pi)] / r^2
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  auto e_r = [&](double r) {
    const double u = r / s.d;
    return -s.e * (std::erf(u) - 2.0 * u * std::exp(-u * u) / std::sqrt(M_PI)) / (r * r);
  };
  const double field_energy =
      0.5 * quad::integrate_panels(
                [&](double t) {
                  const double r = t * s.d;  // integrate in units of d
                  const double E = e_r(r);
                  return E * E * r * r * s.d;
                },
                1e-6, 14.0);
  CHECK(field_energy == doctest::Approx(electric_self_energy(packet, {})).epsilon(1e-6));
}

TEST_CASE("magnetic self-energy: closed coefficient and 1/d^3 law") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const double ub = magnetic_self_energy(packet, {});
  const double unit = s.e * s.e * s.hbar * s.hbar / (s.m * s.m * s.c * s.c * s.d * s.d * s.d);
  CHECK(ub / unit == doctest::Approx(goldens::kMomentCoefficient).epsilon(1e-10));

  PhysicalScales s2 = s;
  s2.d = 2.0 * s.d;
  const double ub2 = magnetic_self_energy(SpinorState::gaussian_packet(s2, Vec3{0, 0, 1}), {});
  CHECK(ub / ub2 == doctest::Approx(8.0).epsilon(1e-9));

  // fixed ratio to the electric energy
  const double ue = electric_self_energy(packet, {});
  const double lam = s.hbar / (s.m * s.c);
  CHECK(ub / ue == doctest::Approx(goldens::kMomentCoefficient / goldens::kElectric *
                                   lam * lam / (s.d * s.d))
                       .epsilon(1e-9));
}

TEST_CASE("magnetic self-energy equals the field energy of the self potential") {
  // (1/2c) int J_M . A_1 must equal (1/8pi) int |curl A_1|^2: both sides are
  // computed by unrelated routes, so this pins the overall factor
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const AzimuthalField a1 = self_potential(packet);
  const Vec3 n{0, 0, 1};
  const double h = 1e-6 * s.d;

  // spherical shells: (1/8pi) int_0^R r^2 dr int dOmega |B|^2
  const auto& ct = quad::gauss_legendre(32);
  const int nphi = 16;
  auto shell = [&](double r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < ct.nodes.size(); ++i) {
      const double c0 = ct.nodes[i];
      const double s0 = std::sqrt(std::max(0.0, 1.0 - c0 * c0));
      for (int p = 0; p < nphi; ++p) {
        const double phi = 2.0 * M_PI * p / nphi;
        const Vec3 x{r * s0 * std::cos(phi), r * s0 * std::sin(phi), r * c0};
        acc += ct.weights[i] * norm2(azimuthal_curl(a1, n, x, h));
      }
    }
    return acc * (2.0 * M_PI / nphi);
  };
  const double field_energy =
      quad::integrate_panels(
          [&](double t) {
            const double r = t * s.d;
            return shell(r) * r * r * s.d;
          },
          1e-4, 12.0) /
      (8.0 * M_PI);
  const double overlap_energy = magnetic_self_energy(packet, {});
  CHECK(field_energy == doctest::Approx(overlap_energy).epsilon(0.01));
}

TEST_CASE("electromagnetic mass honors the width and the magnetic switch") {
  PhysicalScales s;
  s.d = s.compton_radius();
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  CHECK(electromagnetic_mass(packet, false, {}) / s.m_e ==
        doctest::Approx(goldens::kMassRatioAtCompton).epsilon(1e-9));

  PhysicalScales swide;
  swide.d = 1e4 * swide.compton_radius();
  const SpinorState wide = SpinorState::gaussian_packet(swide, Vec3{0, 0, 1});
  CHECK(electromagnetic_mass(wide, false, {}) / swide.m_e ==
        doctest::Approx(goldens::kMassRatioAt1e4).epsilon(1e-9));

  const double without = electromagnetic_mass(packet, false, {});
  const double with = electromagnetic_mass(packet, true, {});
  CHECK(with - without ==
        doctest::Approx(magnetic_self_energy(packet, {}) / (s.c * s.c)).epsilon(1e-12));
}

TEST_CASE("self-field report carries the audit fields") {
  PhysicalScales s;
  const SpinorState packet = SpinorState::gaussian_packet(s, Vec3{0, 0, 1});
  const SelfFieldReport rep = self_field_report(packet, true, {});
  CHECK(rep.electric_coefficient == doctest::Approx(goldens::kElectric).epsilon(1e-10));
  CHECK(rep.magnetic_coefficient ==
        doctest::Approx(goldens::kMomentCoefficient).epsilon(1e-10));
  CHECK(rep.include_magnetic);
  CHECK(rep.static_approximation);
  CHECK(!rep.width_warning);
  CHECK(rep.d_over_compton == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(rep.U_electric == doctest::Approx(electric_self_energy(packet, {})).epsilon(1e-12));
  CHECK(rep.m_em ==
        doctest::Approx((rep.U_electric + rep.U_magnetic) / (s.c * s.c)).epsilon(1e-12));
  const std::string j = rep.to_json();
  CHECK(j.find("\"static_approximation\": true") != std::string::npos);
  CHECK(j.find("U_electric_erg") != std::string::npos);

  // the A1/J1 fields in the report evaluate like the standalone builders
  const Vec3 x{0.8 * s.d, -0.1 * s.d, 0.3 * s.d};
  CHECK(norm(rep.A1(x) - self_potential(packet)(x)) == 0.0);
  CHECK(norm(rep.J1(x) - first_order_current_correction(packet, x)) == 0.0);
}

TEST_CASE("narrow width warning trips below two Compton radii") {
  PhysicalScales s;
  CHECK(!narrow_width_warning(s));
  s.d = 1.9 * s.compton_radius();
  CHECK(narrow_width_warning(s));
  s.d = 2.1 * s.compton_radius();
  CHECK(!narrow_width_warning(s));
}
