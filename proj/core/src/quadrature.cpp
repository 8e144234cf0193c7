#include "spinmoment/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "spinmoment/rng.hpp"

namespace spinmoment::quad {

namespace {

constexpr double kPi = std::numbers::pi;

// ------------------------------------------------------------ node rules

/// Eigenvalues plus squared first eigenvector components of a symmetric
/// tridiagonal matrix (implicit-shift QL). diag/offdiag are destroyed;
/// offdiag[i] couples i and i+1. This is the Golub-Welsch step: nodes are
/// the eigenvalues, weights are mu0 * z^2.
void tridiag_eigen_first_component(std::vector<double>& diag, std::vector<double>& off,
                                   std::vector<double>& z) {
  const int n = static_cast<int>(diag.size());
  z.assign(n, 0.0);
  if (n == 0) return;
  z[0] = 1.0;
  off.resize(n, 0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tridiagonal QL did not converge");
        double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        for (int i = m - 1; i >= l; --i) {
          double f = s * off[i];
          const double b = c * off[i];
          r = std::hypot(f, g);
          off[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            off[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && m - 1 >= l) continue;
        diag[l] -= p;
        off[l] = g;
        off[m] = 0.0;
      }
    } while (m != l);
  }
}

Rule1D golub_welsch(std::vector<double> diag, std::vector<double> off, double mu0) {
  std::vector<double> z;
  tridiag_eigen_first_component(diag, off, z);
  const int n = static_cast<int>(diag.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return diag[a] < diag[b]; });
  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = diag[order[i]];
    rule.weights[i] = mu0 * z[order[i]] * z[order[i]];
  }
  return rule;
}

Rule1D make_gauss_hermite(int n) {
  std::vector<double> diag(n, 0.0), off(n, 0.0);
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k / 2.0);
  return golub_welsch(std::move(diag), std::move(off), std::sqrt(kPi));
}

Rule1D make_gauss_legendre(int n) {
  std::vector<double> diag(n, 0.0), off(n, 0.0);
  for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(std::move(diag), std::move(off), 2.0);
}

constexpr int kMaxNodes = 196;

void check_node_count(int n) {
  if (n < 1 || n > kMaxNodes)
    throw std::invalid_argument("node count must be in [1, " + std::to_string(kMaxNodes) + "]");
}

const Rule1D& cached_rule(int n, std::map<int, Rule1D>& cache, std::mutex& mtx,
                          Rule1D (*make)(int)) {
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make(n)).first;
  return it->second;
}

// ----------------------------------------------------- chunked reduction

struct ChunkSums {
  double sum = 0.0;
  double sumsq = 0.0;
  std::uint64_t count = 0;
};

constexpr std::uint64_t kChunkSize = 1 << 16;

/// Runs `body(chunk_index, samples_in_chunk)` for every chunk and combines
/// the partial sums in chunk order, independent of the thread count.
template <typename Body>
ChunkSums run_chunks(std::uint64_t total, int threads, Body&& body) {
  const std::uint64_t nchunks = (total + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkSums> partial(nchunks);
  const int nthreads = std::clamp(threads, 1, 64);
  if (nthreads == 1 || nchunks <= 1) {
    for (std::uint64_t ci = 0; ci < nchunks; ++ci) {
      const std::uint64_t sz = std::min(kChunkSize, total - ci * kChunkSize);
      partial[ci] = body(ci, sz);
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&]() {
        for (std::uint64_t ci = next.fetch_add(1); ci < nchunks; ci = next.fetch_add(1)) {
          const std::uint64_t sz = std::min(kChunkSize, total - ci * kChunkSize);
          partial[ci] = body(ci, sz);
        }
      });
    for (auto& th : pool) th.join();
  }
  ChunkSums out;
  for (const auto& cs : partial) {  // fixed combination order
    out.sum += cs.sum;
    out.sumsq += cs.sumsq;
    out.count += cs.count;
  }
  return out;
}

QuadratureResult mc_result(const ChunkSums& s, double scale, const Options& opt,
                           std::uint64_t budget) {
  const double n = static_cast<double>(s.count);
  const double mean = s.sum / n;
  const double var = std::max(0.0, s.sumsq / n - mean * mean);
  QuadratureResult r;
  r.value = scale * mean;
  r.std_error = scale * std::sqrt(var / n);
  r.method = Method::MonteCarlo;
  r.budget = budget;
  r.seed = opt.seed;
  return r;
}

int ipow_int(double base, int p, double& out) {
  out = 1.0;
  for (int i = 0; i < p; ++i) out *= base;
  return p;
}

double mono3(const Vec3& v, const std::array<int, 3>& pw) {
  double r = 1.0, t;
  ipow_int(v.x, pw[0], t);
  r *= t;
  ipow_int(v.y, pw[1], t);
  r *= t;
  ipow_int(v.z, pw[2], t);
  r *= t;
  return r;
}

int total_deg(const std::array<int, 3>& p) { return p[0] + p[1] + p[2]; }

// --------------------------------------------- deterministic 3D integral

int nodes_per_axis(std::uint64_t budget) {
  const std::uint64_t b = budget == 0 ? static_cast<std::uint64_t>(kDefaultNodesPerAxis) *
                                            kDefaultNodesPerAxis * kDefaultNodesPerAxis
                                      : budget;
  int n = static_cast<int>(std::lround(std::cbrt(static_cast<double>(b))));
  return std::clamp(n, 4, kMaxNodes);
}

/// Tensor Gauss-Hermite pass. When `fold_weight` is set the e^{-|x|^2} factor
/// is removed from the rule so general (Gaussian-decaying) integrands can be
/// passed directly.
double tensor_gh(const std::function<double(const Vec3&)>& f, int n, bool fold_weight,
                 int threads) {
  const Rule1D& rule = gauss_hermite(n);
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = fold_weight ? rule.weights[i] * std::exp(rule.nodes[i] * rule.nodes[i])
                       : rule.weights[i];
  const int nthreads = std::clamp(threads, 1, 64);
  std::vector<double> slice(n, 0.0);
  if (nthreads == 1) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        double inner = 0.0;
        for (int k = 0; k < n; ++k)
          inner += w[k] * f(Vec3{rule.nodes[i], rule.nodes[j], rule.nodes[k]});
        acc += w[j] * inner;
      }
      slice[i] = acc;
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&]() {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          double acc = 0.0;
          for (int j = 0; j < n; ++j) {
            double inner = 0.0;
            for (int k = 0; k < n; ++k)
              inner += w[k] * f(Vec3{rule.nodes[i], rule.nodes[j], rule.nodes[k]});
            acc += w[j] * inner;
          }
          slice[i] = acc;
        }
      });
    for (auto& th : pool) th.join();
  }
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += w[i] * slice[i];  // fixed order
  return total;
}

QuadratureResult det_3d(const std::function<double(const Vec3&)>& f, bool fold_weight,
                        const Options& opt) {
  const int n = nodes_per_axis(opt.budget);
  const int nh = std::max(4, n / 2);
  const double full = tensor_gh(f, n, fold_weight, opt.threads);
  const double half = tensor_gh(f, nh, fold_weight, opt.threads);
  QuadratureResult r;
  r.value = full;
  r.std_error = std::abs(full - half);
  r.method = Method::Deterministic;
  r.budget = static_cast<std::uint64_t>(n) * n * n;
  r.seed = opt.seed;
  return r;
}

}  // namespace

const Rule1D& gauss_hermite(int n) {
  check_node_count(n);
  static std::map<int, Rule1D> cache;
  static std::mutex mtx;
  return cached_rule(n, cache, mtx, &make_gauss_hermite);
}

const Rule1D& gauss_legendre(int n) {
  check_node_count(n);
  static std::map<int, Rule1D> cache;
  static std::mutex mtx;
  return cached_rule(n, cache, mtx, &make_gauss_legendre);
}

Rule1D gauss_legendre_ab(int n, double a, double b) {
  const Rule1D& base = gauss_legendre(n);
  Rule1D out;
  out.nodes.resize(n);
  out.weights.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    out.nodes[i] = mid + half * base.nodes[i];
    out.weights[i] = half * base.weights[i];
  }
  return out;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel, int nodes_per_panel) {
  if (!(b > a)) return 0.0;
  const int npanels = std::max(1, static_cast<int>(std::ceil((b - a) / max_panel)));
  const double width = (b - a) / npanels;
  double total = 0.0;
  for (int p = 0; p < npanels; ++p) {
    const Rule1D r = gauss_legendre_ab(nodes_per_panel, a + p * width, a + (p + 1) * width);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) total += r.weights[i] * f(r.nodes[i]);
  }
  return total;
}

QuadratureResult integrate_3d(const std::function<double(const Vec3&)>& f, const Options& opt) {
  if (opt.method == Method::Deterministic) return det_3d(f, /*fold_weight=*/true, opt);

  const std::uint64_t budget = opt.budget == 0 ? kDefaultMcBudget : opt.budget;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double pi32 = std::pow(kPi, 1.5);
  const ChunkSums sums = run_chunks(budget, opt.threads, [&](std::uint64_t ci, std::uint64_t sz) {
    Xoshiro256ss rng(chunk_seed(opt.seed, ci));
    ChunkSums cs;
    for (std::uint64_t s = 0; s < sz; ++s) {
      double n0, n1, n2, n3;
      rng.normal_pair(n0, n1);
      rng.normal_pair(n2, n3);  // n3 unused; fixed consumption keeps streams aligned
      const Vec3 x{n0 * inv_sqrt2, n1 * inv_sqrt2, n2 * inv_sqrt2};
      const double v = pi32 * f(x) * std::exp(norm2(x));
      cs.sum += v;
      cs.sumsq += v * v;
      ++cs.count;
    }
    return cs;
  });
  return mc_result(sums, 1.0, opt, budget);
}

// ------------------------------------------------------- radial kernels

double gaussian_coulomb_kernel(double r) {
  if (r < 1.0) {
    // 2 pi sum_k (-1)^k r^{2k} / (k! (2k+1))
    double term = 1.0, total = 1.0;
    const double r2 = r * r;
    for (int k = 0; k < 40; ++k) {
      term *= -r2 * (2 * k + 1) / ((k + 1.0) * (2 * k + 3));
      total += term;
      if (std::abs(term) < 1e-18 * std::abs(total)) break;
    }
    return 2.0 * kPi * total;
  }
  return std::pow(kPi, 1.5) * std::erf(r) / r;
}

double gaussian_dipole_kernel(double r) {
  if (r < 1.0) {
    // pi sum_{k>=1} (-1)^{k+1} (2k/(k!(2k+1))) r^{2(k-1)}
    const double r2 = r * r;
    double total = 0.0;
    double fact = 1.0;  // k!
    double rpow = 1.0;  // r^{2(k-1)}
    double sign = 1.0;
    for (int k = 1; k < 40; ++k) {
      fact *= k;
      const double term = sign * 2.0 * k / (fact * (2 * k + 1)) * rpow;
      total += term;
      if (std::abs(term) < 1e-18 * std::abs(total) && k > 3) break;
      rpow *= r2;
      sign = -sign;
    }
    return kPi * total;
  }
  const double r2 = r * r;
  return kPi * (0.5 * std::sqrt(kPi) * std::erf(r) / (r2 * r) - std::exp(-r2) / r2);
}

double coulomb_convolution(const std::function<double(double)>& g, double r, double tail_cut) {
  if (r < 0.0) throw std::invalid_argument("coulomb_convolution: negative radius");
  const double outer = integrate_panels([&](double s) { return g(s) * s; }, r, r + tail_cut);
  if (r == 0.0) return 4.0 * kPi * outer;
  const double inner = integrate_panels([&](double s) { return g(s) * s * s; }, 0.0, r,
                                        std::min(1.0, r));
  return 4.0 * kPi * (inner / r + outer);
}

double dipole_convolution(const std::function<double(double)>& g, double r, double tail_cut) {
  if (r < 0.0) throw std::invalid_argument("dipole_convolution: negative radius");
  const double outer = integrate_panels([&](double s) { return g(s) * s; }, r, r + tail_cut);
  if (r == 0.0) return 4.0 * kPi / 3.0 * outer;
  const double inner = integrate_panels([&](double s) { return g(s) * s * s * s * s; }, 0.0, r,
                                        std::min(1.0, r));
  return 4.0 * kPi / 3.0 * (inner / (r * r * r) + outer);
}

// ---------------------------------------------------------- 6D integral

void CoulombPairIntegrand::validate() const {
  if (kernel.empty()) throw std::invalid_argument("kernel polynomial is empty");
  for (const auto& m : kernel) {
    for (int i = 0; i < 3; ++i)
      if (m.xpow[i] < 0 || m.ypow[i] < 0)
        throw std::invalid_argument("kernel monomial has a negative exponent");
    if (total_deg(m.xpow) + total_deg(m.ypow) > 4)
      throw std::invalid_argument("kernel polynomial degree above 4 is not supported");
  }
}

namespace {

struct CollapsedTerm {
  double coeff;
  std::array<int, 3> outer_pow;
  int dipole_axis;  // -1: Coulomb kernel; 0..2: dipole kernel times x_axis
};

std::vector<CollapsedTerm> collapse_terms(const CoulombPairIntegrand& integrand) {
  std::vector<CollapsedTerm> terms;
  for (const auto& m : integrand.kernel) {
    std::array<int, 3> a = m.xpow, b = m.ypow;
    if (total_deg(b) > 1 && total_deg(a) <= 1) std::swap(a, b);  // kernel is x<->y symmetric
    if (total_deg(b) == 0) {
      terms.push_back({m.coeff, a, -1});
    } else if (total_deg(b) == 1) {
      const int axis = b[0] == 1 ? 0 : (b[1] == 1 ? 1 : 2);
      terms.push_back({m.coeff, a, axis});
    } else {
      throw std::invalid_argument(
          "deterministic 6D path needs each kernel monomial to be at most linear in one "
          "argument; use the Monte Carlo method for this kernel");
    }
  }
  return terms;
}

double kernel_value(const CoulombPairIntegrand& integrand, const Vec3& x, const Vec3& y) {
  double k = 0.0;
  for (const auto& m : integrand.kernel) k += m.coeff * mono3(x, m.xpow) * mono3(y, m.ypow);
  return k;
}

}  // namespace

QuadratureResult integrate_6d_coulomb(const CoulombPairIntegrand& integrand, const Options& opt) {
  integrand.validate();

  if (opt.method == Method::Deterministic) {
    const std::vector<CollapsedTerm> terms = collapse_terms(integrand);
    const auto outer = [&terms](const Vec3& x) {
      const double r = norm(x);
      double acc = 0.0;
      for (const auto& t : terms) {
        const double radial =
            t.dipole_axis < 0 ? gaussian_coulomb_kernel(r) : gaussian_dipole_kernel(r);
        const double axis_factor = t.dipole_axis < 0 ? 1.0 : x[t.dipole_axis];
        acc += t.coeff * mono3(x, t.outer_pow) * axis_factor * radial;
      }
      return acc;
    };
    // weight e^{-|x|^2} is the Gauss-Hermite weight itself
    return det_3d(outer, /*fold_weight=*/false, opt);
  }

  const std::uint64_t budget = opt.budget == 0 ? kDefaultMcBudget : opt.budget;
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const double pi3 = kPi * kPi * kPi;
  const ChunkSums sums = run_chunks(budget, opt.threads, [&](std::uint64_t ci, std::uint64_t sz) {
    Xoshiro256ss rng(chunk_seed(opt.seed, ci));
    ChunkSums cs;
    for (std::uint64_t s = 0; s < sz; ++s) {
      Vec3 x, y;
      double dist = 0.0;
      do {
        double n0, n1, n2, n3, n4, n5;
        rng.normal_pair(n0, n1);
        rng.normal_pair(n2, n3);
        rng.normal_pair(n4, n5);
        x = Vec3{n0 * inv_sqrt2, n1 * inv_sqrt2, n2 * inv_sqrt2};
        y = Vec3{n3 * inv_sqrt2, n4 * inv_sqrt2, n5 * inv_sqrt2};
        dist = norm(x - y);
      } while (dist < 1e-12);  // coincident pairs are redrawn
      const double v = pi3 * kernel_value(integrand, x, y) / dist;
      cs.sum += v;
      cs.sumsq += v * v;
      ++cs.count;
    }
    return cs;
  });
  return mc_result(sums, 1.0, opt, budget);
}

// ------------------------------------------------------ packet constants

namespace {

QuadratureResult scaled(QuadratureResult r, double s) {
  r.value *= s;
  r.std_error *= std::abs(s);
  return r;
}

}  // namespace

QuadratureResult electric_constant(const Options& opt) {
  CoulombPairIntegrand wI;
  wI.kernel.push_back({1.0, {0, 0, 0}, {0, 0, 0}});
  const double pi3 = kPi * kPi * kPi;
  return scaled(integrate_6d_coulomb(wI, opt), 1.0 / (2.0 * pi3));
}

QuadratureResult interaction_constant(const Options& opt) {
  CoulombPairIntegrand wI;
  wI.kernel.push_back({1.0, {1, 0, 0}, {1, 0, 0}});
  wI.kernel.push_back({1.0, {0, 1, 0}, {0, 1, 0}});
  const double pi3 = kPi * kPi * kPi;
  return scaled(integrate_6d_coulomb(wI, opt), 1.0 / pi3);
}

QuadratureResult magnetic_constant(const Options& opt) {
  return scaled(interaction_constant(opt), 0.25);
}

}  // namespace spinmoment::quad
