#include "spinmoment/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace spinmoment {

VectorField3 operator+(VectorField3 a, VectorField3 b) {
  return VectorField3([a = std::move(a), b = std::move(b)](const Vec3& x) {
    return a(x) + b(x);
  });
}

VectorField3 operator*(double s, VectorField3 f) {
  return VectorField3([s, f = std::move(f)](const Vec3& x) { return s * f(x); });
}

AzimuthalField::AzimuthalField(std::function<double(double)> profile, const Vec3& axis,
                               double scale)
    : profile_(std::move(profile)), axis_(normalized(axis)), scale_(scale) {
  if (!profile_) throw std::invalid_argument("AzimuthalField: empty profile");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("AzimuthalField: scale must be positive and finite");
  if (norm(axis) == 0.0) throw std::invalid_argument("AzimuthalField: zero axis");
}

Vec3 AzimuthalField::operator()(const Vec3& x) const {
  return profile_(norm(x)) * cross(x, axis_);
}

VectorField3 AzimuthalField::as_field() const {
  return VectorField3([copy = *this](const Vec3& x) { return copy(x); });
}

SampledGrid3 SampledGrid3::sample(const VectorField3& f, const Vec3& lo, const Vec3& hi,
                                  int n) {
  if (n < 2) throw std::invalid_argument("SampledGrid3: need at least 2 nodes per axis");
  for (int a = 0; a < 3; ++a)
    if (!(lo[a] < hi[a])) throw std::invalid_argument("SampledGrid3: need lo < hi per axis");

  SampledGrid3 g;
  g.lo_ = lo;
  g.hi_ = hi;
  g.n_ = n;
  g.values_ = std::make_shared<std::vector<Vec3>>();
  g.values_->reserve(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec3 x{lo.x + (hi.x - lo.x) * i / (n - 1),
                     lo.y + (hi.y - lo.y) * j / (n - 1),
                     lo.z + (hi.z - lo.z) * k / (n - 1)};
        g.values_->push_back(f(x));
      }
  return g;
}

Vec3 SampledGrid3::interpolate(const Vec3& x) const {
  for (int a = 0; a < 3; ++a)
    if (x[a] < lo_[a] || x[a] > hi_[a]) return {};

  // fractional grid coordinates and the lower corner of the containing cell
  double t[3];
  int i0[3];
  for (int a = 0; a < 3; ++a) {
    const double u = (x[a] - lo_[a]) / (hi_[a] - lo_[a]) * (n_ - 1);
    int i = static_cast<int>(std::floor(u));
    if (i > n_ - 2) i = n_ - 2;
    if (i < 0) i = 0;
    i0[a] = i;
    t[a] = u - i;
  }

  Vec3 r{};
  for (int di = 0; di < 2; ++di)
    for (int dj = 0; dj < 2; ++dj)
      for (int dk = 0; dk < 2; ++dk) {
        const double w = (di ? t[0] : 1.0 - t[0]) * (dj ? t[1] : 1.0 - t[1]) *
                         (dk ? t[2] : 1.0 - t[2]);
        r += w * value(i0[0] + di, i0[1] + dj, i0[2] + dk);
      }
  return r;
}

VectorField3 SampledGrid3::as_field() const {
  return VectorField3([copy = *this](const Vec3& x) { return copy.interpolate(x); });
}

}  // namespace spinmoment
