#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "spinmoment/vec3.hpp"

namespace spinmoment {

/// Vector field on R^3 backed by a callable. Default-constructed fields are
/// identically zero. Supports pointwise sum and scalar multiples.
class VectorField3 {
 public:
  using Fn = std::function<Vec3(const Vec3&)>;

  VectorField3() = default;
  explicit VectorField3(Fn fn) : fn_(std::move(fn)) {}

  Vec3 operator()(const Vec3& x) const { return fn_ ? fn_(x) : Vec3{}; }

 private:
  Fn fn_;  // empty means the zero field
};

VectorField3 operator+(VectorField3 a, VectorField3 b);
VectorField3 operator*(double s, VectorField3 f);

/// f(|x|) (x cross axis): circulation about an axis through the origin.
/// `scale` is the decay length of the profile; radial quadratures use it to
/// pick panel widths and tail cutoffs. The family is closed under the
/// magnetostatic potential map, which keeps self-interaction iteration cheap.
class AzimuthalField {
 public:
  AzimuthalField(std::function<double(double)> profile, const Vec3& axis, double scale);

  Vec3 operator()(const Vec3& x) const;
  double profile(double r) const { return profile_(r); }
  const Vec3& axis() const { return axis_; }
  double scale() const { return scale_; }

  VectorField3 as_field() const;

 private:
  std::function<double(double)> profile_;
  Vec3 axis_;  // unit
  double scale_;
};

/// Uniform n^3 grid of 3-vectors over the box [lo, hi] with trilinear
/// interpolation; evaluates to zero outside the box.
class SampledGrid3 {
 public:
  /// Samples f at the n^3 grid nodes. Requires n >= 2 and lo < hi per axis.
  static SampledGrid3 sample(const VectorField3& f, const Vec3& lo, const Vec3& hi, int n);

  const Vec3& value(int i, int j, int k) const { return (*values_)[index(i, j, k)]; }
  Vec3 interpolate(const Vec3& x) const;
  VectorField3 as_field() const;

  int n() const { return n_; }
  const Vec3& lo() const { return lo_; }
  const Vec3& hi() const { return hi_; }

 private:
  SampledGrid3() = default;
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  Vec3 lo_, hi_;
  int n_ = 0;
  std::shared_ptr<std::vector<Vec3>> values_;  // shared so as_field() copies are cheap
};

}  // namespace spinmoment
