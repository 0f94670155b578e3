#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cminmax/cloud.hpp"

namespace cminmax {

/// Rotation in the coordinate plane (axis_a, axis_b); identity on all other
/// axes.  Positive angle turns axis_a toward axis_b.
struct PlanarRotation {
  int axis_a;
  int axis_b;
  double angle;  // radians, normalized to (-pi, pi]
};

/// Small dense square matrix, row-major.
class Matrix {
public:
  explicit Matrix(int dim);
  static Matrix identity(int dim);

  int dim() const { return dim_; }
  double& at(int r, int c) { return m_[static_cast<std::size_t>(r) * dim_ + c]; }
  double at(int r, int c) const { return m_[static_cast<std::size_t>(r) * dim_ + c]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix transposed() const;
  void apply(std::span<const double> in, std::span<double> out) const;

private:
  int dim_;
  std::vector<double> m_;
};

/// An orientation expressed as an ordered composition of planar rotations;
/// factors()[0] is applied first.
class Rotation {
public:
  Rotation(int dim, std::vector<PlanarRotation> factors);

  int dim() const { return dim_; }
  const std::vector<PlanarRotation>& factors() const { return factors_; }

  Matrix matrix() const;
  std::vector<double> apply(std::span<const double> p) const;

private:
  int dim_;
  std::vector<PlanarRotation> factors_;
};

/// Reversed factor order with negated angles; composes with the input to the
/// identity map.
Rotation invert(const Rotation& r);

/// Rotate every point about `center`: R*(p - center) + center.
PointCloud apply_rotation(const PointCloud& cloud, const Rotation& r,
                          std::span<const double> center);

double normalize_angle(double a);

}  // namespace cminmax
