#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cminmax {

/// Dimension-tagged point set with flat row-major storage.  Immutable after
/// construction; all coordinates are validated finite.
class PointCloud {
public:
  PointCloud(int dim, std::vector<double> coords);

  int dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const { return coords_.empty(); }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }
  double coord(std::size_t i, int axis) const {
    return coords_[i * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(axis)];
  }
  const std::vector<double>& data() const { return coords_; }

private:
  int dim_;
  std::vector<double> coords_;
};

struct BoundingBox {
  std::vector<double> lo;
  std::vector<double> hi;
  double diagonal() const;
};

std::vector<double> centroid(const PointCloud& cloud);
BoundingBox bounding_box(const PointCloud& cloud);

}  // namespace cminmax
