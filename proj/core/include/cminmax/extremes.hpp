#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "cminmax/cloud.hpp"

namespace cminmax {

enum class ExtremeKind { Min, Max };

struct ExtremeHit {
  std::size_t point_index;
  int axis;
  ExtremeKind kind;
  double rotated_value;
};

/// Result of scanning one axis.  A nullopt end means the extreme was
/// ambiguous: a second point lies within tie_tol of the extreme value and the
/// end is rejected (the caller moves on to the next rotation).
struct AxisExtremes {
  std::optional<ExtremeHit> min;
  std::optional<ExtremeHit> max;
};

AxisExtremes axis_extremes(const PointCloud& cloud, int axis, double tie_tol);

/// Same scan on a raw coordinate buffer (n points of dimension `dim`).
AxisExtremes axis_extremes(std::span<const double> coords, std::size_t n, int dim,
                           int axis, double tie_tol);

}  // namespace cminmax
