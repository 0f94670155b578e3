#pragma once

#include <vector>

#include "cminmax/cloud.hpp"

namespace cminmax {

/// Unit directions from a polytope vertex along its incident edges.
struct VertexFan {
  std::vector<double> apex;
  std::vector<std::vector<double>> edge_dirs;

  int dim() const { return static_cast<int>(apex.size()); }
};

/// Smallest cone apexed at the fan vertex containing every edge direction.
/// half_angle is the paper's omega; the full vertex angle is 2*omega.
struct BoundingCone {
  std::vector<double> axis;
  double half_angle;
};

/// Build a fan from the apex and the far endpoints of its incident edges
/// (directions are normalized here).
VertexFan fan_from_endpoints(const std::vector<double>& apex,
                             const std::vector<std::vector<double>>& endpoints);

/// Minimum bounding cone via the minimum enclosing ball of the direction
/// tips: the normalized ball center is the cone axis.  Throws
/// NotConvexVertexError if the directions span a half-space or more
/// (half_angle >= pi/2).
BoundingCone min_bounding_cone(const VertexFan& fan);

/// phi_max = 2 * max over vertices of the minimum-bounding-cone half angle.
double polytope_phi_max(const std::vector<VertexFan>& fans);

/// Fans for every vertex of a regular polytope given only its vertex set:
/// neighbors are the vertices at (approximately) the minimum pairwise
/// distance, which is the edge length for all regular polytopes.
std::vector<VertexFan> vertex_fans(const PointCloud& vertices,
                                   double edge_tol_rel = 1e-6);

}  // namespace cminmax
