#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cminmax/cloud.hpp"
#include "cminmax/extremes.hpp"
#include "cminmax/schedule.hpp"

namespace cminmax {

/// Which extremes are harvested per rotation.  All is the standard variant;
/// MinMaxX and MaxX reproduce the reduced-harvest bounds (M > pi/step and
/// M > 2*pi/step respectively).
enum class ExtremesMode { All, MinMaxX, MaxX };

struct DetectorConfig {
  ScheduleConfig schedule;
  std::optional<double> tie_tol;         // default 1e-7 * bbox diagonal
  std::optional<double> cluster_radius;  // default 0.02 * bbox diagonal
  int min_support = 1;
  std::optional<int> random_stop_patience;  // default max(10, 2*current corners)
  ExtremesMode extremes = ExtremesMode::All;
  std::size_t random_budget = 1000000;
  int threads = 1;
};

/// One harvested extreme, mapped back to the original frame by point index
/// (the stored position is the original cloud point, bit for bit).
struct CandidateCorner {
  std::vector<double> position;
  std::size_t rotation_index;
  int axis;
  ExtremeKind kind;
  std::size_t point_index;
};

struct Corner {
  std::vector<double> centroid;
  std::size_t support;
  std::vector<std::size_t> members;  // indices into CornerSet::candidates
};

struct Diagnostics {
  std::size_t rotations_executed = 0;
  std::size_t candidates_harvested = 0;
  std::size_t ties_rejected = 0;
};

struct CornerSet {
  int dim = 0;
  std::vector<Corner> corners;  // sorted lexicographically by centroid
  std::vector<CandidateCorner> candidates;
  Diagnostics diagnostics;
};

/// Run the schedule named by cfg.schedule.mode and cluster the harvested
/// candidates.  Throws NoCornersError when the full schedule yields nothing
/// usable, DimensionError on a cloud/config dimension mismatch.
CornerSet detect(const PointCloud& cloud, const DetectorConfig& cfg);

CornerSet detect_deterministic(const PointCloud& cloud, const DetectorConfig& cfg);

/// Consumes the random stream until `patience` consecutive rotations neither
/// create a cluster nor move a centroid by more than cluster_radius/10.
/// Throws BudgetExceededError past cfg.random_budget rotations.
CornerSet detect_random(const PointCloud& cloud, const DetectorConfig& cfg);

/// Repeats deterministic rounds with geometrically shrinking steps until two
/// consecutive rounds agree (equal corner count, centroids matched within the
/// cluster radius); at most 12 rounds.
CornerSet detect_adaptive(const PointCloud& cloud, const DetectorConfig& cfg);

/// Single-linkage grouping: candidates within `radius` of each other share a
/// cluster; centroids are arithmetic means.  Candidates are sorted before
/// union-find so the result is independent of input order.
CornerSet cluster(std::vector<CandidateCorner> candidates, double radius, int dim);

}  // namespace cminmax
