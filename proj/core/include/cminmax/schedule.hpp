#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <vector>

#include "cminmax/rotation.hpp"

namespace cminmax {

enum class ScheduleMode { Deterministic, Random, Adaptive };

struct ScheduleConfig {
  int dim = 2;
  ScheduleMode mode = ScheduleMode::Deterministic;
  std::optional<double> phi_max;  // radians; required for Deterministic/Adaptive
  std::uint64_t seed = 0;
  double safety_factor = 1.0;
  double shrink = 0.5;
  // Explicit grid overrides (e.g. CLI --step-deg); when set they take
  // precedence over the phi_max-derived step.
  std::optional<double> step;
  std::optional<int> count;  // 2D rotation count / N-D per-axis count
};

struct DeterministicSchedule {
  double step = 0.0;
  int per_axis_count = 0;  // M in 2D, N_theta in N-D
  std::vector<Rotation> rotations;
};

/// 2D grid per the basic scheme: step = pi - phi_max, M = ceil(safety *
/// pi/(2*step)) bumped until M*step covers a quarter turn.
DeterministicSchedule deterministic_2d(double phi_max, double safety_factor = 1.0);

/// N-D grid (dim >= 3): per-plane step pi/N_theta with N_theta =
/// floor(safety * pi / (pi/2 - phi_max/2)) + 1, which keeps the step strictly
/// below pi/2 - omega_max.  All (dim-1)-tuples of multiples of the step over
/// [0, pi), realized in planes (0,1), (1,2), ..., (dim-2, dim-1);
/// N_theta^(dim-1) rotations total.
DeterministicSchedule deterministic_nd(int dim, double phi_max,
                                       double safety_factor = 1.0);

/// Explicit grids with a caller-chosen step.
DeterministicSchedule grid_2d(double step, int count);
DeterministicSchedule grid_nd(int dim, double step, int per_axis_count);

/// Resolve a Deterministic/Adaptive-round config into a concrete grid.
DeterministicSchedule make_deterministic(const ScheduleConfig& cfg);

/// Unbounded stream of random rotation increments.  Each element is a small
/// rotation step; the orientation after k elements is the composition of the
/// first k (consumers rotate cumulatively, matching the "rotate the cloud by
/// a random angle, then again" procedure).  In 2D increments are uniform
/// angles on [-pi, pi], so every visited orientation is itself uniform.  In
/// 3D each increment is a tilt (cosine-uniform angle) in one coordinate plane
/// followed by a spin (uniform angle) in another, the ordered plane pair
/// drawn uniformly from the six choices; the walk of composed orientations
/// distributes a fixed vector's image uniformly over the sphere.  For
/// dim > 3, dim-1 planar rotations in uniformly random coordinate planes.
class RotationStream {
public:
  RotationStream(int dim, std::uint64_t seed);
  Rotation next();
  int dim() const { return dim_; }

private:
  int dim_;
  std::mt19937_64 rng_;
};

/// Coupon-collector expectation N * H_N: the expected number of uniformly
/// random rotations needed to see all N vertices of a regular polytope in
/// single-extreme harvesting.
double expected_random_rotations(int num_vertices);

/// ceil((2*pi / (pi - 2*omega_max))^(dim-1)), the deterministic rotation
/// count for a regular polytope with the given max cone half-angle.
long long deterministic_rotation_count(int num_vertices, int dim, double omega_max);

/// Geometric step refinement for adaptive mode: step_0 = pi - initial guess,
/// step_{k+1} = shrink * step_k, up to max_rounds configs.
std::vector<ScheduleConfig> adaptive_steps(int dim, double initial_phi_guess,
                                           double shrink = 0.5, int max_rounds = 12);

/// key=value lines: dim, mode, phi_max_deg, seed, safety_factor, shrink.
ScheduleConfig parse_schedule_config(std::istream& in);

}  // namespace cminmax
