#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace lambdaflow {

using Point = Eigen::VectorXd;

/// Euclidean phase space R^d.
struct MetricSpace {
  Eigen::Index dim = 1;

  double distance(const Point& p, const Point& q) const;
};

/// A trajectory sampled on a strictly increasing time grid starting at 0,
/// piecewise-linear in coordinates between nodes.
struct SampledCurve {
  Eigen::VectorXd times;   ///< strictly increasing, times[0] == 0, seconds
  Eigen::MatrixXd points;  ///< dim x size(); column i is the value at times[i]

  Eigen::Index size() const { return times.size(); }
  Eigen::Index dim() const { return points.rows(); }
  double horizon() const { return times[times.size() - 1]; }
  Point point(Eigen::Index i) const { return points.col(i); }

  /// Throws std::invalid_argument if any invariant is broken
  /// (length >= 2, strictly increasing grid, times[0] == 0, finite entries).
  void validate() const;
};

/// A sampled increasing map z on [0, grid.back()] with z(0) = 0, linear
/// between nodes. Monotonicity is enforced by the container; the 1-Lipschitz
/// property is not (arc-length maps exceed slope 1) — use check_one_lipschitz
/// where the math requires it.
struct TimeReparam {
  Eigen::VectorXd grid;
  Eigen::VectorXd values;

  Eigen::Index size() const { return grid.size(); }
  double operator()(double t) const;  ///< linear interpolation, clamped ends
  void validate() const;
};

/// The visited range of a curve in traversal order, with the closure point
/// (final node) when the curve is eventually constant or extended.
struct RangeSample {
  std::vector<Point> trace;
  std::optional<Point> limit;
};

/// Value of the curve at time t; exact at grid nodes, linear in between.
/// Throws std::domain_error outside [0, horizon].
Point interp(const SampledCurve& c, double t);

/// Per-interval chord speeds d(p_i, p_{i+1}) / (t_{i+1} - t_i); the discrete
/// stand-in for the metric derivative. Length = size() - 1.
Eigen::VectorXd metric_speed(const SampledCurve& c, const MetricSpace& space);

/// Cumulative chord length sampled on the curve grid. Increasing, starts at
/// 0, in general not 1-Lipschitz.
TimeReparam arc_length(const SampledCurve& c, const MetricSpace& space);

/// Smallest grid time s with d(c(t), c(s)) <= eps_d for all grid t >= s.
/// Returns horizon when the curve never freezes before the end.
double freeze_time(const SampledCurve& c, const MetricSpace& space, double eps_d);

/// Freeze time of a truncated curve (same computation as freeze_time; the
/// truncated class gets its own entry point because reports label it
/// separately).
double truncated_freeze_time(const SampledCurve& c, const MetricSpace& space, double eps_d);

/// Left-most grid-interpolated t with m(t) >= query (right-continuous
/// generalized inverse); exact inverse where m is strictly increasing.
/// Throws std::domain_error when query is outside [m(0), m(end)].
double monotone_inverse(const TimeReparam& m, double query);

/// True iff every consecutive increment lies in [-tol, dt + tol].
bool check_one_lipschitz(const TimeReparam& m, double tol);

/// Union of two sorted grids, truncated to [0, cap]; near-duplicates merged.
Eigen::VectorXd merge_time_grids(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double cap);

/// Curve evaluated at new_times (must be a valid grid inside [0, horizon]).
SampledCurve resample(const SampledCurve& c, const Eigen::VectorXd& new_times);

/// The composition c(z(.)) sampled on z's grid. Requires z's values to stay
/// within [0, horizon(c)].
SampledCurve reparametrize(const SampledCurve& c, const TimeReparam& z);

RangeSample range_of(const SampledCurve& c);

/// Distance from x to the piecewise-linear trace of c.
double point_to_curve_distance(const Point& x, const SampledCurve& c, const MetricSpace& space);

/// max over u's nodes of the distance to v's trace (one-sided range gap).
double one_sided_range_gap(const SampledCurve& u, const SampledCurve& v, const MetricSpace& space);

/// sup over the merged grid of d(u(t), v(t)), taken on [0, min(horizons)].
double sup_distance(const SampledCurve& u, const SampledCurve& v, const MetricSpace& space);

}  // namespace lambdaflow
