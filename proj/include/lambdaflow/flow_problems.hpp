#pragma once

#include "lambdaflow/metric_core.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lambdaflow {

/// An energy functional phi, a candidate strong upper gradient g, and the
/// coercivity data (A, B, x_star) with phi >= -A - B d^2(., x_star).
/// Evaluations go through phi_at / g_at, which assert the bounds.
struct FlowProblem {
  MetricSpace space;
  std::function<double(const Point&)> phi;  ///< may return +inf outside D(phi)
  std::function<double(const Point&)> g;    ///< nonnegative
  double coercivity_a = 1.0;
  double coercivity_b = 1.0;
  Point x_star;
  double eps_g = 0.0;   ///< gradient zero-threshold; 0 means auto (1e-8 * max sampled g)
  double eps_d = 1e-6;  ///< point-equality tolerance

  double phi_at(const Point& x) const;
  double g_at(const Point& x) const;
  double effective_eps_g(double max_sampled_g) const;
};

struct AnalyticSolution {
  std::string name;
  std::function<Point(double)> value;
};

/// A named flow problem together with its analytic solution family and a
/// preferred sampling grid.
struct Scenario {
  std::string name;
  FlowProblem problem;
  std::vector<AnalyticSolution> solutions;
  std::map<std::string, double> params;
  std::function<Eigen::VectorXd(double horizon, double dt)> time_grid;

  SampledCurve sample_solution(size_t index, double horizon, double dt) const;
  const AnalyticSolution& solution(const std::string& name) const;
};

/// phi(x) = |x|^2 / 2, g(x) = |x|; the smooth benchmark with solutions
/// u(t) = u0 e^{-t}.
Scenario quadratic_scenario(Eigen::Index d);

/// 1-D phi(x) = -(3/4)|x|^{4/3}, g(x) = |x|^{1/3}. Solutions may wait at the
/// degenerate critical point 0 for any time tau before departing:
/// x_tau(t) = ((2/3)(t - tau)_+)^{3/2}. One analytic solution per entry of
/// wait_times. Requires horizon > max wait time.
Scenario degenerate_power_scenario(const std::vector<double>& wait_times, double horizon);

/// 1-D flow on [0, 1] whose gradient vanishes exactly on the endpoint set of
/// the 2^depth closed intervals of the depth-truncated middle-thirds Cantor
/// set: g(x) = dist(x, K_depth)^{1/4}, phi(x) = -int_0^x g. The analytic
/// minimal solution "w" crosses [0, 1] in the finite time given by the
/// crossing-time map t(x) = int_0^x ds/g(s).
Scenario cantor_scenario(int depth);

/// Devil's-staircase value by ternary-digit scan truncated at depth.
/// Increasing, continuous, constant on removed gaps; exact 2^{-depth}-close
/// to the classical Cantor function.
double cantor_function(double x, int depth);

struct SlopeEstimate {
  double value = 0.0;                ///< estimate at the smallest radius
  std::vector<double> per_radius;    ///< trend across the given radii
};

/// Sampled estimate of the local slope limsup (phi(x) - phi(y))^+ / d(x, y),
/// probing axis directions at each radius. An estimate, not a certified value.
SlopeEstimate local_slope_estimate(const FlowProblem& p, const Point& x,
                                   const std::vector<double>& radii);

/// u0 e^{-t} sampled on the given grid (solution of the quadratic scenario).
SampledCurve exponential_decay_curve(const Point& x0, const Eigen::VectorXd& times);

/// ((2/3)(t - tau)_+)^{3/2} sampled on the given grid (degenerate-power family).
SampledCurve wait_then_depart_curve(double tau, const Eigen::VectorXd& times);

/// The degenerate-power closed form at a single time.
double wait_then_depart_value(double tau, double t);

/// Exact piecewise evaluator for the truncated-Cantor flow. The zero set of
/// g is the sorted knot set (interval endpoints); between consecutive knots
/// the distance function is a tent, so phi and the crossing time have exact
/// antiderivatives per segment.
class CantorFlow {
 public:
  explicit CantorFlow(int depth);

  int depth() const { return depth_; }
  const Eigen::VectorXd& knots() const { return knots_; }

  double dist_to_set(double x) const;
  double g(double x) const;
  double phi(double x) const;

  /// int_0^x ds / g(s); strictly increasing and finite on [0, 1].
  double crossing_time(double x) const;
  /// Inverse of crossing_time, clamped to [0, 1].
  double position(double t) const;
  double total_time() const { return total_time_; }

 private:
  int depth_;
  Eigen::VectorXd knots_;      // 2^{depth+1} interval endpoints, sorted, in [0, 1]
  Eigen::VectorXd pref_phi;    // int_0^{knot_i} g
  Eigen::VectorXd pref_time;   // int_0^{knot_i} 1/g
  double total_time_;
};

/// The analytic minimal crossing curve of the Cantor scenario, sampled on a
/// uniform dt grid augmented with a pair of nodes straddling each interior
/// zero of g (offset straddle_offset in space), plus the arrival time. The
/// horizon is total_time() + tail.
SampledCurve cantor_minimal_curve(const std::shared_ptr<const CantorFlow>& flow, double dt,
                                  double tail, double straddle_offset = 1e-10);

}  // namespace lambdaflow
