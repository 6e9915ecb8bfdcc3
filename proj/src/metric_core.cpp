#include "lambdaflow/metric_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lambdaflow {

namespace {

// Index of the segment [times[i], times[i+1]] containing t, i in [0, n-2].
Eigen::Index locate_segment(const Eigen::VectorXd& times, double t) {
  const double* begin = times.data();
  const double* end = begin + times.size();
  auto it = std::upper_bound(begin, end, t);
  Eigen::Index i = static_cast<Eigen::Index>(it - begin) - 1;
  if (i < 0) i = 0;
  if (i > times.size() - 2) i = times.size() - 2;
  return i;
}

double domain_slack(double horizon) { return 1e-12 * (1.0 + std::abs(horizon)); }

}  // namespace

double MetricSpace::distance(const Point& p, const Point& q) const {
  return (p - q).norm();
}

void SampledCurve::validate() const {
  if (times.size() < 2) throw std::invalid_argument("curve needs at least two nodes");
  if (points.cols() != times.size())
    throw std::invalid_argument("curve times/points length mismatch");
  if (points.rows() < 1) throw std::invalid_argument("curve dimension must be >= 1");
  if (times[0] != 0.0) throw std::invalid_argument("curve grid must start at 0");
  if (!times.allFinite() || !points.allFinite())
    throw std::invalid_argument("curve entries must be finite");
  for (Eigen::Index i = 0; i + 1 < times.size(); ++i)
    if (!(times[i + 1] > times[i]))
      throw std::invalid_argument("curve grid must be strictly increasing");
}

double TimeReparam::operator()(double t) const {
  if (t <= grid[0]) return values[0];
  if (t >= grid[grid.size() - 1]) return values[values.size() - 1];
  Eigen::Index i = locate_segment(grid, t);
  double dt = grid[i + 1] - grid[i];
  double lambda = (t - grid[i]) / dt;
  return values[i] + lambda * (values[i + 1] - values[i]);
}

void TimeReparam::validate() const {
  if (grid.size() < 1 || grid.size() != values.size())
    throw std::invalid_argument("reparam grid/values length mismatch");
  if (grid[0] != 0.0) throw std::invalid_argument("reparam grid must start at 0");
  if (values[0] != 0.0) throw std::invalid_argument("reparam must satisfy z(0) = 0");
  if (!grid.allFinite() || !values.allFinite())
    throw std::invalid_argument("reparam entries must be finite");
  for (Eigen::Index i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i + 1] > grid[i]))
      throw std::invalid_argument("reparam grid must be strictly increasing");
    if (values[i + 1] < values[i])
      throw std::invalid_argument("reparam values must be non-decreasing");
  }
}

Point interp(const SampledCurve& c, double t) {
  double slack = domain_slack(c.horizon());
  if (t < -slack || t > c.horizon() + slack)
    throw std::domain_error("interp: time " + std::to_string(t) + " outside [0, " +
                            std::to_string(c.horizon()) + "]");
  if (t <= 0.0) return c.points.col(0);
  if (t >= c.horizon()) return c.points.col(c.size() - 1);
  Eigen::Index i = locate_segment(c.times, t);
  if (t == c.times[i]) return c.points.col(i);
  double lambda = (t - c.times[i]) / (c.times[i + 1] - c.times[i]);
  return c.points.col(i) + lambda * (c.points.col(i + 1) - c.points.col(i));
}

Eigen::VectorXd metric_speed(const SampledCurve& c, const MetricSpace& space) {
  Eigen::VectorXd speeds(c.size() - 1);
  for (Eigen::Index i = 0; i + 1 < c.size(); ++i)
    speeds[i] =
        space.distance(c.points.col(i), c.points.col(i + 1)) / (c.times[i + 1] - c.times[i]);
  return speeds;
}

TimeReparam arc_length(const SampledCurve& c, const MetricSpace& space) {
  TimeReparam out;
  out.grid = c.times;
  out.values.resize(c.size());
  out.values[0] = 0.0;
  for (Eigen::Index i = 0; i + 1 < c.size(); ++i)
    out.values[i + 1] = out.values[i] + space.distance(c.points.col(i), c.points.col(i + 1));
  return out;
}

double freeze_time(const SampledCurve& c, const MetricSpace& space, double eps_d) {
  const Eigen::Index n = c.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    bool frozen = true;
    // Scan from the far end first: for moving curves it fails immediately.
    for (Eigen::Index j = n - 1; j > i; --j) {
      if (space.distance(c.points.col(j), c.points.col(i)) > eps_d) {
        frozen = false;
        break;
      }
    }
    if (frozen) return c.times[i];
  }
  return c.horizon();  // unreachable: i = n-1 always qualifies
}

double truncated_freeze_time(const SampledCurve& c, const MetricSpace& space, double eps_d) {
  return freeze_time(c, space, eps_d);
}

double monotone_inverse(const TimeReparam& m, double query) {
  const Eigen::Index n = m.size();
  double lo = m.values[0], hi = m.values[n - 1];
  double slack = 1e-12 * (1.0 + std::abs(hi) + std::abs(lo));
  if (query < lo - slack || query > hi + slack)
    throw std::domain_error("monotone_inverse: query outside [m(0), m(end)]");
  if (query <= lo) return m.grid[0];
  const double* begin = m.values.data();
  auto it = std::lower_bound(begin, begin + n, query);
  Eigen::Index i = static_cast<Eigen::Index>(it - begin);
  if (i >= n) return m.grid[n - 1];
  if (i == 0) return m.grid[0];
  double den = m.values[i] - m.values[i - 1];  // positive: values[i-1] < query <= values[i]
  double lambda = (query - m.values[i - 1]) / den;
  return m.grid[i - 1] + lambda * (m.grid[i] - m.grid[i - 1]);
}

bool check_one_lipschitz(const TimeReparam& m, double tol) {
  for (Eigen::Index i = 0; i + 1 < m.size(); ++i) {
    double dz = m.values[i + 1] - m.values[i];
    double dt = m.grid[i + 1] - m.grid[i];
    if (dz < -tol || dz > dt + tol) return false;
  }
  return true;
}

Eigen::VectorXd merge_time_grids(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double cap) {
  std::vector<double> all;
  all.reserve(static_cast<size_t>(a.size() + b.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] <= cap) all.push_back(a[i]);
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (b[i] <= cap) all.push_back(b[i]);
  all.push_back(0.0);
  all.push_back(cap);
  std::sort(all.begin(), all.end());
  double min_gap = 1e-15 * (1.0 + std::abs(cap));
  std::vector<double> merged;
  merged.reserve(all.size());
  for (double t : all)
    if (merged.empty() || t - merged.back() > min_gap) merged.push_back(t);
  merged.front() = 0.0;
  Eigen::VectorXd out(static_cast<Eigen::Index>(merged.size()));
  for (size_t i = 0; i < merged.size(); ++i) out[static_cast<Eigen::Index>(i)] = merged[i];
  return out;
}

SampledCurve resample(const SampledCurve& c, const Eigen::VectorXd& new_times) {
  SampledCurve out;
  out.times = new_times;
  out.points.resize(c.dim(), new_times.size());
  for (Eigen::Index i = 0; i < new_times.size(); ++i) out.points.col(i) = interp(c, new_times[i]);
  out.validate();
  return out;
}

SampledCurve reparametrize(const SampledCurve& c, const TimeReparam& z) {
  SampledCurve out;
  out.times = z.grid;
  out.points.resize(c.dim(), z.size());
  double hi = c.horizon();
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    double s = std::clamp(z.values[i], 0.0, hi);
    out.points.col(i) = interp(c, s);
  }
  out.validate();
  return out;
}

RangeSample range_of(const SampledCurve& c) {
  RangeSample r;
  r.trace.reserve(static_cast<size_t>(c.size()));
  for (Eigen::Index i = 0; i < c.size(); ++i) r.trace.push_back(c.points.col(i));
  r.limit = c.points.col(c.size() - 1);
  return r;
}

double point_to_curve_distance(const Point& x, const SampledCurve& c, const MetricSpace& space) {
  double best = space.distance(x, c.points.col(0));
  for (Eigen::Index i = 0; i + 1 < c.size(); ++i) {
    Point a = c.points.col(i);
    Point d = c.points.col(i + 1) - a;
    double dd = d.squaredNorm();
    double lambda = dd > 0.0 ? std::clamp((x - a).dot(d) / dd, 0.0, 1.0) : 0.0;
    best = std::min(best, space.distance(x, Point(a + lambda * d)));
  }
  return best;
}

double one_sided_range_gap(const SampledCurve& u, const SampledCurve& v, const MetricSpace& space) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    worst = std::max(worst, point_to_curve_distance(u.points.col(i), v, space));
  return worst;
}

double sup_distance(const SampledCurve& u, const SampledCurve& v, const MetricSpace& space) {
  double cap = std::min(u.horizon(), v.horizon());
  Eigen::VectorXd grid = merge_time_grids(u.times, v.times, cap);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    worst = std::max(worst, space.distance(interp(u, grid[i]), interp(v, grid[i])));
  return worst;
}

}  // namespace lambdaflow
