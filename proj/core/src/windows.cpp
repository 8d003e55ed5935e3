#include "splineframes/windows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "splineframes/errors.hpp"

namespace splineframes {

namespace {

double horner(const std::vector<double>& c, double t) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<double> antiderivative(const std::vector<double>& c) {
  std::vector<double> out(c.size() + 1, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i)
    out[i + 1] = c[i] / static_cast<double>(i + 1);
  return out;
}

// a - b, padding the shorter one with zeros
std::vector<double> subtract(const std::vector<double>& a,
                             const std::vector<double>& b) {
  std::vector<double> out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = lo + i * h;
  xs.back() = hi;
  return xs;
}

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(
    std::vector<double> breakpoints, std::vector<std::vector<double>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size())
    throw DomainError("piecewise polynomial: need one piece per interval");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw DomainError("piecewise polynomial: breakpoints must increase");
}

int PiecewisePolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& p : pieces_) d = std::max(d, p.size());
  return static_cast<int>(d) - 1;
}

double PiecewisePolynomial::eval_piece(std::size_t i, double t) const {
  return horner(pieces_[i], t);
}

double PiecewisePolynomial::operator()(double x) const {
  if (x < breakpoints_.front() || x > breakpoints_.back()) return 0.0;
  // first breakpoint strictly greater than x; the last piece is closed
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  i = std::min(i == 0 ? 0 : i - 1, pieces_.size() - 1);
  return horner(pieces_[i], x - breakpoints_[i]);
}

double PiecewisePolynomial::integral() const {
  double total = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    total += horner(antiderivative(pieces_[i]),
                    breakpoints_[i + 1] - breakpoints_[i]);
  return total;
}

PiecewisePolynomial bspline_polynomial(int order) {
  if (order < 1) throw DomainError("bspline order must be >= 1");

  std::vector<std::vector<double>> pieces{{1.0}};
  for (int n = 2; n <= order; ++n) {
    // G(left_j + s) = cumulative_j + P_j(s), with P_j the local antiderivative
    const std::size_t prev = pieces.size();
    std::vector<std::vector<double>> anti(prev);
    std::vector<double> cumulative(prev + 1, 0.0);
    for (std::size_t j = 0; j < prev; ++j) {
      anti[j] = antiderivative(pieces[j]);
      cumulative[j + 1] = cumulative[j] + horner(anti[j], 1.0);
    }

    // g_n(x) = G(x + 1/2) - G(x - 1/2); on new piece i the two shifted
    // arguments land on old pieces i and i - 1 at the same local coordinate
    std::vector<std::vector<double>> next(prev + 1);
    for (std::size_t i = 0; i <= prev; ++i) {
      std::vector<double> upper{cumulative[prev]};
      if (i < prev) {
        upper = anti[i];
        upper[0] += cumulative[i];
      }
      std::vector<double> lower{0.0};
      if (i >= 1) {
        lower = anti[i - 1];
        lower[0] += cumulative[i - 1];
      }
      next[i] = subtract(upper, lower);
    }
    pieces = std::move(next);
  }

  std::vector<double> breakpoints(pieces.size() + 1);
  for (std::size_t i = 0; i < breakpoints.size(); ++i)
    breakpoints[i] = -0.5 * order + static_cast<double>(i);
  return PiecewisePolynomial(std::move(breakpoints), std::move(pieces));
}

double Window::Tabulation::operator()(double x) const {
  if (x <= positions.front()) return values.front();
  if (x >= positions.back()) return values.back();
  auto it = std::upper_bound(positions.begin(), positions.end(), x);
  const auto hi = static_cast<std::size_t>(it - positions.begin());
  const auto lo = hi - 1;
  const double t = (x - positions[lo]) / (positions[hi] - positions[lo]);
  return values[lo] + t * (values[hi] - values[lo]);
}

Window::Window(WindowKind kind, int order, double support_length)
    : kind_(kind), order_(order), support_length_(support_length) {}

Window Window::bspline(int order) {
  Window w(WindowKind::BSpline, order, static_cast<double>(order));
  w.poly_ = std::make_shared<const PiecewisePolynomial>(bspline_polynomial(order));
  return w;
}

Window Window::tabulated(std::vector<double> positions,
                         std::vector<double> values, double support_length) {
  if (!(support_length > 0.0) || !std::isfinite(support_length))
    throw DomainError("tabulated window: support length must be positive");
  if (positions.size() < 2 || positions.size() != values.size())
    throw DomainError("tabulated window: need at least two (x, value) samples");
  const double half = 0.5 * support_length;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (!std::isfinite(positions[i]) || !std::isfinite(values[i]))
      throw DomainError("tabulated window: non-finite sample");
    if (positions[i] < -half || positions[i] > 0.0)
      throw DomainError("tabulated window: sample position " +
                        std::to_string(positions[i]) + " outside [-N/2, 0]");
    if (i > 0 && !(positions[i] > positions[i - 1]))
      throw DomainError("tabulated window: positions must strictly increase");
  }
  Window w(WindowKind::Tabulated, 0, support_length);
  w.table_ = std::make_shared<const Tabulation>(
      Tabulation{std::move(positions), std::move(values)});
  return w;
}

Window Window::from_function(std::function<double(double)> left_half,
                             double support_length) {
  if (!(support_length > 0.0) || !std::isfinite(support_length))
    throw DomainError("window: support length must be positive");
  if (!left_half) throw DomainError("window: empty evaluator");
  Window w(WindowKind::Function, 0, support_length);
  w.fn_ = std::move(left_half);
  return w;
}

double Window::operator()(double x) const {
  if (!std::isfinite(x)) throw DomainError("window evaluated at non-finite x");
  const double u = -std::fabs(x);
  if (u < -support_halfwidth()) return 0.0;
  switch (kind_) {
    case WindowKind::BSpline:
      return (*poly_)(u);
    case WindowKind::Tabulated:
      return (*table_)(u);
    case WindowKind::Function:
      return fn_(u);
  }
  return 0.0;
}

const PiecewisePolynomial* Window::polynomial() const { return poly_.get(); }

double eval_window(const Window& w, double x) { return w(x); }

double second_difference(const Window& w, double a, double x) {
  return w(x) - 2.0 * w(x - a) + w(x - 2.0 * a);
}

MembershipReport check_membership(const Window& w, double a, int grid_points,
                                  double tol) {
  const double n = w.support_length();
  if (!(a > 0.0) || !(a < n))
    throw DomainError("membership check requires 0 < a < N");
  if (grid_points < 2) throw DomainError("membership check needs >= 2 points");

  MembershipReport report;
  auto fail = [&report](bool& flag, double violation, double x) {
    flag = false;
    report.worst_violation = std::max(report.worst_violation, violation);
    report.witness_points.push_back(x);
  };

  const double half = 0.5 * n;
  const auto left = linspace(-half, 0.0, grid_points);

  for (double x : left) {
    const double d = std::fabs(w(x) - w(-x));
    if (d > tol) fail(report.a1_pass, d, x);
  }

  for (std::size_t i = 1; i < left.size(); ++i) {
    const double lo = w(left[i - 1]);
    const double hi = w(left[i]);
    if (!(hi > lo))
      fail(report.a2_pass,
           std::max(lo - hi, std::numeric_limits<double>::min()), left[i]);
  }

  const double pivot = -0.25 * n + 0.75 * a;
  std::vector<double> a3_points =
      a < n / 3.0 ? linspace(-half, pivot, grid_points)
                  : linspace(-half, 0.0, grid_points);
  if (!(a < n / 3.0)) a3_points.push_back(pivot);
  for (double x : a3_points) {
    const double d2 = second_difference(w, a, x);
    if (d2 < -tol) fail(report.a3_pass, -d2, x);
  }

  return report;
}

}  // namespace splineframes
