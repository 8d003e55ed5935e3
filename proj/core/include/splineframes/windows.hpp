#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace splineframes {

/// Piecewise polynomial on consecutive intervals [x_i, x_{i+1}).
///
/// Each piece is stored as coefficients c_0 + c_1 t + ... + c_d t^d in the
/// local coordinate t = x - x_i. Pieces are half-open on the right except
/// the last one, which is closed. Outside [x_0, x_n] the value is 0.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(std::vector<double> breakpoints,
                      std::vector<std::vector<double>> pieces);

  double operator()(double x) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  const std::vector<std::vector<double>>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }
  int degree() const;

  /// Value of piece `i` at local coordinate t, no range checks on t.
  double eval_piece(std::size_t i, double t) const;

  /// Exact integral of the stored polynomials over their intervals.
  double integral() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<std::vector<double>> pieces_;
};

/// g_N = g_1 * g_{N-1} with g_1 the indicator of [-1/2, 1/2].
///
/// Built by repeated convolution with the indicator: every new piece is a
/// difference of two shifted antiderivatives of the previous spline, so the
/// coefficients are exact rationals up to floating rounding. Breakpoints are
/// -N/2, -N/2 + 1, ..., N/2.
PiecewisePolynomial bspline_polynomial(int order);

enum class WindowKind { BSpline, Tabulated, Function };

/// Even, real, compactly supported window with support [-N/2, N/2].
///
/// Every kind is evaluated through its left half: g(x) is computed as
/// g(-|x|), so g(x) == g(-x) holds bit for bit. The support test compares
/// |x| against N/2 and never looks at values.
class Window {
 public:
  /// B-spline g_N. Throws DomainError for N < 1.
  static Window bspline(int order);

  /// Samples of g on [-N/2, 0], linearly interpolated and mirrored.
  /// Positions must be strictly increasing; values beyond the first or last
  /// sample (but inside the support) are held constant.
  static Window tabulated(std::vector<double> positions,
                          std::vector<double> values, double support_length);

  /// Wraps a user evaluator. Only its values on [-N/2, 0] are used.
  static Window from_function(std::function<double(double)> left_half,
                              double support_length);

  WindowKind kind() const { return kind_; }
  /// B-spline order, 0 for other kinds.
  int order() const { return order_; }
  double support_length() const { return support_length_; }
  double support_halfwidth() const { return 0.5 * support_length_; }

  /// Throws DomainError for non-finite x.
  double operator()(double x) const;

  /// Non-null only for BSpline windows.
  const PiecewisePolynomial* polynomial() const;

 private:
  struct Tabulation {
    std::vector<double> positions;
    std::vector<double> values;
    double operator()(double x) const;
  };

  Window(WindowKind kind, int order, double support_length);

  WindowKind kind_;
  int order_ = 0;
  double support_length_;
  std::shared_ptr<const PiecewisePolynomial> poly_;
  std::shared_ptr<const Tabulation> table_;
  std::function<double(double)> fn_;
};

double eval_window(const Window& w, double x);

/// g(x) - 2 g(x - a) + g(x - 2a)
double second_difference(const Window& w, double a, double x);

struct MembershipReport {
  bool a1_pass = true;  // evenness
  bool a2_pass = true;  // strictly increasing on [-N/2, 0]
  bool a3_pass = true;  // nonnegative second difference on the prescribed set
  double worst_violation = 0.0;
  std::vector<double> witness_points;

  bool pass() const { return a1_pass && a2_pass && a3_pass; }
};

/// Sampled check of the three conditions defining V_{N,a}.
///
/// The A3 set depends on a: for a < N/3 it is [-N/2, -N/4 + 3a/4]; for
/// a >= N/3 it is [-N/2, 0] together with the single point -N/4 + 3a/4.
/// A flat step counts as an A2 failure with violation DBL_MIN so that
/// worst_violation stays strictly positive whenever a check fails.
MembershipReport check_membership(const Window& w, double a,
                                  int grid_points = 4096, double tol = 1e-12);

}  // namespace splineframes
