#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "splineframes/regions.hpp"
#include "splineframes/windows.hpp"

namespace splineframes {

/// Solves G_m(x) v = b e_0, where e_0 selects the row ell = 0.
///
/// v[i] = h(x + (i - (m-1)) a). The pivoted LU solve is the computation path;
/// closed forms are only used for verification. Throws SingularityError when
/// |det G_m(x)| < 1e-14 * max|G_m(x)|^(2m-1), DomainError for |x| > a/2.
std::vector<double> solve_dual_at(const Window& w, const LatticeParams& p, int m, double x);

/// Sampled dual window supported on [-(2m-1)a/2, (2m-1)a/2].
///
/// The support splits into 2m-1 cells [ka - a/2, ka + a/2]. Each half cell
/// holds S = samples_per_cell midpoint samples with spacing a / (2S); the
/// left halves come from solves at x in (-a/2, 0], the right halves are the
/// mirror images, so values[i] == values[n-1-i] exactly.
class DualWindow {
 public:
  /// Throws DomainError when values.size() != 2S(2m-1) or values are not
  /// mirror symmetric.
  static DualWindow from_samples(LatticeParams p, int m, int samples_per_cell,
                                 std::vector<double> values);

  const LatticeParams& params() const { return p_; }
  int m() const { return m_; }
  int samples_per_cell() const { return samples_; }
  double support_halfwidth() const { return (2 * m_ - 1) * 0.5 * p_.a; }
  double spacing() const { return p_.a / (2.0 * samples_); }

  std::span<const double> positions() const { return positions_; }
  std::span<const double> values() const { return values_; }

  /// The jump candidates (2j-1)a/2 and their negatives, j = 1..m, ascending.
  std::vector<double> piece_boundaries() const;

  /// Nearest-sample lookup inside the cell containing y, 0 outside the
  /// support. At a cell boundary the value comes from the cell nearer the
  /// origin (the left limit for y > 0).
  double operator()(double y) const;

  double max_abs() const;

  DualWindow scaled(double factor) const;

 private:
  DualWindow(LatticeParams p, int m, int samples, std::vector<double> values);

  LatticeParams p_;
  int m_;
  int samples_;
  std::vector<double> positions_;
  std::vector<double> values_;
};

/// The compactly supported dual for (a, b) in T_m. Throws RegionError unless
/// classify(p) == T(m); SingularityError propagates from the solves.
DualWindow build_dual(const Window& w, const LatticeParams& p, int m, int samples_per_cell);

/// h(x) = b |Ã_m(x)| / |A_m(x)| for x in [-a/2, 0], Ã_m being A_m without
/// its last row and column.
///
/// |Ã_m| comes from the tridiagonal recurrence and the denominator from
/// det_formula, so neither shares code with the LU solve.
double dual_value_cramer(const Window& w, const LatticeParams& p, int m, double x);

struct JumpReport {
  double boundary = 0.0;     // a/2
  double left_value = 0.0;   // h(a/2 - eps)
  double right_value = 0.0;  // h(a/2 + eps)
  double threshold = 0.0;
  bool jump = false;         // left > threshold && right == 0
  std::size_t gap_samples = 0;     // samples strictly inside (a/2, a)
  double gap_max_abs = 0.0;
  bool vanishes_on_gap = false;
};

/// Looks for the jump of h at a/2. Requires m >= 2 and 0 < eps <= spacing/2.
JumpReport discontinuity_probe(const DualWindow& d, double eps);

/// position,value with comment lines "# N=", "# a=", "# b=", "# m=",
/// "# samples_per_cell=" and the boundary-value convention.
void write_dual_csv(std::ostream& os, const DualWindow& d);

DualWindow read_dual_csv(std::istream& is);

}  // namespace splineframes
