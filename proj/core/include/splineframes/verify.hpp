#pragma once

#include <map>
#include <string>
#include <vector>

#include "splineframes/dual.hpp"
#include "splineframes/regions.hpp"
#include "splineframes/windows.hpp"

namespace splineframes {

/// How duality_residual obtains h(x + ka).
enum class DualLookup {
  Resolve,  // fresh LU solve at x, no interpolation error
  Sample,   // nearest stored sample; exact only when x hits the sample grid
};

struct DualityOptions {
  int grid_size = 4096;
  double tol = 1e-10;
  DualLookup lookup = DualLookup::Resolve;
  bool keep_per_x = false;
};

struct DualityReport {
  std::map<int, double> per_ell_max_residual;  // ell in {1-m, ..., m-1}
  int grid_size = 0;
  double tol = 0.0;
  bool pass = false;
  DualLookup lookup = DualLookup::Resolve;
  std::vector<double> xs;                    // filled when keep_per_x
  std::vector<std::vector<double>> per_x;    // per_x[i][ell + m - 1]

  double max_residual() const;
  /// "key=value" lines.
  std::string to_key_value() const;
  /// x,ell=1-m,...,ell=m-1 ; empty unless keep_per_x.
  std::string per_x_csv() const;
};

/// max over midpoints x of [-a/2, a/2] of
///   | sum_k g(x - ell/b + ka) h(x + ka) - b delta_{ell,0} |   for each ell.
/// Throws DomainError when d was built for other parameters.
DualityReport duality_residual(const Window& w, const DualWindow& d, const LatticeParams& p,
                               int m, const DualityOptions& opts = {});

/// (1/b) sum_j sup_x sum_n |g(x - na) g(x - na - j/b)|, sup over the grid
/// x_i = x0 + i a / grid_size on one period. The fixed offset x0 keeps the
/// grids nested under doubling while avoiding the breakpoints of piecewise
/// windows. A grid estimate, not a certified bound.
double bessel_bound_walnut(const Window& w, const LatticeParams& p, int grid_size);

struct BoundEstimate {
  double lower_A = 0.0;
  double upper_B = 0.0;
  std::string lower_method;
  std::string upper_method;

  bool consistent() const { return lower_A > 0.0 && lower_A <= upper_B; }
};

/// A = 1/B_h, B = B_g. Throws DomainError for nonpositive inputs.
BoundEstimate lower_bound_via_dual(double bessel_g, double bessel_h);

/// Wraps a sampled dual as an even window so it can go through the Walnut sum.
Window dual_as_window(const DualWindow& d);

struct PositivityReport {
  double min_det = 0.0;
  double argmin = 0.0;
  double min_left = 0.0;   // over grid points in [-a/2, 0]
  double min_right = 0.0;  // over grid points in [0, a/2]
  int grid_size = 0;

  std::string to_key_value() const;
};

/// min of det_direct(G_m(x)) over a grid of [-a/2, a/2] that includes both
/// endpoints and is exactly symmetric about 0. Throws RegionError unless
/// classify(p) == T(m), InvariantViolation with the witness x if the minimum
/// is not strictly positive.
PositivityReport positivity_sweep(const Window& w, const LatticeParams& p, int m,
                                  int grid_size);

struct CrosscheckReport {
  double max_deviation = 0.0;  // |formula - direct| / max(1, |direct|)
  double worst_x = 0.0;
  int grid_size = 0;
  double rel_tol = 0.0;
  bool pass = false;
  int product_points = 0;
  int sm_points = 0;
  int zm_points = 0;

  std::string to_key_value() const;
};

/// det_formula against det_direct on the same symmetric grid as
/// positivity_sweep. Throws RegionError unless classify(p) == T(m).
CrosscheckReport oracle_crosscheck(const Window& w, const LatticeParams& p, int m,
                                   int grid_size, double rel_tol);

/// n points on [-a/2, a/2], endpoints included, x[n-1-i] == -x[i].
std::vector<double> symmetric_grid(double a, int n);

}  // namespace splineframes
