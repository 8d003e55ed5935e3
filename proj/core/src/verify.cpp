#include "splineframes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "splineframes/errors.hpp"
#include "splineframes/gram.hpp"
#include "splineframes/io.hpp"

namespace splineframes {

namespace {

void require_tm(const LatticeParams& p, int m, const char* op) {
  const RegionLabel label = classify(p);
  if (label != RegionLabel::t(m))
    throw RegionError(std::string(op) + ": (a, b) is classified " + label.to_string() +
                      ", not T(" + std::to_string(m) + ")");
}

// golden-ratio fraction of the period; any fixed irrational-looking offset works
constexpr double kWalnutOffset = 0.6180339887498949 / 64.0;

}  // namespace

double DualityReport::max_residual() const {
  double out = 0.0;
  for (const auto& [ell, r] : per_ell_max_residual) out = std::max(out, r);
  return out;
}

std::string DualityReport::to_key_value() const {
  std::ostringstream os;
  os << "duality.pass=" << (pass ? "true" : "false") << '\n'
     << "duality.grid_size=" << grid_size << '\n'
     << "duality.tol=" << format_double(tol) << '\n'
     << "duality.lookup=" << (lookup == DualLookup::Resolve ? "resolve" : "sample") << '\n'
     << "duality.max_residual=" << format_double(max_residual()) << '\n';
  for (const auto& [ell, r] : per_ell_max_residual)
    os << "duality.residual[ell=" << ell << "]=" << format_double(r) << '\n';
  return os.str();
}

std::string DualityReport::per_x_csv() const {
  std::ostringstream os;
  if (per_x.empty()) return {};
  os << 'x';
  for (const auto& [ell, r] : per_ell_max_residual) os << ",ell=" << ell;
  os << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << format_double(xs[i]);
    for (double r : per_x[i]) os << ',' << format_double(r);
    os << '\n';
  }
  return os.str();
}

DualityReport duality_residual(const Window& w, const DualWindow& d, const LatticeParams& p,
                               int m, const DualityOptions& opts) {
  if (!(d.params() == p) || d.m() != m)
    throw DomainError("duality_residual: dual window was built for other parameters");
  if (opts.grid_size < 1) throw DomainError("duality_residual: grid_size must be >= 1");

  DualityReport report;
  report.grid_size = opts.grid_size;
  report.tol = opts.tol;
  report.lookup = opts.lookup;
  for (int ell = 1 - m; ell <= m - 1; ++ell) report.per_ell_max_residual[ell] = 0.0;

  const auto n = static_cast<std::size_t>(2 * m - 1);
  std::vector<double> h(n);
  std::vector<double> row(n);
  for (int i = 0; i < opts.grid_size; ++i) {
    const double x = -0.5 * p.a + (i + 0.5) * p.a / opts.grid_size;
    if (opts.lookup == DualLookup::Resolve) {
      h = solve_dual_at(w, p, m, x);
    } else {
      for (int k = 1 - m; k <= m - 1; ++k)
        h[static_cast<std::size_t>(k + m - 1)] = d(x + k * p.a);
    }
    for (int ell = 1 - m; ell <= m - 1; ++ell) {
      double sum = 0.0;
      for (int k = 1 - m; k <= m - 1; ++k)
        sum += w(lattice_arg(p, x, ell, k)) * h[static_cast<std::size_t>(k + m - 1)];
      const double r = std::fabs(sum - (ell == 0 ? p.b : 0.0));
      row[static_cast<std::size_t>(ell + m - 1)] = r;
      auto& worst = report.per_ell_max_residual[ell];
      worst = std::max(worst, r);
    }
    if (opts.keep_per_x) {
      report.xs.push_back(x);
      report.per_x.push_back(row);
    }
  }
  report.pass = report.max_residual() <= opts.tol;
  return report;
}

double bessel_bound_walnut(const Window& w, const LatticeParams& p, int grid_size) {
  if (grid_size < 1) throw DomainError("bessel_bound_walnut: grid_size must be >= 1");
  const double half = w.support_halfwidth();
  const double span = w.support_length();
  const int jmax = static_cast<int>(std::floor(span * p.b));

  double total = 0.0;
  for (int j = -jmax; j <= jmax; ++j) {
    const double shift = j / p.b;
    double sup = 0.0;
    for (int i = 0; i < grid_size; ++i) {
      const double x = (kWalnutOffset + static_cast<double>(i) / grid_size) * p.a;
      const auto n_lo = static_cast<long>(std::ceil((x - half) / p.a));
      const auto n_hi = static_cast<long>(std::floor((x + half) / p.a));
      double s = 0.0;
      for (long n = n_lo; n <= n_hi; ++n) {
        const double y = x - static_cast<double>(n) * p.a;
        s += std::fabs(w(y) * w(y - shift));
      }
      sup = std::max(sup, s);
    }
    total += sup;
  }
  return total / p.b;
}

BoundEstimate lower_bound_via_dual(double bessel_g, double bessel_h) {
  if (!(bessel_g > 0.0) || !(bessel_h > 0.0))
    throw DomainError("Bessel bounds must be positive");
  return {1.0 / bessel_h, bessel_g, "inverse Bessel bound of the dual",
          "Walnut grid estimate"};
}

Window dual_as_window(const DualWindow& d) {
  return Window::from_function([d](double u) { return d(u); }, 2.0 * d.support_halfwidth());
}

std::vector<double> symmetric_grid(double a, int n) {
  if (n < 2) throw DomainError("grid needs at least two points");
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double step = a / (n - 1);
  for (int i = 0; i < n / 2; ++i) {
    xs[static_cast<std::size_t>(i)] = -0.5 * a + i * step;
    xs[static_cast<std::size_t>(n - 1 - i)] = -xs[static_cast<std::size_t>(i)];
  }
  if (n % 2 == 1) xs[static_cast<std::size_t>(n / 2)] = 0.0;
  return xs;
}

std::string PositivityReport::to_key_value() const {
  std::ostringstream os;
  os << "positivity.grid_size=" << grid_size << '\n'
     << "positivity.min_det=" << format_double(min_det) << '\n'
     << "positivity.argmin=" << format_double(argmin) << '\n'
     << "positivity.min_left=" << format_double(min_left) << '\n'
     << "positivity.min_right=" << format_double(min_right) << '\n';
  return os.str();
}

PositivityReport positivity_sweep(const Window& w, const LatticeParams& p, int m,
                                  int grid_size) {
  require_tm(p, m, "positivity_sweep");
  PositivityReport r;
  r.grid_size = grid_size;
  r.min_det = r.min_left = r.min_right = INFINITY;
  for (double x : symmetric_grid(p.a, grid_size)) {
    const double det = det_direct(build_gram(w, p, m, x));
    if (det < r.min_det) {
      r.min_det = det;
      r.argmin = x;
    }
    if (x <= 0.0) r.min_left = std::min(r.min_left, det);
    if (x >= 0.0) r.min_right = std::min(r.min_right, det);
  }
  if (!(r.min_det > 0.0))
    throw InvariantViolation("det G_m(x) = " + format_double(r.min_det) +
                                 " is not positive at x = " + format_double(r.argmin),
                             r.argmin);
  return r;
}

std::string CrosscheckReport::to_key_value() const {
  std::ostringstream os;
  os << "crosscheck.pass=" << (pass ? "true" : "false") << '\n'
     << "crosscheck.grid_size=" << grid_size << '\n'
     << "crosscheck.rel_tol=" << format_double(rel_tol) << '\n'
     << "crosscheck.max_deviation=" << format_double(max_deviation) << '\n'
     << "crosscheck.worst_x=" << format_double(worst_x) << '\n'
     << "crosscheck.product_points=" << product_points << '\n'
     << "crosscheck.sm_points=" << sm_points << '\n'
     << "crosscheck.zm_points=" << zm_points << '\n';
  return os.str();
}

CrosscheckReport oracle_crosscheck(const Window& w, const LatticeParams& p, int m,
                                   int grid_size, double rel_tol) {
  require_tm(p, m, "oracle_crosscheck");
  CrosscheckReport r;
  r.grid_size = grid_size;
  r.rel_tol = rel_tol;
  for (double x : symmetric_grid(p.a, grid_size)) {
    const double direct = det_direct(build_gram(w, p, m, x));
    const double formula = det_formula(w, p, m, x);
    const double dev = std::fabs(formula - direct) / std::max(1.0, std::fabs(direct));
    if (dev > r.max_deviation) {
      r.max_deviation = dev;
      r.worst_x = x;
    }
    switch (locate_case(p, m, std::min(x, -x)).tag) {
      case CaseTag::ProductCase: ++r.product_points; break;
      case CaseTag::SmCase: ++r.sm_points; break;
      case CaseTag::ZmCase: ++r.zm_points; break;
    }
  }
  r.pass = r.max_deviation <= rel_tol;
  return r;
}

}  // namespace splineframes
