#include "splineframes/dual.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "splineframes/errors.hpp"
#include "splineframes/gram.hpp"
#include "splineframes/io.hpp"
#include "splineframes/matrix.hpp"

namespace splineframes {

std::vector<double> solve_dual_at(const Window& w, const LatticeParams& p, int m, double x) {
  const GramMatrix g = build_gram(w, p, m, x);
  const LuFactorization lu = lu_factor(g.matrix());
  const double det = lu.determinant();
  const double scale = std::pow(g.matrix().max_abs(), 2 * m - 1);
  if (lu.singular || !(std::fabs(det) >= 1e-14 * scale))
    throw SingularityError("G_m(x) is singular at x = " + format_double(x) +
                               " (det ~ " + format_double(det) + ")",
                           x, det);
  std::vector<double> rhs(static_cast<std::size_t>(2 * m - 1), 0.0);
  rhs[static_cast<std::size_t>(m - 1)] = p.b;
  return lu.solve(rhs);
}

DualWindow::DualWindow(LatticeParams p, int m, int samples, std::vector<double> values)
    : p_(p), m_(m), samples_(samples), values_(std::move(values)) {
  const std::size_t n = values_.size();
  positions_.resize(n);
  const double half = support_halfwidth();
  const double step = spacing();
  for (std::size_t i = 0; i < n / 2; ++i) {
    positions_[i] = -half + (static_cast<double>(i) + 0.5) * step;
    positions_[n - 1 - i] = -positions_[i];
  }
}

DualWindow DualWindow::from_samples(LatticeParams p, int m, int samples_per_cell,
                                    std::vector<double> values) {
  if (m < 1 || samples_per_cell < 1)
    throw DomainError("dual window needs m >= 1 and samples_per_cell >= 1");
  const auto expected = static_cast<std::size_t>(2 * samples_per_cell) *
                        static_cast<std::size_t>(2 * m - 1);
  if (values.size() != expected)
    throw DomainError("dual window: expected " + std::to_string(expected) +
                      " samples, got " + std::to_string(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw DomainError("dual window: non-finite sample");
    if (values[i] != values[values.size() - 1 - i])
      throw DomainError("dual window: samples are not mirror symmetric");
  }
  return DualWindow(p, m, samples_per_cell, std::move(values));
}

std::vector<double> DualWindow::piece_boundaries() const {
  std::vector<double> out;
  for (int j = m_; j >= 1; --j) out.push_back(-(2 * j - 1) * 0.5 * p_.a);
  for (int j = 1; j <= m_; ++j) out.push_back((2 * j - 1) * 0.5 * p_.a);
  return out;
}

double DualWindow::operator()(double y) const {
  const double u = std::fabs(y);
  if (!(u <= support_halfwidth())) return 0.0;
  const double a = p_.a;
  const double t = u / a + 0.5;
  int cell = static_cast<int>(std::floor(t));
  if (cell > 0 && t == std::floor(t)) --cell;
  cell = std::min(cell, m_ - 1);

  const long per_cell = 2L * samples_;
  const double offset = u - (cell * a - 0.5 * a);
  long j = static_cast<long>(std::floor(offset / spacing()));
  j = std::clamp(j, 0L, per_cell - 1);
  return values_[static_cast<std::size_t>((cell + m_ - 1) * per_cell + j)];
}

double DualWindow::max_abs() const {
  double out = 0.0;
  for (double v : values_) out = std::max(out, std::fabs(v));
  return out;
}

DualWindow DualWindow::scaled(double factor) const {
  std::vector<double> v = values_;
  for (double& x : v) x *= factor;
  return DualWindow(p_, m_, samples_, std::move(v));
}

DualWindow build_dual(const Window& w, const LatticeParams& p, int m, int samples_per_cell) {
  if (classify(p) != RegionLabel::t(m))
    throw RegionError("build_dual: (a, b) is not in T_" + std::to_string(m) + " (classified " +
                      classify(p).to_string() + ")");
  if (samples_per_cell < 1) throw DomainError("samples_per_cell must be >= 1");

  const std::size_t per_cell = 2 * static_cast<std::size_t>(samples_per_cell);
  const std::size_t cells = static_cast<std::size_t>(2 * m - 1);
  const std::size_t n = per_cell * cells;
  std::vector<double> values(n, 0.0);
  const double step = p.a / (2.0 * samples_per_cell);

  for (int j = 0; j < samples_per_cell; ++j) {
    const double x = -0.5 * p.a + (j + 0.5) * step;
    const std::vector<double> v = solve_dual_at(w, p, m, x);
    for (std::size_t c = 0; c < cells; ++c)
      values[c * per_cell + static_cast<std::size_t>(j)] = v[c] + 0.0;  // no -0
  }
  const std::size_t half = per_cell / 2;
  for (std::size_t c = 0; c < cells; ++c)
    for (std::size_t j = 0; j < half; ++j) {
      const std::size_t i = c * per_cell + half + j;
      values[i] = values[n - 1 - i];
    }
  return DualWindow::from_samples(p, m, samples_per_cell, std::move(values));
}

double dual_value_cramer(const Window& w, const LatticeParams& p, int m, double x) {
  if (!std::isfinite(x) || x < -0.5 * p.a || x > 0.0)
    throw DomainError("dual_value_cramer needs x in [-a/2, 0]");
  const double denominator = det_formula(w, p, m, x);  // |A_m| * prod_{k<0} diag_k

  // Ã_m: rows ell = 1-m..-1, columns k = 1-m..-1 of G_m(x)
  const auto n = static_cast<std::size_t>(m - 1);
  Matrix reduced(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap > 1) continue;
      reduced(i, j) = w(lattice_arg(p, x, static_cast<int>(i) + 1 - m,
                                    static_cast<int>(j) + 1 - m));
    }
  double numerator = p.b * det_tridiagonal(reduced);
  for (int k = 1 - m; k <= -1; ++k) numerator *= diagonal_value(w, p, x, k);

  if (!(std::fabs(denominator) > 0.0))
    throw SingularityError("Cramer denominator vanishes at x = " + format_double(x), x,
                           denominator);
  return numerator / denominator;
}

JumpReport discontinuity_probe(const DualWindow& d, double eps) {
  if (d.m() < 2) throw DomainError("discontinuity probe needs m >= 2");
  if (!(eps > 0.0) || eps > 0.5 * d.spacing())
    throw DomainError("eps must lie in (0, spacing/2] = (0, " +
                      format_double(0.5 * d.spacing()) + "]");
  const double a = d.params().a;
  JumpReport r;
  r.boundary = 0.5 * a;
  r.left_value = d(r.boundary - eps);
  r.right_value = d(r.boundary + eps);
  r.threshold = 10.0 * eps;
  r.jump = r.left_value > r.threshold && r.right_value == 0.0;

  const auto pos = d.positions();
  const auto val = d.values();
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (pos[i] > 0.5 * a && pos[i] < a) {
      ++r.gap_samples;
      r.gap_max_abs = std::max(r.gap_max_abs, std::fabs(val[i]));
    }
  r.vanishes_on_gap = r.gap_samples > 0 && r.gap_max_abs == 0.0;
  return r;
}

void write_dual_csv(std::ostream& os, const DualWindow& d) {
  const auto& p = d.params();
  os << "# N=" << format_double(p.N) << '\n'
     << "# a=" << format_double(p.a) << '\n'
     << "# b=" << format_double(p.b) << '\n'
     << "# m=" << d.m() << '\n'
     << "# samples_per_cell=" << d.samples_per_cell() << '\n'
     << "# boundary_values=inner_limit\n"
     << "position,value\n";
  const auto pos = d.positions();
  const auto val = d.values();
  for (std::size_t i = 0; i < pos.size(); ++i)
    os << format_double(pos[i]) << ',' << format_double(val[i]) << '\n';
}

DualWindow read_dual_csv(std::istream& is) {
  const CsvTable table = read_csv(is);
  std::map<std::string, std::string> meta;
  for (const auto& c : table.comments)
    if (auto eq = c.find('='); eq != std::string::npos)
      meta[c.substr(0, eq)] = c.substr(eq + 1);
  auto field = [&meta](const char* key) {
    auto it = meta.find(key);
    if (it == meta.end()) throw DomainError(std::string("dual csv: missing '# ") + key + "='");
    return parse_real(it->second);
  };
  const auto p = LatticeParams::make(field("N"), field("a"), field("b"));
  const double m = field("m");
  const double s = field("samples_per_cell");
  if (m != std::floor(m) || s != std::floor(s) || m < 1 || m > kMaxGramIndex || s < 1)
    throw DomainError("dual csv: m and samples_per_cell must be positive integers");

  std::vector<double> positions, values;
  for (const auto& row : table.rows) {
    if (row.size() != 2) throw DomainError("dual csv: row with wrong column count");
    positions.push_back(parse_real(row[0]));
    values.push_back(parse_real(row[1]));
  }
  DualWindow d = DualWindow::from_samples(p, static_cast<int>(m), static_cast<int>(s),
                                          std::move(values));
  const double tol = 1e-9 * std::max(1.0, d.support_halfwidth());
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (std::fabs(positions[i] - d.positions()[i]) > tol)
      throw DomainError("dual csv: positions do not match the sample grid");
  return d;
}

}  // namespace splineframes
