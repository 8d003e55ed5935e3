#include "splineframes/gram.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "splineframes/errors.hpp"
#include "splineframes/io.hpp"

namespace splineframes {

namespace {

void require_x_range(const LatticeParams& p, double x, bool left_half_only) {
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  const double lo = -0.5 * p.a;
  const double hi = left_half_only ? 0.0 : 0.5 * p.a;
  if (x < lo || x > hi)
    throw DomainError("x = " + format_double(x) + " outside [" + format_double(lo) +
                      ", " + format_double(hi) + "]");
}

}  // namespace

GramMatrix build_gram(const Window& w, const LatticeParams& p, int m, double x) {
  if (m < 1 || m > kMaxGramIndex)
    throw DomainError("m must lie in [1, " + std::to_string(kMaxGramIndex) + "]");
  require_x_range(p, x, false);

  const auto n = static_cast<std::size_t>(2 * m - 1);
  Matrix entries(n, n);
  for (int ell = 1 - m; ell <= m - 1; ++ell)
    for (int k = 1 - m; k <= m - 1; ++k)
      entries(static_cast<std::size_t>(ell + m - 1), static_cast<std::size_t>(k + m - 1)) =
          w(lattice_arg(p, x, ell, k));
  return GramMatrix(p, m, x, std::move(entries));
}

BlockDecomposition block_decompose(const GramMatrix& g) {
  require_x_range(g.params(), g.x(), true);
  const int m = g.m();
  const auto mm = static_cast<std::size_t>(m);
  const Matrix& G = g.matrix();

  BlockDecomposition out;
  out.A = G.block(0, 0, mm, mm);
  out.B = G.block(0, mm, mm, mm - 1);
  out.C = G.block(mm, mm, mm - 1, mm - 1);

  // lower-left block: rows ell = 1..m-1, columns k = 1-m..0
  for (int ell = 1; ell <= m - 1; ++ell)
    for (int k = 1 - m; k <= 0; ++k)
      if (g.entry(ell, k) != 0.0)
        throw StructuralError("nonzero entry in the lower-left block at (ell=" +
                                  std::to_string(ell) + ", k=" + std::to_string(k) + ")",
                              ell, k);
  // B: rows ell = 1-m..0, columns k = 1..m-1; only (ell=0, k=1) may be nonzero
  for (int ell = 1 - m; ell <= 0; ++ell)
    for (int k = 1; k <= m - 1; ++k)
      if (!(ell == 0 && k == 1) && g.entry(ell, k) != 0.0)
        throw StructuralError("unexpected nonzero in B at (ell=" + std::to_string(ell) +
                                  ", k=" + std::to_string(k) + ")",
                              ell, k);
  out.zero_block_verified = true;
  return out;
}

double det_direct(const GramMatrix& g) { return det_lu(g.matrix()); }

CaseLabel locate_case(const LatticeParams& p, int m, double x) {
  require_x_range(p, x, true);
  const double N = p.N;
  const double a = p.a;
  const double b = p.b;
  if (N / 2.0 - 1.0 / b <= a - N / 2.0) return {CaseTag::ProductCase, 0};
  for (int ell = 1 - m; ell <= -1; ++ell) {
    const double lo = -ell * a + (ell + 1) / b - N / 2.0;
    const double hi = N / 2.0 + ell / b - (ell + 1) * a;
    if (x > lo && x < hi) return {CaseTag::ZmCase, ell};
  }
  return {CaseTag::SmCase, 0};
}

double submatrix_det_2x2(const Window& w, const LatticeParams& p, int k, double x) {
  const double g11 = w(lattice_arg(p, x, -k, -k));          // g(x + k/b - ka)
  const double g12 = w(lattice_arg(p, x, -k, 1 - k));       // g(x + k/b - (k-1)a)
  const double g21 = w(lattice_arg(p, x, 1 - k, -k));       // g(x + (k-1)/b - ka)
  const double g22 = w(lattice_arg(p, x, 1 - k, 1 - k));    // g(x + (k-1)/b - (k-1)a)
  return g11 * g22 - g21 * g12;
}

double det_formula(const Window& w, const LatticeParams& p, int m, double x) {
  if (!in_tm(p, m))
    throw RegionError("closed-form determinant needs (a, b) in T_" + std::to_string(m));
  require_x_range(p, x, false);
  if (x > 0.0) x = -x;

  const CaseLabel c = locate_case(p, m, x);
  double det = 1.0;
  int skip_hi = m + 1;  // excluded k: {skip_hi - 1, skip_hi}; none by default
  if (c.tag == CaseTag::ZmCase) {
    skip_hi = -c.ell;
    det = submatrix_det_2x2(w, p, skip_hi, x);
  }
  for (int k = 1 - m; k <= m - 1; ++k) {
    if (k == skip_hi || k == skip_hi - 1) continue;
    det *= diagonal_value(w, p, x, k);
  }
  return det;
}

std::vector<StructuralZero> structural_zeros(int m) {
  std::vector<StructuralZero> out;
  std::set<std::pair<int, int>> seen;
  auto add = [&](int ell, int k, ZeroRule rule) {
    if (std::abs(ell) > m - 1 || std::abs(k) > m - 1) return;
    if (seen.insert({ell, k}).second) out.push_back({ell, k, rule});
  };
  for (int j = 1; j <= m - 1; ++j) add(j, j - 1, ZeroRule::B);
  for (int j = 1; j <= m - 1; ++j)
    for (int i = 1 - m; i <= j - 2; ++i) add(j, i, ZeroRule::C);
  for (int j = 3 - m; j <= m - 1; ++j) add(-j, 2 - j, ZeroRule::D);
  // the extra restriction i != m never bites since i <= m-1
  for (int j = 3 - m; j <= m - 1; ++j)
    for (int i = 3 - j; i <= m - 1; ++i) add(-j, i, ZeroRule::E);
  return out;
}

void write_gram_csv(std::ostream& os, const GramMatrix& g) {
  const int m = g.m();
  os << "ell";
  for (int k = 1 - m; k <= m - 1; ++k) os << ",k=" << k;
  os << '\n';
  for (int ell = 1 - m; ell <= m - 1; ++ell) {
    os << ell;
    for (int k = 1 - m; k <= m - 1; ++k) os << ',' << format_double(g.entry(ell, k));
    os << '\n';
  }
}

}  // namespace splineframes
