#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "splineframes/matrix.hpp"
#include "splineframes/regions.hpp"
#include "splineframes/windows.hpp"

namespace splineframes {

inline constexpr int kMaxGramIndex = 64;

/// x - ell/b + k a, the argument of entry (ell, k) of G_m(x).
///
/// Every routine that needs a shifted window value goes through this helper
/// so that equal entries are bitwise equal across code paths.
inline double lattice_arg(const LatticeParams& p, double x, int ell, int k) {
  return x - static_cast<double>(ell) / p.b + static_cast<double>(k) * p.a;
}

/// g(x + k/b - k a), the k-th diagonal entry of G_m(x).
inline double diagonal_value(const Window& w, const LatticeParams& p, double x, int k) {
  return w(lattice_arg(p, x, -k, -k));
}

/// G_m(x) = [g(x - ell/b + k a)] for ell, k in {1-m, ..., m-1}.
///
/// Rows are stored with ell increasing downwards, so the top row is
/// ell = 1-m and carries the shift +(m-1)/b. In this order the entries
/// g(x + k/b - k a) sit on the main diagonal and, for x in [-a/2, 0], the
/// lower-left (m-1) x m block vanishes.
class GramMatrix {
 public:
  GramMatrix(LatticeParams p, int m, double x, Matrix entries)
      : p_(p), m_(m), x_(x), entries_(std::move(entries)) {}

  const LatticeParams& params() const { return p_; }
  int m() const { return m_; }
  double x() const { return x_; }
  int dim() const { return 2 * m_ - 1; }
  const Matrix& matrix() const { return entries_; }

  std::size_t row_of(int ell) const { return static_cast<std::size_t>(ell + m_ - 1); }
  std::size_t col_of(int k) const { return static_cast<std::size_t>(k + m_ - 1); }
  double entry(int ell, int k) const { return entries_(row_of(ell), col_of(k)); }

 private:
  LatticeParams p_;
  int m_;
  double x_;
  Matrix entries_;
};

/// Throws DomainError when m is outside [1, 64] or |x| > a/2.
GramMatrix build_gram(const Window& w, const LatticeParams& p, int m, double x);

/// G_m(x) = [[A, B], [0, C]] for x in [-a/2, 0].
struct BlockDecomposition {
  Matrix A;  // m x m, tridiagonal
  Matrix B;  // m x (m-1), only (m, 1) = g(x + a) may be nonzero
  Matrix C;  // (m-1) x (m-1), upper bidiagonal
  bool zero_block_verified = false;
};

/// Splits G and checks the structural zeros of the off-diagonal blocks
/// exactly. Throws StructuralError naming the first offending (ell, k), and
/// DomainError for x outside [-a/2, 0].
BlockDecomposition block_decompose(const GramMatrix& g);

/// Determinant by LU with partial pivoting.
double det_direct(const GramMatrix& g);

enum class CaseTag { ProductCase, SmCase, ZmCase };

struct CaseLabel {
  CaseTag tag = CaseTag::ProductCase;
  int ell = 0;  // ZmCase only, in {1-m, ..., -1}

  bool operator==(const CaseLabel&) const = default;
};

/// Which closed form of |G_m(x)| applies at x in [-a/2, 0].
///
/// When N/2 - 1/b <= a - N/2 the determinant is the diagonal product for all
/// x. Otherwise x in the open interval
///   (-ell a + (ell+1)/b - N/2,  N/2 + ell/b - (ell+1) a)
/// for some ell in {1-m, ..., -1} picks up one 2x2 minor; everywhere else
/// (interval endpoints included) the diagonal product holds.
CaseLabel locate_case(const LatticeParams& p, int m, double x);

/// det of [[g(x+k/b-ka), g(x+k/b-(k-1)a)], [g(x+(k-1)/b-ka), g(x+(k-1)/b-(k-1)a)]]
double submatrix_det_2x2(const Window& w, const LatticeParams& p, int k, double x);

/// Closed-form |G_m(x)|. Throws RegionError unless (a, b) is in T_m.
/// Points in (0, a/2] are evaluated at -x.
double det_formula(const Window& w, const LatticeParams& p, int m, double x);

enum class ZeroRule { B, C, D, E };

struct StructuralZero {
  int ell;
  int k;
  ZeroRule rule;
};

/// Entries of G_m(x) that vanish for every x in [-a/2, 0] when (a, b) is in
/// T_m and m >= 3:
///   (b) (ell, k) = (j, j-1),             j in {1, ..., m-1}
///   (c) (ell, k) = (j, i),               j in {1, ..., m-1}, i in {1-m, ..., j-2}
///   (d) (ell, k) = (-j, 2-j),            j in {3-m, ..., m-1}
///   (e) (ell, k) = (-j, i),              j in {3-m, ..., m-1}, i in {3-j, ..., m-1}
/// Duplicates are kept once, under the first rule that lists them.
std::vector<StructuralZero> structural_zeros(int m);

/// Rows in display order (ell = 1-m first), header "ell,k=1-m,...".
void write_gram_csv(std::ostream& os, const GramMatrix& g);

}  // namespace splineframes
