#include "splineframes/matrix.hpp"

#include <cmath>
#include <utility>

#include "splineframes/errors.hpp"

namespace splineframes {

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw DomainError("matrix block out of range");
  Matrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

LuFactorization lu_factor(Matrix a) {
  if (!a.square()) throw DomainError("lu_factor needs a square matrix");
  const std::size_t n = a.rows();
  LuFactorization f;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = std::fabs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > best) {
        best = std::fabs(a(r, col));
        pivot = r;
      }
    if (best == 0.0) {
      f.singular = true;
      break;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(f.perm[col], f.perm[pivot]);
      f.sign = -f.sign;
    }
    const double d = a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double l = a(r, col) / d;
      a(r, col) = l;
      if (l == 0.0) continue;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= l * a(col, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

double LuFactorization::determinant() const {
  if (singular) return 0.0;
  double det = sign;
  for (std::size_t i = 0; i < lu.rows(); ++i) det *= lu(i, i);
  return det;
}

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
  if (singular) throw DomainError("solve on a singular factorization");
  const std::size_t n = lu.rows();
  if (rhs.size() != n) throw DomainError("rhs size mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = rhs[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * y[j];
    y[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * y[j];
    y[i] = s / lu(i, i);
  }
  return y;
}

double det_lu(const Matrix& a) { return lu_factor(a).determinant(); }

double det_tridiagonal(const Matrix& a) {
  if (!a.square()) throw DomainError("det_tridiagonal needs a square matrix");
  double prev = 1.0;  // f_{i-2}
  double cur = 1.0;   // f_{i-1}
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double next =
        i == 0 ? a(0, 0) : a(i, i) * cur - a(i, i - 1) * a(i - 1, i) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

bool is_tridiagonal(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap > 1 && a(i, j) != 0.0) return false;
    }
  return true;
}

}  // namespace splineframes
