#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace splineframes {

/// Row-major dense matrix. Sizes here never exceed 127 x 127.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  /// Copy of rows [r0, r0 + nr) x cols [c0, c0 + nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  double max_abs() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// PA = LU with partial pivoting (row with the largest |pivot| wins, first
/// one on ties). A zero pivot column marks the matrix singular and stops the
/// elimination.
struct LuFactorization {
  Matrix lu;  // unit-lower L below the diagonal, U on and above
  std::vector<std::size_t> perm;  // row i of PA is row perm[i] of A
  int sign = 1;
  bool singular = false;

  double determinant() const;
  /// Solves A x = rhs. Throws DomainError when singular.
  std::vector<double> solve(std::span<const double> rhs) const;
};

LuFactorization lu_factor(Matrix a);

/// 0 for singular input.
double det_lu(const Matrix& a);

/// Continuant recurrence f_i = d_i f_{i-1} - l_i u_{i-1} f_{i-2}. Reads only
/// the three central diagonals; the empty matrix has determinant 1.
double det_tridiagonal(const Matrix& a);

bool is_tridiagonal(const Matrix& a);

}  // namespace splineframes
