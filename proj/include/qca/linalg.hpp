#pragma once

#include <optional>
#include <vector>

#include "qca/rational.hpp"

namespace qca {

// Dense exact-rational matrix with the handful of solves the kernel needs:
// determinant, inverse, nullspace, and consistent-system solving by Gaussian
// elimination. Row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i][j]; }
  const Rat& at(int i, int j) const { return a_[i][j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rat& s) const;
  Matrix transposed() const;

  Rat trace() const;
  Rat determinant() const;

  // Throws std::domain_error when singular.
  Matrix inverse() const;

  // Basis of the right nullspace: solutions of A x = 0.
  std::vector<std::vector<Rat>> nullspace() const;

  // Solves A x = b. Returns nullopt when inconsistent. When the system is
  // underdetermined, free variables are set to zero.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  // Rank via row reduction.
  int rank() const;

 private:
  int rows_, cols_;
  std::vector<std::vector<Rat>> a_;
};

}  // namespace qca
