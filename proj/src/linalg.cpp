#include "qca/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qca {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.a_[i][i] = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = a_[i][k];
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& y = o.a_[k][j];
        if (y != 0) out.a_[i][j] += x * y;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.a_[i][j] += o.a_[i][j];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.a_[i][j] -= o.a_[i][j];
  return out;
}

Matrix Matrix::scaled(const Rat& s) const {
  Matrix out = *this;
  for (auto& row : out.a_)
    for (auto& x : row) x *= s;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.a_[j][i] = a_[i][j];
  return out;
}

Rat Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rat t(0);
  for (int i = 0; i < rows_; ++i) t += a_[i][i];
  return t;
}

Rat Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  auto m = a_;
  Rat det(1);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat inv = Rat(1) / m[col][col];
    for (int r = col + 1; r < rows_; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] * inv;
      for (int j = col; j < cols_; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  auto m = a_;
  Matrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv.a_[pivot], inv.a_[col]);
    Rat f = Rat(1) / m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] *= f;
      inv.a_[col][j] *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat g = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv.a_[r][j] -= g * inv.a_[col][j];
      }
    }
  }
  return inv;
}

namespace {

// Row-reduces m in place; returns pivot column of each pivot row.
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[row]);
    Rat f = Rat(1) / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= f;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat g = m[r][col];
      for (int j = col; j < cols; ++j) m[r][j] -= g * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> Matrix::nullspace() const {
  auto m = a_;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> Matrix::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("rhs size mismatch");
  auto m = a_;
  for (int i = 0; i < rows_; ++i) m[i].push_back(b[i]);
  auto pivots = rref(m);
  // Inconsistent when a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rat> x(cols_, Rat(0));
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r) x[pivots[r]] = m[r][cols_];
  return x;
}

int Matrix::rank() const {
  auto m = a_;
  return static_cast<int>(rref(m).size());
}

}  // namespace qca
