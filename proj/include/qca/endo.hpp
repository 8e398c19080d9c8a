#pragma once

#include <functional>

#include "qca/linalg.hpp"
#include "qca/multivector.hpp"

namespace qca {

// Linear operator on the 2^dim-dimensional algebra, stored densely in the
// graded-lexicographic blade order (Id, e1, ..., e1w..wn). Column b holds the
// image of basis blade b.
class Endo {
 public:
  explicit Endo(int dim);
  Endo(int dim, Matrix m);

  static Endo identity(int dim);
  static Endo zero(int dim);
  static Endo from_map(int dim, const std::function<Multivector(const Multivector&)>& f);

  int dim() const { return dim_; }
  int size() const { return 1 << dim_; }
  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  Multivector apply(const Multivector& u) const;
  Endo compose(const Endo& o) const;  // this after o

  friend bool operator==(const Endo& a, const Endo& b) {
    return a.dim_ == b.dim_ && a.m_ == b.m_;
  }
  friend bool operator!=(const Endo& a, const Endo& b) { return !(a == b); }

  Endo operator+(const Endo& o) const { return Endo(dim_, m_ + o.m_); }
  Endo operator-(const Endo& o) const { return Endo(dim_, m_ - o.m_); }
  Endo scaled(const Rat& s) const { return Endo(dim_, m_.scaled(s)); }

  // Entry at (output blade, input blade).
  const Rat& at(Blade row, Blade col) const;
  Rat& at(Blade row, Blade col);

 private:
  int dim_;
  Matrix m_;
};

}  // namespace qca
