#include "qca/endo.hpp"

#include <stdexcept>

namespace qca {

Endo::Endo(int dim) : dim_(dim), m_(1 << dim, 1 << dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("dim must be in 0..9");
}

Endo::Endo(int dim, Matrix m) : dim_(dim), m_(std::move(m)) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("dim must be in 0..9");
  if (m_.rows() != (1 << dim) || m_.cols() != (1 << dim))
    throw std::invalid_argument("endo matrix must be 2^dim x 2^dim");
}

Endo Endo::identity(int dim) { return Endo(dim, Matrix::identity(1 << dim)); }

Endo Endo::zero(int dim) { return Endo(dim); }

Endo Endo::from_map(int dim, const std::function<Multivector(const Multivector&)>& f) {
  Endo e(dim);
  auto order = blade_order(dim);
  for (Blade b : order) {
    Multivector img = f(Multivector(dim, b, Rat(1)));
    int col = blade_position(b, dim);
    for (const auto& [ob, c] : img.terms()) e.m_.at(blade_position(ob, dim), col) = c;
  }
  return e;
}

Multivector Endo::apply(const Multivector& u) const {
  if (u.dim() != dim_) throw std::invalid_argument("dimension mismatch");
  auto order = blade_order(dim_);
  Multivector out(dim_);
  for (const auto& [b, c] : u.terms()) {
    int col = blade_position(b, dim_);
    for (int row = 0; row < m_.rows(); ++row) {
      const Rat& e = m_.at(row, col);
      if (e != 0) out.add_term(order[row], c * e);
    }
  }
  return out;
}

Endo Endo::compose(const Endo& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  return Endo(dim_, m_ * o.m_);
}

const Rat& Endo::at(Blade row, Blade col) const {
  return m_.at(blade_position(row, dim_), blade_position(col, dim_));
}

Rat& Endo::at(Blade row, Blade col) {
  return m_.at(blade_position(row, dim_), blade_position(col, dim_));
}

}  // namespace qca
