#include "qca/pairing.hpp"

#include <stdexcept>

#include "qca/linalg.hpp"

namespace qca {

VectorForm::VectorForm(int d, std::vector<std::vector<Rat>> e) : dim(d), entries(std::move(e)) {
  if (d < 0 || d > kMaxDim) throw std::invalid_argument("dim must be in 0..9");
  if (static_cast<int>(entries.size()) != d) throw std::invalid_argument("form is not dim x dim");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("form is not dim x dim");
}

VectorForm VectorForm::zero(int dim) {
  return VectorForm(dim, std::vector<std::vector<Rat>>(dim, std::vector<Rat>(dim, Rat(0))));
}

VectorForm VectorForm::identity(int dim) {
  auto f = zero(dim);
  for (int i = 0; i < dim; ++i) f.entries[i][i] = 1;
  return f;
}

bool VectorForm::is_zero() const {
  for (const auto& row : entries)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

bool VectorForm::is_antisymmetric() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (entries[i][j] != -entries[j][i]) return false;
  return true;
}

bool VectorForm::is_symmetric() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (entries[i][j] != entries[j][i]) return false;
  return true;
}

VectorForm VectorForm::transposed() const {
  auto f = zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) f.entries[i][j] = entries[j][i];
  return f;
}

VectorForm VectorForm::symmetric_part() const {
  auto f = zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) f.entries[i][j] = (entries[i][j] + entries[j][i]) / 2;
  return f;
}

VectorForm VectorForm::antisymmetric_part() const {
  auto f = zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) f.entries[i][j] = (entries[i][j] - entries[j][i]) / 2;
  return f;
}

Rat GradedPairing::blade_value(Blade x, Blade y) const {
  if (grade(x) != grade(y)) return Rat(0);
  if (x == 0) return Rat(1);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find({x, y});
  if (it != memo_.end()) return it->second;
  Rat v = compute(x, y);
  memo_.emplace(std::make_pair(x, y), v);
  return v;
}

Rat GradedPairing::compute(Blade x, Blade y) const {
  // Expand the first factor of x along the splits (y \ {j}, {j}) of y:
  // BF(x1 ^ x', y) = sum_j sgn(y\{j},{j}) B(x1, j) BF(x', y\{j}).
  int x1 = std::countr_zero(x) + 1;
  Blade xrest = x & (x - 1);
  int k = grade(y);
  Rat acc(0);
  int pos = 0;
  Blade rest = y;
  while (rest) {
    int bit = std::countr_zero(rest);
    ++pos;  // 1-based position of this index inside y
    int sign = ((k - pos) & 1) ? -1 : 1;
    const Rat& bij = base_.at(x1, bit + 1);
    if (bij != 0) {
      Blade yrest = y & ~(Blade(1) << bit);
      Rat sub = (xrest == 0 && yrest == 0) ? Rat(1) : blade_value_nolock(xrest, yrest);
      if (sub != 0) acc += Rat(sign) * bij * sub;
    }
    rest &= rest - 1;
  }
  return acc;
}

// Private recursion helper: assumes the mutex is already held by the caller.
// (Defined out-of-line as a lambda-free static to keep the header small.)
Rat GradedPairing::blade_value_nolock(Blade x, Blade y) const {
  if (grade(x) != grade(y)) return Rat(0);
  if (x == 0) return Rat(1);
  auto it = memo_.find({x, y});
  if (it != memo_.end()) return it->second;
  Rat v = compute(x, y);
  memo_.emplace(std::make_pair(x, y), v);
  return v;
}

Rat GradedPairing::value(const Multivector& u, const Multivector& v) const {
  if (u.dim() != base_.dim || v.dim() != base_.dim)
    throw std::invalid_argument("dimension mismatch");
  Rat acc(0);
  for (const auto& [x, cx] : u.terms())
    for (const auto& [y, cy] : v.terms()) {
      if (grade(x) != grade(y)) continue;
      acc += cx * cy * blade_value(x, y);
    }
  return acc;
}

Rat extend_pairing(const VectorForm& b, const Multivector& u, const Multivector& v) {
  return GradedPairing(b).value(u, v);
}

Rat graded_pairing_det_form(const VectorForm& b, Blade x, Blade y) {
  if (grade(x) != grade(y)) return Rat(0);
  auto xi = blade_indices(x);
  auto yi = blade_indices(y);
  int r = static_cast<int>(xi.size());
  if (r == 0) return Rat(1);
  Matrix m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m.at(i, j) = b.at(xi[i], yi[j]);
  Rat d = m.determinant();
  return ((r * (r - 1) / 2) & 1) ? -d : d;
}

Multivector left_contract(const Multivector& u, const Multivector& v, const GradedPairing& bf) {
  if (u.dim() != bf.dim() || v.dim() != bf.dim())
    throw std::invalid_argument("dimension mismatch");
  Multivector out(v.dim());
  for (const auto& [x, cx] : u.terms()) {
    int gx = grade(x);
    for (const auto& [y, cy] : v.terms()) {
      if (grade(y) < gx) continue;
      // Splits (y1, y2) of y with |y1| == |x|.
      Blade s = y;
      while (true) {
        if (grade(s) == gx) {
          Rat val = bf.blade_value(x, s);
          if (val != 0) {
            Blade rest = y & ~s;
            out.add_term(rest, cx * cy * val * merge_sign(s, rest));
          }
        }
        if (s == 0) break;
        s = (s - 1) & y;
      }
    }
  }
  return out;
}

Multivector left_contract(const Multivector& u, const Multivector& v, const VectorForm& b) {
  GradedPairing bf(b);
  return left_contract(u, v, bf);
}

Multivector right_contract(const Multivector& u, const Multivector& v, const GradedPairing& bf) {
  if (u.dim() != bf.dim() || v.dim() != bf.dim())
    throw std::invalid_argument("dimension mismatch");
  Multivector out(u.dim());
  for (const auto& [y, cy] : v.terms()) {
    int gy = grade(y);
    for (const auto& [x, cx] : u.terms()) {
      if (grade(x) < gy) continue;
      Blade s = x;
      while (true) {
        Blade rest = x & ~s;  // s = x_(1), rest = x_(2)
        if (grade(rest) == gy) {
          Rat val = bf.blade_value(rest, y);
          if (val != 0) out.add_term(s, cx * cy * val * merge_sign(s, rest));
        }
        if (s == 0) break;
        s = (s - 1) & x;
      }
    }
  }
  return out;
}

Multivector right_contract(const Multivector& u, const Multivector& v, const VectorForm& b) {
  GradedPairing bf(b);
  return right_contract(u, v, bf);
}

Multivector cmul(const Multivector& u, const Multivector& v, const GradedPairing& bf) {
  if (u.dim() != bf.dim() || v.dim() != bf.dim())
    throw std::invalid_argument("dimension mismatch");
  Multivector out(u.dim());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      // u split (a1, a2), v split (b1, b2); BF eats (a2, b1).
      Blade a1 = a;
      while (true) {
        Blade a2 = a & ~a1;
        int ga2 = grade(a2);
        int sa = merge_sign(a1, a2);
        Blade b1 = b;
        while (true) {
          if (grade(b1) == ga2) {
            Rat val = bf.blade_value(a2, b1);
            if (val != 0) {
              Blade b2 = b & ~b1;
              if (!(a1 & b2)) {
                int sb = merge_sign(b1, b2);
                int sw = merge_sign(a1, b2);
                out.add_term(a1 | b2, ca * cb * val * Rat(sa * sb * sw));
              }
            }
          }
          if (b1 == 0) break;
          b1 = (b1 - 1) & b;
        }
        if (a1 == 0) break;
        a1 = (a1 - 1) & a;
      }
    }
  }
  return out;
}

Multivector cmul(const Multivector& u, const Multivector& v, const VectorForm& b) {
  GradedPairing bf(b);
  return cmul(u, v, bf);
}

Multivector clifford_map(const Multivector& x, const Multivector& u, const VectorForm& b) {
  for (const auto& [blade, c] : x.terms())
    if (grade(blade) != 1) throw std::invalid_argument("clifford_map needs a grade-1 element");
  return left_contract(x, u, b) + wedge(x, u);
}

TensorPoly cco_cap(const VectorForm& c, int dim) {
  if (c.dim != dim) throw std::invalid_argument("dimension mismatch");
  GradedPairing cf(c);
  TensorPoly cap(dim, 2);
  for (Blade x = 0; x < (Blade(1) << dim); ++x) {
    for (Blade y = 0; y < (Blade(1) << dim); ++y) {
      if (grade(x) != grade(y)) continue;
      Rat v = cf.blade_value(x, y);
      if (v != 0) cap.add_term({x, y}, v);
    }
  }
  return cap;
}

TensorPoly cco(const Multivector& u, const VectorForm& c) {
  if (u.dim() != c.dim) throw std::invalid_argument("dimension mismatch");
  int dim = u.dim();
  TensorPoly cap = cco_cap(c, dim);
  TensorPoly out(dim, 2);
  TensorPoly split = gco(u);
  for (const auto& [key, cs] : split.terms()) {
    Blade a1 = key[0], a2 = key[1];
    for (const auto& [ck, cc] : cap.terms()) {
      Blade c1 = ck[0], c2 = ck[1];
      if ((a1 & c1) || (c2 & a2)) continue;
      int sign = merge_sign(a1, c1) * merge_sign(c2, a2);
      out.add_term({a1 | c1, c2 | a2}, cs * cc * sign);
    }
  }
  return out;
}

Multivector dotted_wedge(const Multivector& u, const Multivector& v, const VectorForm& f) {
  if (!f.is_antisymmetric()) throw std::invalid_argument("dotted wedge needs antisymmetric F");
  return cmul(u, v, f);
}

namespace {

// Columns of the change-of-basis matrix: the word-basis element for each
// blade, expanded in the wedge basis. words(S) folds `prod` over the
// generators of S in ascending order.
template <typename Fold>
Matrix word_basis_matrix(int dim, Fold&& fold) {
  auto order = blade_order(dim);
  int n = static_cast<int>(order.size());
  Matrix m(n, n);
  for (int col = 0; col < n; ++col) {
    Multivector w = fold(order[col]);
    for (const auto& [b, c] : w.terms()) m.at(blade_position(b, dim), col) = c;
  }
  return m;
}

Multivector fold_word(Blade s, int dim, const GradedPairing& bf, bool reversed) {
  Multivector acc = Multivector::unit(dim);
  auto idx = blade_indices(s);
  if (reversed) std::reverse(idx.begin(), idx.end());
  for (int i : idx) acc = cmul(acc, Multivector::generator(dim, i), bf);
  return acc;
}

Multivector apply_matrix(const Matrix& m, const Multivector& u) {
  int dim = u.dim();
  auto order = blade_order(dim);
  Multivector out(dim);
  for (const auto& [b, c] : u.terms()) {
    int col = blade_position(b, dim);
    for (int row = 0; row < static_cast<int>(order.size()); ++row) {
      const Rat& e = m.at(row, col);
      if (e != 0) out.add_term(order[row], c * e);
    }
  }
  return out;
}

}  // namespace

Multivector wick_transform(const Multivector& u, const VectorForm& f, WickDirection dir) {
  if (!f.is_antisymmetric()) throw std::invalid_argument("wick transform needs antisymmetric F");
  if (u.dim() != f.dim) throw std::invalid_argument("dimension mismatch");
  int dim = u.dim();
  GradedPairing bf(f);
  Matrix t = word_basis_matrix(dim, [&](Blade s) { return fold_word(s, dim, bf, false); });
  if (dir == WickDirection::kFromDotted) return apply_matrix(t, u);
  Matrix inv = t.inverse();
  return apply_matrix(inv, u);
}

Multivector reversion_clifford(const Multivector& u, const VectorForm& b) {
  if (u.dim() != b.dim) throw std::invalid_argument("dimension mismatch");
  int dim = u.dim();
  GradedPairing bf(b);
  Matrix words = word_basis_matrix(dim, [&](Blade s) { return fold_word(s, dim, bf, false); });
  Matrix rwords = word_basis_matrix(dim, [&](Blade s) { return fold_word(s, dim, bf, true); });
  // u = sum c_S W_S  =>  rev(u) = sum c_S W_S^rev.
  Matrix inv = words.inverse();
  return apply_matrix(rwords, apply_matrix(inv, u));
}

Multivector clifford_word(const std::vector<Multivector>& vectors, const VectorForm& b) {
  if (vectors.empty()) throw std::invalid_argument("empty word");
  GradedPairing bf(b);
  int dim = b.dim;
  Multivector acc = Multivector::unit(dim);
  for (const auto& x : vectors) {
    for (const auto& [blade, c] : x.terms())
      if (grade(blade) != 1) throw std::invalid_argument("clifford_word needs grade-1 inputs");
    acc = cmul(acc, x, bf);
  }
  return acc;
}

}  // namespace qca
