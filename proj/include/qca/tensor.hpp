#pragma once

#include <map>
#include <string>
#include <vector>

#include "qca/multivector.hpp"

namespace qca {

// Formal sum of scalar-weighted blade tuples of fixed rank k >= 1. Holds
// co-product outputs, crossings and iterated co-products.
class TensorPoly {
 public:
  using Key = std::vector<Blade>;
  using Terms = std::map<Key, Rat>;

  TensorPoly(int dim, int rank) : dim_(dim), rank_(rank) {
    if (rank < 1) throw std::invalid_argument("tensor rank must be >= 1");
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("dim must be in 0..9");
  }

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, Rat c) {
    if (static_cast<int>(k.size()) != rank_) throw std::invalid_argument("tuple size != rank");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  TensorPoly& operator*=(const Rat& s);
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
  friend TensorPoly operator*(const Rat& s, TensorPoly a) { return a *= s; }

  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

  // e.g. "Id&t e1we2 + e1&t e2 - e2&t e1 + e1we2&t Id"
  std::string str() const;

 private:
  int dim_;
  int rank_;
  Terms terms_;
};

// Simple tensor u (x) v of rank 2.
TensorPoly tensor2(const Multivector& u, const Multivector& v);

// Grassmann co-product over splits: blade with index set S maps to the sum
// over ordered bipartitions S = S1 u S2 of sgn(S1,S2) b(S1) (x) b(S2), where
// sgn is the parity of sorting the concatenation (S1,S2) back into S.
TensorPoly gco(const Multivector& u);

// Applies gco to one slot of a tensor, raising the rank by one.
TensorPoly gco_slot(const TensorPoly& t, int slot);

// Applies a multivector->multivector map to one slot.
template <typename F>
TensorPoly map_slot(const TensorPoly& t, int slot, F&& f) {
  TensorPoly out(t.dim(), t.rank());
  for (const auto& [key, c] : t.terms()) {
    Multivector img = f(Multivector(t.dim(), key[slot], Rat(1)));
    for (const auto& [b, cb] : img.terms()) {
      auto k2 = key;
      k2[slot] = b;
      out.add_term(k2, c * cb);
    }
  }
  return out;
}

// Contracts two adjacent slots with a 2->1 product, lowering the rank by one.
template <typename Prod>
TensorPoly fuse_slots(const TensorPoly& t, int slot, Prod&& prod) {
  if (t.rank() < 2) throw std::invalid_argument("fuse needs rank >= 2");
  TensorPoly out(t.dim(), t.rank() - 1);
  for (const auto& [key, c] : t.terms()) {
    Multivector prodval = prod(Multivector(t.dim(), key[slot], Rat(1)),
                               Multivector(t.dim(), key[slot + 1], Rat(1)));
    for (const auto& [b, cb] : prodval.terms()) {
      TensorPoly::Key k2;
      k2.reserve(key.size() - 1);
      for (int i = 0; i < static_cast<int>(key.size()); ++i) {
        if (i == slot) {
          k2.push_back(b);
        } else if (i != slot + 1) {
          k2.push_back(key[i]);
        }
      }
      out.add_term(k2, c * cb);
    }
  }
  return out;
}

// Graded switch on two adjacent slots: sign (-1)^{|a||b|}.
TensorPoly gswitch(const TensorPoly& t, int slot);

// Product on rank-2 tensors with the graded switch on the inner legs:
// (a (x) b) * (c (x) d) = (-1)^{|b||c|} (a^c) (x) (b^d).
TensorPoly graded_tensor_mul(const TensorPoly& s, const TensorPoly& t);

}  // namespace qca
