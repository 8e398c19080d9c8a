#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "qca/blade.hpp"
#include "qca/rational.hpp"

namespace qca {

// Sparse element of the Grassmann algebra over dim generators: a map from
// basis blades to exact rational coefficients. Zero coefficients are never
// stored. Immutable by convention once built; all operations return fresh
// values.
class Multivector {
 public:
  struct GradedLexLess {
    bool operator()(Blade a, Blade b) const { return graded_lex_less(a, b); }
  };
  using Terms = std::map<Blade, Rat, GradedLexLess>;

  Multivector() : dim_(0) {}
  explicit Multivector(int dim) : dim_(check_dim(dim)) {}
  Multivector(int dim, Blade b, Rat c = Rat(1)) : dim_(check_dim(dim)) {
    add_term(b, std::move(c));
  }

  static Multivector zero(int dim) { return Multivector(dim); }
  static Multivector unit(int dim) { return Multivector(dim, 0, Rat(1)); }
  static Multivector generator(int dim, int i) {
    if (i < 1 || i > dim) throw std::invalid_argument("generator index out of range");
    return Multivector(dim, Blade(1) << (i - 1));
  }

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(Blade b, Rat c) {
    if (b > full_blade(dim_)) throw std::invalid_argument("blade outside algebra dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(b, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Rat& s);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Rat& s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= Rat(-1); }

  // Canonical text form, e.g. "Id + 3/2*e1 - e1we2"; "0" when empty.
  std::string str() const;

 private:
  static int check_dim(int dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("dim must be in 0..9");
    return dim;
  }

  int dim_;
  Terms terms_;

  void check_same_dim(const Multivector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  }
};

// Exterior product. Bilinear, associative, graded-anticommutative; the sign
// on blades is the parity of the merge permutation, repeated indices give 0.
Multivector wedge(const Multivector& u, const Multivector& v);

// Keeps exactly the grade-r part of u.
Multivector grade_project(const Multivector& u, int r);

// Blade of grade k -> (-1)^k blade. Algebra automorphism of wedge.
Multivector grade_involution(const Multivector& u);

// Blade of grade k -> (-1)^{k(k-1)/2} blade. Anti-automorphism of wedge.
Multivector reversion_wedge(const Multivector& u);

// Coefficient of Id.
Rat counit(const Multivector& u);

// Parses the canonical blade naming ("Id", "e2", "e1we2we5").
Blade parse_blade(const std::string& name, int dim);

}  // namespace qca
