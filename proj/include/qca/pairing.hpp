#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "qca/multivector.hpp"
#include "qca/tensor.hpp"

namespace qca {

// Bilinear form on the generating space V: B(e_i, e_j) = entries[i-1][j-1].
// No symmetry assumed.
struct VectorForm {
  int dim = 0;
  std::vector<std::vector<Rat>> entries;

  VectorForm() = default;
  VectorForm(int d, std::vector<std::vector<Rat>> e);

  static VectorForm zero(int dim);
  static VectorForm identity(int dim);

  const Rat& at(int i, int j) const { return entries[i - 1][j - 1]; }
  bool is_zero() const;
  bool is_antisymmetric() const;
  bool is_symmetric() const;
  VectorForm transposed() const;
  VectorForm symmetric_part() const;      // (B + B^T)/2
  VectorForm antisymmetric_part() const;  // (B - B^T)/2

  friend bool operator==(const VectorForm& a, const VectorForm& b) {
    return a.dim == b.dim && a.entries == b.entries;
  }
};

// The graded bilinear extension of B to the whole algebra, defined by the
// Laplace recursion
//   BF(u^v, w) = BF(u, w_(2)) BF(v, w_(1))
//   BF(u, v^w) = BF(u_(1), w) BF(u_(2), v)
// with value 1 on (Id,Id), B on grade 1, zero across unequal grades.
// Blade-pair values are memoized; the cache is guarded for concurrent use.
class GradedPairing {
 public:
  explicit GradedPairing(VectorForm base) : base_(std::move(base)) {}

  const VectorForm& base() const { return base_; }
  int dim() const { return base_.dim; }

  // Value on a pair of blades.
  Rat blade_value(Blade x, Blade y) const;

  // Bilinear extension to multivectors.
  Rat value(const Multivector& u, const Multivector& v) const;

 private:
  VectorForm base_;
  mutable std::map<std::pair<Blade, Blade>, Rat> memo_;
  mutable std::mutex mu_;

  Rat compute(Blade x, Blade y) const;
  Rat blade_value_nolock(Blade x, Blade y) const;
};

// Convenience: extend_pairing(B)(u,v).
Rat extend_pairing(const VectorForm& b, const Multivector& u, const Multivector& v);

// Signed-determinant closed form on equal-grade blades:
// (-1)^{r(r-1)/2} det[B(x_i, y_j)]. Cross-check for the recursion.
Rat graded_pairing_det_form(const VectorForm& b, Blade x, Blade y);

// Left contraction u _| v via (BF (x) id) o (id (x) gco):
// sum BF(u, v_(1)) v_(2).
Multivector left_contract(const Multivector& u, const Multivector& v, const VectorForm& b);
Multivector left_contract(const Multivector& u, const Multivector& v, const GradedPairing& bf);

// Right contraction u |_ v via (id (x) BF) o (gco (x) id):
// sum u_(1) BF(u_(2), v).
Multivector right_contract(const Multivector& u, const Multivector& v, const VectorForm& b);
Multivector right_contract(const Multivector& u, const Multivector& v, const GradedPairing& bf);

// Clifford product by Rota-Stein cliffordization:
// u o v = BF(u_(2), v_(1)) u_(1) ^ v_(2).
Multivector cmul(const Multivector& u, const Multivector& v, const VectorForm& b);
Multivector cmul(const Multivector& u, const Multivector& v, const GradedPairing& bf);

// Chevalley map applied to u: x _| u + x ^ u; x must be grade 1.
Multivector clifford_map(const Multivector& x, const Multivector& u, const VectorForm& b);

// Clifford co-product by co-cliffordization:
// D_C(a) = (a_(1) ^ C_(1)) (x) (C_(2) ^ a_(2)), where C^ = D_C(Id) is the
// graded co-scalar cap of C.
TensorPoly cco(const Multivector& u, const VectorForm& c);

// The cap D_C(Id) itself.
TensorPoly cco_cap(const VectorForm& c, int dim);

// Dotted wedge: cliffordization with an antisymmetric F.
Multivector dotted_wedge(const Multivector& u, const Multivector& v, const VectorForm& f);

enum class WickDirection { kToDotted, kFromDotted };

// Basis change between the wedge and the dotted-wedge filtration. to_dotted
// returns the coefficients of u in the dotted basis (named by the same
// blades); from_dotted re-expands dotted coefficients in the wedge basis.
Multivector wick_transform(const Multivector& u, const VectorForm& f, WickDirection dir);

// Anti-automorphism of cmul(.,.,B) fixing Id + V: decompose into Clifford
// words, reverse each word, recompose.
Multivector reversion_clifford(const Multivector& u, const VectorForm& b);

// Clifford monomial of grade-1 vectors, and its wedge counterpart, for the
// Rota-Stein inversion formulas. Returns the cmul-fold of the inputs.
Multivector clifford_word(const std::vector<Multivector>& vectors, const VectorForm& b);

}  // namespace qca
