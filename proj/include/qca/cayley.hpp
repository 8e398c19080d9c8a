#pragma once

#include <vector>

#include "qca/hopf.hpp"
#include "qca/multivector.hpp"
#include "qca/tensor.hpp"

namespace qca {

// Grassmann-Cayley geometry over dim generators. The bracket context is the
// unique Grassmann Hopf integral: coefficient extraction at the top blade
// e1w..wn; the cointegral is the top blade itself.
struct BracketCtx {
  int dim = 0;

  explicit BracketCtx(int d) : dim(d) {}

  Blade top() const { return full_blade(dim); }
  Multivector cointegral() const { return Multivector(dim, top(), Rat(1)); }
  LinForm integral() const {
    LinForm f(dim);
    f.at(top()) = 1;
    return f;
  }
};

// Peano bracket: mu(wedge of all arguments). Alternating and multilinear;
// grade mismatch yields 0.
Rat bracket(const std::vector<Multivector>& args, const BracketCtx& ctx);
Rat bracket(const std::vector<Multivector>& args, int dim);

// Hopf meet: sum x_(1) [y ^ x_(2)].
Multivector meet(const Multivector& x, const Multivector& y);

// Vee product: sum [y_(1) ^ x] y_(2). Equals meet everywhere.
Multivector vee(const Multivector& x, const Multivector& y);

// Grassmann's Erganzung: the complementary blade with the sign fixed by
// bracket(u ^ erganzung(u)) == 1 on unit-coefficient blades; linear in u.
Multivector erganzung(const Multivector& u);

// Inverse of the Erganzung (also linear).
Multivector erganzung_inverse(const Multivector& u);

// Classical meet through double Erganzung: |(A v B) = (|A) ^ (|B). Agrees
// with the Hopf meet up to a per-grade orientation sign.
Multivector meet_classical(const Multivector& x, const Multivector& y);

// Co-product of the meet, obtained by transposing the meet's structure
// constants through the nondegenerate pairing <a,b> = mu(a ^ b). Lotze:
// dualizing it back through the same pairing returns the wedge.
TensorPoly meet_coproduct(const Multivector& x);

// The product dualized back from meet_coproduct through <.,.>; used by the
// Lotze round-trip check.
Multivector lotze_product(const Multivector& a, const Multivector& b);

}  // namespace qca
