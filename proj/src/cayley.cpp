#include "qca/cayley.hpp"

namespace qca {

Rat bracket(const std::vector<Multivector>& args, const BracketCtx& ctx) {
  Multivector acc = Multivector::unit(ctx.dim);
  for (const auto& a : args) acc = wedge(acc, a);
  return acc.coeff(ctx.top());
}

Rat bracket(const std::vector<Multivector>& args, int dim) {
  return bracket(args, BracketCtx(dim));
}

Multivector meet(const Multivector& x, const Multivector& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  int dim = x.dim();
  Blade top = full_blade(dim);
  Multivector out(dim);
  for (const auto& [b, c] : x.terms()) {
    TensorPoly split = gco(Multivector(dim, b));
    for (const auto& [key, sc] : split.terms()) {
      Rat br = wedge(y, Multivector(dim, key[1])).coeff(top);
      if (br != 0) out.add_term(key[0], c * sc * br);
    }
  }
  return out;
}

Multivector vee(const Multivector& x, const Multivector& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  int dim = x.dim();
  Blade top = full_blade(dim);
  Multivector out(dim);
  for (const auto& [b, c] : y.terms()) {
    TensorPoly split = gco(Multivector(dim, b));
    for (const auto& [key, sc] : split.terms()) {
      Rat br = wedge(Multivector(dim, key[0]), x).coeff(top);
      if (br != 0) out.add_term(key[1], c * sc * br);
    }
  }
  return out;
}

Multivector erganzung(const Multivector& u) {
  int dim = u.dim();
  Blade top = full_blade(dim);
  Multivector out(dim);
  for (const auto& [b, c] : u.terms()) {
    Blade comp = top & ~b;
    out.add_term(comp, c * merge_sign(b, comp));
  }
  return out;
}

Multivector erganzung_inverse(const Multivector& u) {
  int dim = u.dim();
  Blade top = full_blade(dim);
  Multivector out(dim);
  for (const auto& [c_blade, c] : u.terms()) {
    Blade b = top & ~c_blade;
    out.add_term(b, c * merge_sign(b, c_blade));
  }
  return out;
}

Multivector meet_classical(const Multivector& x, const Multivector& y) {
  return erganzung_inverse(wedge(erganzung(x), erganzung(y)));
}

namespace {

// <a, b> = mu(a ^ b): nonzero only on complementary blades.
Rat top_pairing(Blade a, Blade b, int dim) {
  if ((a | b) != full_blade(dim) || (a & b)) return Rat(0);
  return Rat(merge_sign(a, b));
}

}  // namespace

TensorPoly meet_coproduct(const Multivector& x) {
  int dim = x.dim();
  Blade top = full_blade(dim);
  TensorPoly out(dim, 2);
  // <D(x), a (x) b> = <x, meet(a, b)> for all basis pairs (a, b); the term
  // of D(x) dual to (a, b) sits at (comp a, comp b).
  for (Blade a = 0; a <= top; ++a) {
    Blade ca = top & ~a;
    Rat sa = top_pairing(ca, a, dim);
    for (Blade b = 0; b <= top; ++b) {
      Blade cb = top & ~b;
      Rat sb = top_pairing(cb, b, dim);
      Multivector m = meet(Multivector(dim, a), Multivector(dim, b));
      // <x, meet(a,b)>
      Rat v(0);
      for (const auto& [xb, xc] : x.terms())
        for (const auto& [mb, mc] : m.terms()) v += xc * mc * top_pairing(xb, mb, dim);
      if (v != 0) out.add_term({ca, cb}, v / (sa * sb));
    }
  }
  return out;
}

Multivector lotze_product(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  int dim = a.dim();
  Blade top = full_blade(dim);
  Multivector out(dim);
  // <p(a,b), x> = <a (x) b, D_v(x)>; the coefficient of comp(x) in p is that
  // value divided by <comp(x), x>.
  for (Blade xb = 0; xb <= top; ++xb) {
    TensorPoly d = meet_coproduct(Multivector(dim, xb));
    Rat v(0);
    for (const auto& [key, c] : d.terms())
      for (const auto& [ab, ac] : a.terms())
        for (const auto& [bb, bc] : b.terms())
          v += c * ac * bc * top_pairing(ab, key[0], dim) * top_pairing(bb, key[1], dim);
    if (v != 0) {
      Blade cx = top & ~xb;
      out.add_term(cx, v / top_pairing(cx, xb, dim));
    }
  }
  return out;
}

}  // namespace qca
