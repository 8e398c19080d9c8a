#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qca/endo.hpp"
#include "qca/pairing.hpp"
#include "qca/tensor.hpp"

namespace qca {

// Linear form on the algebra: one rational per blade, indexed in the
// graded-lexicographic blade order. Carries integrals, ordering forms and
// the bracket.
struct LinForm {
  int dim = 0;
  std::vector<Rat> coeffs;  // size 2^dim, graded-lex order

  LinForm() = default;
  explicit LinForm(int d) : dim(d), coeffs(std::size_t(1) << d, Rat(0)) {}

  static LinForm counit_form(int dim) {
    LinForm f(dim);
    f.coeffs[0] = 1;
    return f;
  }

  Rat& at(Blade b) { return coeffs[blade_position(b, dim)]; }
  const Rat& at(Blade b) const { return coeffs[blade_position(b, dim)]; }

  Rat value(const Multivector& u) const {
    Rat acc(0);
    for (const auto& [b, c] : u.terms()) acc += c * at(b);
    return acc;
  }

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.dim == b.dim && a.coeffs == b.coeffs;
  }
};

// A convolution context: the product and co-product (with its counit) that
// the convolution algebra End(/\V) is built from. Products are wedge or
// cmul(B); co-products are gco or cco(C).
struct ConvCtx {
  int dim = 0;
  std::function<Multivector(const Multivector&, const Multivector&)> product;
  std::function<TensorPoly(const Multivector&)> coproduct;
  std::function<Rat(const Multivector&)> counit_fn;

  Multivector unit() const { return Multivector::unit(dim); }
};

// Grassmann bi-convolution: wedge and gco.
ConvCtx grassmann_ctx(int dim);

// Clifford bi-convolution Cl(B, C): cmul(B) and cco(C).
ConvCtx clifford_ctx(const VectorForm& b, const VectorForm& c);

// f * g = m o (f (x) g) o Delta.
Endo convolve(const Endo& f, const Endo& g, const ConvCtx& ctx);

// u = eta o counit: x -> counit(x) Id.
Endo conv_unit(const ConvCtx& ctx);

// Antipode of the Grassmann Hopf gebra by the proper-cut recursion
// S(x) = -x - sum' x_(1) ^ S(x_(2)). Equals the grade involution.
Multivector grassmann_antipode(const Multivector& u);

// Signals an antipodeless bi-convolution (C^{-1} == B case). Not a failure.
struct NoAntipodeError : std::runtime_error {
  NoAntipodeError() : std::runtime_error("bi-convolution has no antipode") {}
};

// Solves m_B o (S (x) id) o Delta_C == conv_unit == m_B o (id (x) S) o Delta_C
// for S. Returns nullopt when the system is inconsistent.
std::optional<Endo> antipode_solve(const VectorForm& b, const VectorForm& c);

// The crossing derived from the antipode: split both legs with Delta_C,
// apply S to the outer legs, multiply the inner legs with m_B, split the
// result again and recombine with two m_B products. Throws NoAntipodeError
// when antipode_solve fails.
TensorPoly crossing(const TensorPoly& t, const VectorForm& b, const VectorForm& c);

enum class Side { kLeft, kRight };

// Basis of the space of left/right integrals: linear forms mu with
// (mu (x) id) Delta(x) = mu(x) Id  /  (id (x) mu) Delta(x) = mu(x) Id.
std::vector<LinForm> integral_space(const ConvCtx& ctx, Side side);

// Basis of the space of left/right cointegrals: elements e with
// m(e (x) x) = counit(x) e  /  m(x (x) e) = counit(x) e.
std::vector<Multivector> cointegral_space(const ConvCtx& ctx, Side side);

// True iff T * T == conv_unit exactly.
bool verify_unipotent(const Endo& t, const ConvCtx& ctx);

}  // namespace qca
