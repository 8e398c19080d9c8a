#include "qca/hopf.hpp"

#include <map>

namespace qca {

ConvCtx grassmann_ctx(int dim) {
  ConvCtx ctx;
  ctx.dim = dim;
  ctx.product = [](const Multivector& u, const Multivector& v) { return wedge(u, v); };
  ctx.coproduct = [](const Multivector& u) { return gco(u); };
  ctx.counit_fn = [](const Multivector& u) { return counit(u); };
  return ctx;
}

ConvCtx clifford_ctx(const VectorForm& b, const VectorForm& c) {
  if (b.dim != c.dim) throw std::invalid_argument("dimension mismatch");
  ConvCtx ctx;
  ctx.dim = b.dim;
  auto bf = std::make_shared<GradedPairing>(b);
  VectorForm cc = c;
  ctx.product = [bf](const Multivector& u, const Multivector& v) { return cmul(u, v, *bf); };
  ctx.coproduct = [cc](const Multivector& u) { return cco(u, cc); };
  ctx.counit_fn = [](const Multivector& u) { return counit(u); };
  return ctx;
}

Endo convolve(const Endo& f, const Endo& g, const ConvCtx& ctx) {
  if (f.dim() != ctx.dim || g.dim() != ctx.dim) throw std::invalid_argument("dimension mismatch");
  return Endo::from_map(ctx.dim, [&](const Multivector& x) {
    TensorPoly split = ctx.coproduct(x);
    Multivector out(ctx.dim);
    for (const auto& [key, c] : split.terms()) {
      Multivector lhs = f.apply(Multivector(ctx.dim, key[0], Rat(1)));
      Multivector rhs = g.apply(Multivector(ctx.dim, key[1], Rat(1)));
      out += c * ctx.product(lhs, rhs);
    }
    return out;
  });
}

Endo conv_unit(const ConvCtx& ctx) {
  return Endo::from_map(ctx.dim, [&](const Multivector& x) {
    return Multivector(ctx.dim, 0, ctx.counit_fn(x));
  });
}

namespace {

Multivector grassmann_antipode_blade(Blade b, int dim, std::map<Blade, Multivector>& memo) {
  if (b == 0) return Multivector::unit(dim);
  auto it = memo.find(b);
  if (it != memo.end()) return it->second;
  Multivector x(dim, b);
  Multivector acc = -x;
  TensorPoly split = gco(x);
  for (const auto& [key, c] : split.terms()) {
    if (key[0] == 0 || key[1] == 0) continue;  // proper cuts only
    Multivector rec = grassmann_antipode_blade(key[1], dim, memo);
    acc -= c * wedge(Multivector(dim, key[0]), rec);
  }
  memo.emplace(b, acc);
  return acc;
}

}  // namespace

Multivector grassmann_antipode(const Multivector& u) {
  std::map<Blade, Multivector> memo;
  Multivector out(u.dim());
  for (const auto& [b, c] : u.terms()) out += c * grassmann_antipode_blade(b, u.dim(), memo);
  return out;
}

std::optional<Endo> antipode_solve(const VectorForm& b, const VectorForm& c) {
  if (b.dim != c.dim) throw std::invalid_argument("dimension mismatch");
  int dim = b.dim;
  int n = 1 << dim;
  GradedPairing bf(b);
  auto order = blade_order(dim);

  // Precompute products of blade pairs and the co-product of every blade.
  std::vector<std::vector<Multivector>> prod(n, std::vector<Multivector>(n, Multivector(dim)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      prod[i][j] = cmul(Multivector(dim, order[i]), Multivector(dim, order[j]), bf);
  std::vector<TensorPoly> cop;
  cop.reserve(n);
  for (int i = 0; i < n; ++i) cop.push_back(cco(Multivector(dim, order[i]), c));

  // Unknowns: s[row][col], flattened row * n + col. Equations: for every
  // basis blade x and every output blade o, both antipode axioms.
  Matrix a(2 * n * n, n * n);
  std::vector<Rat> rhs(2 * n * n, Rat(0));
  for (int xi = 0; xi < n; ++xi) {
    for (const auto& [key, coef] : cop[xi].terms()) {
      int p1 = blade_position(key[0], dim);
      int p2 = blade_position(key[1], dim);
      // Left axiom: sum s[r][x1] * coef * cmul(r, x2) accumulated per output.
      for (int r = 0; r < n; ++r) {
        for (const auto& [ob, pc] : prod[r][p2].terms())
          a.at(xi * n + blade_position(ob, dim), r * n + p1) += coef * pc;
        // Right axiom: sum s[r][x2] * coef * cmul(x1, r).
        for (const auto& [ob, pc] : prod[p1][r].terms())
          a.at(n * n + xi * n + blade_position(ob, dim), r * n + p2) += coef * pc;
      }
    }
    // Right-hand side: counit(x) Id for both axioms.
    if (order[xi] == 0) {
      rhs[xi * n + 0] = 1;
      rhs[n * n + xi * n + 0] = 1;
    }
  }
  auto sol = a.solve(rhs);
  if (!sol) return std::nullopt;
  Endo s(dim);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) s.matrix().at(r, col) = (*sol)[r * n + col];
  return s;
}

TensorPoly crossing(const TensorPoly& t, const VectorForm& b, const VectorForm& c) {
  if (t.rank() != 2) throw std::invalid_argument("crossing acts on rank-2 tensors");
  if (t.dim() != b.dim || t.dim() != c.dim) throw std::invalid_argument("dimension mismatch");
  auto s = antipode_solve(b, c);
  if (!s) throw NoAntipodeError();
  int dim = t.dim();
  GradedPairing bf(b);
  TensorPoly out(dim, 2);
  for (const auto& [key, coef] : t.terms()) {
    TensorPoly dx = cco(Multivector(dim, key[0]), c);
    TensorPoly dy = cco(Multivector(dim, key[1]), c);
    for (const auto& [kx, cx] : dx.terms()) {
      Multivector sx = s->apply(Multivector(dim, kx[0]));
      for (const auto& [ky, cy] : dy.terms()) {
        Multivector sy = s->apply(Multivector(dim, ky[1]));
        Multivector mid = cmul(Multivector(dim, kx[1]), Multivector(dim, ky[0]), bf);
        for (const auto& [mb, mc] : mid.terms()) {
          TensorPoly dm = cco(Multivector(dim, mb), c);
          for (const auto& [km, cm] : dm.terms()) {
            Multivector lhs = cmul(sx, Multivector(dim, km[0]), bf);
            Multivector rhs = cmul(Multivector(dim, km[1]), sy, bf);
            Rat scale = coef * cx * cy * mc * cm;
            for (const auto& [lb, lc] : lhs.terms())
              for (const auto& [rb, rc] : rhs.terms())
                out.add_term({lb, rb}, scale * lc * rc);
          }
        }
      }
    }
  }
  return out;
}

std::vector<LinForm> integral_space(const ConvCtx& ctx, Side side) {
  int dim = ctx.dim;
  int n = 1 << dim;
  auto order = blade_order(dim);
  // Unknown: mu over blades. Equation rows: (x, output blade).
  Matrix a(n * n, n);
  for (int xi = 0; xi < n; ++xi) {
    Multivector x(dim, order[xi]);
    TensorPoly split = ctx.coproduct(x);
    for (const auto& [key, coef] : split.terms()) {
      Blade kept = (side == Side::kRight) ? key[0] : key[1];
      Blade eaten = (side == Side::kRight) ? key[1] : key[0];
      a.at(xi * n + blade_position(kept, dim), blade_position(eaten, dim)) += coef;
    }
    a.at(xi * n + 0, xi) -= 1;  // ... = mu(x) Id
  }
  std::vector<LinForm> basis;
  for (auto& v : a.nullspace()) {
    LinForm f(dim);
    f.coeffs = std::move(v);
    basis.push_back(std::move(f));
  }
  return basis;
}

std::vector<Multivector> cointegral_space(const ConvCtx& ctx, Side side) {
  int dim = ctx.dim;
  int n = 1 << dim;
  auto order = blade_order(dim);
  Matrix a(n * n, n);
  for (int xi = 0; xi < n; ++xi) {
    Multivector x(dim, order[xi]);
    Rat eps = ctx.counit_fn(x);
    for (int eb = 0; eb < n; ++eb) {
      Multivector e(dim, order[eb]);
      Multivector prod = (side == Side::kRight) ? ctx.product(x, e) : ctx.product(e, x);
      for (const auto& [ob, c] : prod.terms()) a.at(xi * n + blade_position(ob, dim), eb) += c;
      a.at(xi * n + eb, eb) -= eps;
    }
  }
  std::vector<Multivector> basis;
  for (auto& v : a.nullspace()) {
    Multivector e(dim);
    for (int i = 0; i < n; ++i) e.add_term(order[i], v[i]);
    basis.push_back(std::move(e));
  }
  return basis;
}

bool verify_unipotent(const Endo& t, const ConvCtx& ctx) {
  return convolve(t, t, ctx) == conv_unit(ctx);
}

}  // namespace qca
