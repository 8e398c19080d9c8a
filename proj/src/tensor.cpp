#include "qca/tensor.hpp"

#include <sstream>

namespace qca {

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  if (dim_ != o.dim_ || rank_ != o.rank_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  if (dim_ != o.dim_ || rank_ != o.rank_) throw std::invalid_argument("tensor shape mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorPoly& TensorPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

std::string TensorPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << format_rat(a) << "*";
    bool inner = true;
    for (Blade b : k) {
      if (!inner) os << "&t ";
      os << blade_name(b);
      inner = false;
      if (&b != &k.back()) os << " ";
    }
    first = false;
  }
  return os.str();
}

TensorPoly tensor2(const Multivector& u, const Multivector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  TensorPoly out(u.dim(), 2);
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) out.add_term({a, b}, ca * cb);
  return out;
}

TensorPoly gco(const Multivector& u) {
  TensorPoly out(u.dim(), 2);
  for (const auto& [b, c] : u.terms()) {
    // Enumerate all submasks s of b, including 0 and b itself.
    Blade s = b;
    while (true) {
      Blade rest = b & ~s;
      out.add_term({s, rest}, c * merge_sign(s, rest));
      if (s == 0) break;
      s = (s - 1) & b;
    }
  }
  return out;
}

TensorPoly gco_slot(const TensorPoly& t, int slot) {
  if (slot < 0 || slot >= t.rank()) throw std::invalid_argument("slot out of range");
  TensorPoly out(t.dim(), t.rank() + 1);
  for (const auto& [key, c] : t.terms()) {
    TensorPoly split = gco(Multivector(t.dim(), key[slot], Rat(1)));
    for (const auto& [sk, sc] : split.terms()) {
      TensorPoly::Key k2;
      k2.reserve(key.size() + 1);
      for (int i = 0; i < static_cast<int>(key.size()); ++i) {
        if (i == slot) {
          k2.push_back(sk[0]);
          k2.push_back(sk[1]);
        } else {
          k2.push_back(key[i]);
        }
      }
      out.add_term(k2, c * sc);
    }
  }
  return out;
}

TensorPoly gswitch(const TensorPoly& t, int slot) {
  if (slot < 0 || slot + 1 >= t.rank()) throw std::invalid_argument("slot out of range");
  TensorPoly out(t.dim(), t.rank());
  for (const auto& [key, c] : t.terms()) {
    auto k2 = key;
    std::swap(k2[slot], k2[slot + 1]);
    int sign = ((grade(key[slot]) * grade(key[slot + 1])) & 1) ? -1 : 1;
    out.add_term(k2, c * sign);
  }
  return out;
}

TensorPoly graded_tensor_mul(const TensorPoly& s, const TensorPoly& t) {
  if (s.rank() != 2 || t.rank() != 2) throw std::invalid_argument("rank-2 tensors required");
  if (s.dim() != t.dim()) throw std::invalid_argument("dimension mismatch");
  TensorPoly out(s.dim(), 2);
  for (const auto& [ks, cs] : s.terms()) {
    for (const auto& [kt, ct] : t.terms()) {
      Blade a = ks[0], b = ks[1], c = kt[0], d = kt[1];
      if ((a & c) || (b & d)) continue;
      int sign = ((grade(b) * grade(c)) & 1) ? -1 : 1;
      sign *= merge_sign(a, c) * merge_sign(b, d);
      out.add_term({a | c, b | d}, cs * ct * sign);
    }
  }
  return out;
}

}  // namespace qca
