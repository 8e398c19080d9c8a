#include "qca/multivector.hpp"

#include <sstream>

namespace qca {

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same_dim(o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same_dim(o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= s;
  return *this;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
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
    if (a != 1 || b == 0) {
      os << format_rat(a);
      if (b != 0) os << "*";
    }
    if (b != 0) os << blade_name(b);
    first = false;
  }
  return os.str();
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  Multivector out(u.dim());
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      if (a & b) continue;
      out.add_term(a | b, ca * cb * merge_sign(a, b));
    }
  }
  return out;
}

Multivector grade_project(const Multivector& u, int r) {
  if (r < 0 || r > u.dim()) throw std::invalid_argument("grade out of range");
  Multivector out(u.dim());
  for (const auto& [b, c] : u.terms())
    if (grade(b) == r) out.add_term(b, c);
  return out;
}

Multivector grade_involution(const Multivector& u) {
  Multivector out(u.dim());
  for (const auto& [b, c] : u.terms()) out.add_term(b, (grade(b) & 1) ? -c : c);
  return out;
}

Multivector reversion_wedge(const Multivector& u) {
  Multivector out(u.dim());
  for (const auto& [b, c] : u.terms()) {
    int k = grade(b);
    out.add_term(b, ((k * (k - 1) / 2) & 1) ? -c : c);
  }
  return out;
}

Rat counit(const Multivector& u) { return u.coeff(0); }

Blade parse_blade(const std::string& name, int dim) {
  if (name == "Id") return 0;
  Blade b = 0;
  std::size_t i = 0;
  int last = 0;
  while (i < name.size()) {
    if (name[i] != 'e') throw std::invalid_argument("bad blade name: " + name);
    ++i;
    std::size_t j = i;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (j == i) throw std::invalid_argument("bad blade name: " + name);
    int idx = std::stoi(name.substr(i, j - i));
    if (idx < 1 || idx > dim) throw std::invalid_argument("generator index out of range in " + name);
    if (idx <= last) throw std::invalid_argument("blade indices must ascend in " + name);
    last = idx;
    b |= Blade(1) << (idx - 1);
    i = j;
    if (i < name.size()) {
      if (name[i] != 'w') throw std::invalid_argument("bad blade name: " + name);
      ++i;
    }
  }
  return b;
}

}  // namespace qca
