#include "polarnd/rational.hpp"

#include "polarnd/error.hpp"
#include "polarnd/var.hpp"

namespace polarnd {

Rational make_rational(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw PreconditionError("not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string VarId::name() const {
  switch (kind) {
    case VarKind::X: return "x";
    case VarKind::Y: return "y";
    case VarKind::Z: return "z";
    case VarKind::A: return "a";
    case VarKind::B: return "b";
    case VarKind::CoeffA:
      return "a[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case VarKind::CoeffB:
      return "b[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  return "?";
}

}  // namespace polarnd
