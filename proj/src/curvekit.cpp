#include "polarnd/curvekit.hpp"

#include <cctype>
#include <numeric>

#include "polarnd/error.hpp"

namespace polarnd {

namespace {

MPoly xy_monomial(int i, int j) {
  return MPoly::term(Rational(1),
                     Monomial({{VarId::x(), static_cast<unsigned>(i)},
                               {VarId::y(), static_cast<unsigned>(j)}}));
}

}  // namespace

std::map<std::pair<int, int>, MPoly> plane_coefficients(const MPoly& f) {
  std::map<std::pair<int, int>, MPoly> out;
  for (const auto& [m, c] : f.terms()) {
    const int i = static_cast<int>(m.exponent(VarId::x()));
    const int j = static_cast<int>(m.exponent(VarId::y()));
    out[{i, j}].add_term(m.without(VarId::x()).without(VarId::y()), c);
  }
  return out;
}

PolarParams PolarParams::symbolic() {
  return {MPoly::variable(VarId::a()), MPoly::variable(VarId::b())};
}

PolarParams PolarParams::concrete(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw PreconditionError("polar point (0:0) is not in P^1");
  return {MPoly(a), MPoly(b)};
}

PlaneSeries polar(const PlaneSeries& f, const PolarParams& ab) {
  return {ab.a * derivative(f.poly, VarId::x()) + ab.b * derivative(f.poly, VarId::y()),
          std::nullopt};
}

// ---------------------------------------------------------------- families

MPoly FamilyG1::coeff(int i, int j) const {
  if (i < 0 || j < 0) return MPoly();
  if (i == 0 && j == p) return MPoly(1L);
  if (i == q && j == 0) return MPoly(-1L);
  const int w = weight(i, j);
  if (w <= p * q) return MPoly();
  if (w > weight_bound) {
    throw PreconditionError("coefficient a[" + std::to_string(i) + "," +
                            std::to_string(j) + "] lies beyond the weight bound " +
                            std::to_string(weight_bound));
  }
  if (shape == F1Shape::Binomial) return MPoly();
  return MPoly::variable(VarId::coeff_a(i, j));
}

MPoly FamilyG2::coeff_b(int i, int j) const {
  if (i < 0 || j < 0) return MPoly();
  if (i == i0 && j == j0) return MPoly::variable(leading_b());
  const int w = weight(i, j);
  const int threshold = e1 * p * q + d;
  if (w <= threshold) return MPoly();
  if (w > weight_bound) {
    throw PreconditionError("coefficient b[" + std::to_string(i) + "," +
                            std::to_string(j) + "] lies beyond the weight bound " +
                            std::to_string(weight_bound));
  }
  return MPoly::variable(VarId::coeff_b(i, j));
}

std::vector<VarId> FamilyG2::coeff_vars() const {
  std::vector<VarId> out = f1.coeff_vars;
  out.insert(out.end(), b_vars.begin(), b_vars.end());
  return out;
}

FamilyG1 generic_member_g1(int p, int q, std::optional<int> weight_bound,
                           F1Shape shape) {
  if (p < 2 || q <= p) throw PreconditionError("K(p,q) needs 2 <= p < q");
  if (std::gcd(p, q) != 1) throw PreconditionError("K(p,q) needs gcd(p, q) = 1");
  FamilyG1 fam;
  fam.p = p;
  fam.q = q;
  fam.shape = shape;
  fam.weight_bound = weight_bound.value_or(p * q + p + q);
  MPoly f = xy_monomial(0, p) - xy_monomial(q, 0);
  if (shape == F1Shape::General) {
    for (int j = 0; j * q <= fam.weight_bound; ++j) {
      for (int i = 0; i * p + j * q <= fam.weight_bound; ++i) {
        if (i * p + j * q <= p * q) continue;
        const VarId v = VarId::coeff_a(i, j);
        fam.coeff_vars.push_back(v);
        f += MPoly::variable(v) * xy_monomial(i, j);
      }
    }
    std::sort(fam.coeff_vars.begin(), fam.coeff_vars.end());
  }
  fam.generic = {std::move(f), fam.weight_bound};
  return fam;
}

FamilyG2 generic_member_g2(int p, int q, int d, int e1,
                           std::optional<int> weight_bound, F1Shape shape) {
  if (e1 < 2) throw PreconditionError("K(e1 p, e1 q, e1 pq + d) needs e1 >= 2");
  if (d < 1) throw PreconditionError("K(e1 p, e1 q, e1 pq + d) needs d >= 1");
  if (std::gcd(e1, d) != 1) throw PreconditionError("K(e1 p, e1 q, e1 pq + d) needs gcd(e1, d) = 1");
  FamilyG2 fam;
  fam.f1 = generic_member_g1(p, q, std::nullopt, shape);
  fam.p = p;
  fam.q = q;
  fam.d = d;
  fam.e1 = e1;
  const int target = e1 * p * q + d;
  // j0 is the residue mod p with j0 q = target (mod p).
  fam.j0 = -1;
  for (int j = 0; j < p; ++j) {
    if ((target - j * q) % p == 0) {
      fam.j0 = j;
      break;
    }
  }
  fam.i0 = (target - fam.j0 * q) / p;
  if (fam.j0 < 0 || fam.i0 < 0) throw Error("no solution of i0 p + j0 q = e1 pq + d");
  fam.weight_bound = weight_bound.value_or(target + 2 * p);

  MPoly f2 = MPoly::variable(fam.leading_b()) * xy_monomial(fam.i0, fam.j0);
  fam.b_vars.push_back(fam.leading_b());
  for (int j = 0; j * q <= fam.weight_bound; ++j) {
    for (int i = 0; i * p + j * q <= fam.weight_bound; ++i) {
      if (i * p + j * q <= target) continue;
      const VarId v = VarId::coeff_b(i, j);
      fam.b_vars.push_back(v);
      f2 += MPoly::variable(v) * xy_monomial(i, j);
    }
  }
  std::sort(fam.b_vars.begin(), fam.b_vars.end());
  fam.generic = {pow(fam.f1.generic.poly, static_cast<unsigned>(e1)) + f2,
                 fam.weight_bound};
  return fam;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  MPoly expr() {
    bool negate = accept('-');
    MPoly out = term();
    if (negate) out = -out;
    while (true) {
      if (accept('+')) {
        out += term();
      } else if (accept('-')) {
        out -= term();
      } else {
        return out;
      }
    }
  }

  MPoly term() {
    MPoly out = factor();
    while (accept('*')) out *= factor();
    return out;
  }

  MPoly factor() {
    MPoly base_value = base();
    if (accept('^')) {
      skip_ws();
      base_value = pow(base_value, static_cast<unsigned>(natural()));
    }
    return base_value;
  }

  long natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    if (pos_ - start > 9) fail("number too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  BigInt integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  MPoly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = integer_literal();
      BigInt den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected a denominator");
        }
        den = integer_literal();
        if (den == 0) fail("zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return MPoly(r);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view ident = text_.substr(start, pos_ - start);
      if (ident == "x") return MPoly::variable(VarId::x());
      if (ident == "y") return MPoly::variable(VarId::y());
      if (ident == "z") return MPoly::variable(VarId::z());
      if (ident == "a" || ident == "b") {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '[') {
          ++pos_;
          const int i = static_cast<int>(natural());
          expect(',');
          const int j = static_cast<int>(natural());
          expect(']');
          return MPoly::variable(ident == "a" ? VarId::coeff_a(i, j) : VarId::coeff_b(i, j));
        }
        return MPoly::variable(ident == "a" ? VarId::a() : VarId::b());
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(ident) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PlaneSeries parse_series(std::string_view text) { return {Parser(text).parse(), std::nullopt}; }

PlaneSeries substitute(const PlaneSeries& f, const std::map<VarId, Rational>& assignment) {
  std::map<VarId, MPoly> values;
  for (const VarId& v : f.poly.variables()) {
    if (v.is_plane()) continue;
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw PreconditionError("no value assigned to " + v.name());
    }
    values.emplace(v, MPoly(it->second));
  }
  return {f.poly.substitute(values), f.truncation_weight};
}

}  // namespace polarnd
