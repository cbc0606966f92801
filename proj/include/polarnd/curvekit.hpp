#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarnd/mpoly.hpp"

namespace polarnd {

/// Bivariate series in x, y whose coefficients may involve any other
/// indeterminates. When `truncation_weight` is set, terms of (p,q)-weight
/// above it were deliberately left out.
struct PlaneSeries {
  MPoly poly;
  std::optional<int> truncation_weight;

  std::string to_string() const { return poly.to_string(); }
  bool operator==(const PlaneSeries& o) const { return poly == o.poly; }
};

/// Coefficient (a polynomial free of x, y) of every monomial x^i y^j.
std::map<std::pair<int, int>, MPoly> plane_coefficients(const MPoly& f);

/// The point (a:b) of the polar pencil: symbolic a, b or rational values.
struct PolarParams {
  MPoly a;
  MPoly b;

  static PolarParams symbolic();
  static PolarParams concrete(const Rational& a, const Rational& b);
};

/// a * df/dx + b * df/dy.
PlaneSeries polar(const PlaneSeries& f, const PolarParams& ab);

/// Shape of the genus-one factor of a family member.
enum class F1Shape {
  /// y^p - x^q plus every a[i,j] x^i y^j with ip + jq > pq.
  General,
  /// y^p - x^q alone (the analytic normal form when p = 2).
  Binomial,
};

/// K(p,q): f1 = y^p - x^q + sum over ip+jq > pq (up to the weight bound) of
/// a[i,j] x^i y^j.
struct FamilyG1 {
  int p = 0;
  int q = 0;
  int weight_bound = 0;
  F1Shape shape = F1Shape::General;
  std::vector<VarId> coeff_vars;
  PlaneSeries generic;

  int weight(int i, int j) const { return i * p + j * q; }
  /// Coefficient of x^i y^j in the generic member, with a[0,p] = 1 and
  /// a[q,0] = -1. Throws if the point lies beyond the weight bound.
  MPoly coeff(int i, int j) const;
};

/// K(e1 p, e1 q, e1 pq + d): f = f1^e1 + f2 with
/// f2 = b[i0,j0] x^i0 y^j0 + sum over ip+jq > e1 pq + d of b[i,j] x^i y^j.
struct FamilyG2 {
  int p = 0;
  int q = 0;
  int d = 0;
  int e1 = 2;
  int i0 = 0;
  int j0 = 0;
  int weight_bound = 0;
  FamilyG1 f1;
  std::vector<VarId> b_vars;
  PlaneSeries generic;

  int weight(int i, int j) const { return i * p + j * q; }
  /// b[i0,j0]; symbolic and assumed nonzero.
  VarId leading_b() const { return VarId::coeff_b(i0, j0); }
  /// Coefficient of x^i y^j in f2. Throws beyond the weight bound.
  MPoly coeff_b(int i, int j) const;
  /// All family indeterminates (a's then b's).
  std::vector<VarId> coeff_vars() const;
};

/// Default weight bound pq + p + q.
FamilyG1 generic_member_g1(int p, int q, std::optional<int> weight_bound = {},
                           F1Shape shape = F1Shape::General);

/// Default weight bound e1 pq + d + 2p for f2; f1 uses its own default.
FamilyG2 generic_member_g2(int p, int q, int d, int e1 = 2,
                           std::optional<int> weight_bound = {},
                           F1Shape shape = F1Shape::General);

/// Parses the curve-expression grammar:
///   expr := term (('+'|'-') term)*,  term := factor ('*' factor)*,
///   factor := base ('^' natural)?,   base := rational | var | '(' expr ')',
///   var := x | y | a | b | a[i,j] | b[i,j],  rational := integer ('/' natural)?
/// Unary minus is accepted at the head of an expression.
PlaneSeries parse_series(std::string_view text);

/// Replaces every non-plane indeterminate by a rational value. Throws if
/// some indeterminate of f (other than x, y) is not assigned.
PlaneSeries substitute(const PlaneSeries& f, const std::map<VarId, Rational>& assignment);

}  // namespace polarnd
