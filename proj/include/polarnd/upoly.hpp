#pragma once

#include <string>
#include <vector>

#include "polarnd/mpoly.hpp"

namespace polarnd {

/// Univariate polynomial in a distinguished variable over the ring of MPoly
/// coefficients. coeffs[k] multiplies main^k; the last entry is nonzero.
class UPoly {
 public:
  explicit UPoly(VarId main = VarId::z()) : main_(main) {}
  UPoly(VarId main, std::vector<MPoly> coeffs);

  static UPoly from_mpoly(const MPoly& f, VarId main);

  VarId main() const { return main_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }
  const MPoly& coeff(std::size_t k) const;
  const MPoly& lc() const;
  /// True when every coefficient is a rational constant.
  bool is_concrete() const;

  UPoly derivative() const;
  MPoly to_mpoly() const;
  std::string to_string() const { return to_mpoly().to_string(); }

  bool operator==(const UPoly&) const = default;

 private:
  void trim();

  VarId main_;
  std::vector<MPoly> coeffs_;
};

/// Determinant of the Sylvester matrix (rows of F first), by fraction-free
/// Bareiss elimination. Throws on a zero input.
MPoly resultant(const UPoly& f, const UPoly& g);

/// (-1)^{n(n-1)/2} Res(F, F') / lc(F), n = deg F >= 1.
MPoly discriminant(const UPoly& f);

enum class SquarefreeMethod { ConcreteGcd, SymbolicDiscriminant };

struct SquarefreeVerdict {
  bool squarefree = false;
  SquarefreeMethod method = SquarefreeMethod::ConcreteGcd;
};

/// Concrete coefficients: gcd(F, F') has degree 0. Otherwise: the
/// discriminant is not the zero polynomial (a generic statement).
SquarefreeVerdict is_squarefree(const UPoly& f);

}  // namespace polarnd
