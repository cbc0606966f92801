#include "polarnd/upoly.hpp"

#include "polarnd/error.hpp"

namespace polarnd {

UPoly::UPoly(VarId main, std::vector<MPoly> coeffs)
    : main_(main), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.depends_on(main_)) {
      throw PreconditionError("UPoly coefficient depends on the main variable");
    }
  }
  trim();
}

UPoly UPoly::from_mpoly(const MPoly& f, VarId main) {
  UPoly out(main);
  for (auto& [e, c] : f.coefficients_in(main)) {
    if (out.coeffs_.size() <= e) out.coeffs_.resize(e + 1);
    out.coeffs_[e] = std::move(c);
  }
  out.trim();
  return out;
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const MPoly& UPoly::coeff(std::size_t k) const {
  static const MPoly kZero;
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const MPoly& UPoly::lc() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool UPoly::is_concrete() const {
  for (const auto& c : coeffs_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

UPoly UPoly::derivative() const {
  std::vector<MPoly> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  }
  return UPoly(main_, std::move(out));
}

MPoly UPoly::to_mpoly() const {
  MPoly out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out += coeffs_[k] *
           MPoly::term(Rational(1), Monomial::of(main_, static_cast<unsigned>(k)));
  }
  return out;
}

MPoly resultant(const UPoly& f, const UPoly& g) {
  if (f.is_zero() || g.is_zero()) {
    throw PreconditionError("resultant with the zero polynomial");
  }
  if (f.main() != g.main()) {
    throw PreconditionError("resultant of polynomials in different variables");
  }
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  if (size == 0) return MPoly(1L);

  // Row i < n: F shifted by i; row n + i: G shifted by i (leading first).
  std::vector<std::vector<MPoly>> s(size, std::vector<MPoly>(size));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s[i][i + k] = f.coeff(m - k);
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(n - k);
  }

  int sign = 1;
  MPoly previous(1L);
  for (int k = 0; k + 1 < size; ++k) {
    if (s[k][k].is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < size; ++i) {
        if (!s[i][k].is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return MPoly();
      std::swap(s[k], s[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        s[i][j] = divide_exact(s[k][k] * s[i][j] - s[i][k] * s[k][j], previous);
      }
      s[i][k] = MPoly();
    }
    previous = s[k][k];
  }
  MPoly det = s[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

MPoly discriminant(const UPoly& f) {
  const int n = f.degree();
  if (n < 1) throw PreconditionError("discriminant of a constant polynomial");
  MPoly res = divide_exact(resultant(f, f.derivative()), f.lc());
  return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

SquarefreeVerdict is_squarefree(const UPoly& f) {
  if (f.is_zero()) throw PreconditionError("is_squarefree of the zero polynomial");
  if (f.degree() <= 0) return {true, f.is_concrete() ? SquarefreeMethod::ConcreteGcd
                                                     : SquarefreeMethod::SymbolicDiscriminant};
  if (f.is_concrete()) {
    const MPoly g = gcd(f.to_mpoly(), f.derivative().to_mpoly());
    return {g.degree(f.main()) == 0, SquarefreeMethod::ConcreteGcd};
  }
  return {!discriminant(f).is_zero(), SquarefreeMethod::SymbolicDiscriminant};
}

}  // namespace polarnd
