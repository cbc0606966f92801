#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polarnd/rational.hpp"
#include "polarnd/var.hpp"

namespace polarnd {

/// Power product of indeterminates, stored sparsely and sorted by VarId.
class Monomial {
 public:
  using Entry = std::pair<VarId, unsigned>;

  Monomial() = default;
  /// Sorts, merges repeated variables and drops zero exponents.
  explicit Monomial(std::vector<Entry> entries);
  static Monomial of(VarId v, unsigned exponent = 1);

  std::span<const Entry> entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  unsigned degree() const;
  unsigned exponent(VarId v) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  Monomial without(VarId v) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// Graded lexicographic comparison: total degree first, then lexicographic
/// with the smallest VarId most significant. Returns <0, 0, >0.
int grlex_compare(const Monomial& lhs, const Monomial& rhs);

/// Orders maps so that iteration visits terms from the leading one down.
struct GrlexGreater {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    return grlex_compare(lhs, rhs) > 0;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  MPoly() = default;
  MPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MPoly(long constant);             // NOLINT(google-explicit-constructor)

  static MPoly variable(VarId v);
  static MPoly term(const Rational& coefficient, Monomial monomial);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  unsigned degree(VarId v) const;
  unsigned total_degree() const;
  std::set<VarId> variables() const;
  bool depends_on(VarId v) const;

  /// Leading term under the canonical order; requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading_term() const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& scalar);
  MPoly operator-() const;
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(MPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MPoly operator*(const Rational& lhs, MPoly rhs) { return rhs *= lhs; }
  bool operator==(const MPoly& other) const { return terms_ == other.terms_; }

  /// Coefficients as a polynomial in `v`: exponent -> coefficient free of v.
  std::map<unsigned, MPoly> coefficients_in(VarId v) const;
  /// Coefficients with respect to a set of variables: the key holds only
  /// variables from `vars`, the value is free of them.
  std::map<Monomial, MPoly, GrlexGreater> coefficients_in(
      const std::set<VarId>& vars) const;

  /// Replaces each mapped variable by the given polynomial; other variables
  /// are kept.
  MPoly substitute(const std::map<VarId, MPoly>& values) const;

  /// Canonical rendering: terms in canonical order, `n/d` coefficients,
  /// explicit `*`, `^` powers.
  std::string to_string() const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);
MPoly derivative(const MPoly& f, VarId v);

/// Exact quotient; throws PreconditionError if `den` does not divide `num`.
MPoly divide_exact(const MPoly& num, const MPoly& den);
std::optional<MPoly> try_divide(const MPoly& num, const MPoly& den);

/// Rescales to integer coefficients with gcd 1 and a positive leading
/// coefficient. The zero polynomial is returned unchanged.
MPoly normalize_primitive(const MPoly& f);

/// Greatest common divisor over Q, normalized with normalize_primitive.
/// gcd(0, 0) = 0; a constant gcd is returned as 1.
MPoly gcd(const MPoly& f, const MPoly& g);

/// Content of `f` viewed as a polynomial in `v` (gcd of its coefficients).
MPoly content_in(const MPoly& f, VarId v);

/// Divides out the largest monomial and the rational constant supported only
/// on variables outside `keep`, then normalizes. Throws on zero input.
MPoly strip_content(const MPoly& g, const std::set<VarId>& keep);
MPoly strip_content(const MPoly& g,
                    const std::function<bool(const VarId&)>& keep);

/// Squarefree part. Repeated factors involving `main` are removed via
/// g / gcd(g, dg/dmain); the content in `main` is reduced recursively over
/// its own variables, so the result is squarefree overall. Throws on zero.
MPoly squarefree_part(const MPoly& g, VarId main);
/// squarefree_part applied over every variable of g.
MPoly squarefree_part(const MPoly& g);

}  // namespace polarnd
