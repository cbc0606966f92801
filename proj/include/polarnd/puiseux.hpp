#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_complex.hpp>

#include "polarnd/curvekit.hpp"
#include "polarnd/newton.hpp"
#include "polarnd/semigroup.hpp"

namespace polarnd {

/// 100 significant decimal digits.
using Complex = boost::multiprecision::cpp_complex_100;
using Real = boost::multiprecision::cpp_bin_float_100;

struct PuiseuxTerm {
  Rational exponent;  // power of x
  Complex coeff;
};

/// One branch y = sum c_k x^{e_k}, representing its n conjugates.
struct PuiseuxBranch {
  int n = 1;
  std::vector<PuiseuxTerm> terms;
  /// The series terminates: every coefficient after the last term is zero.
  bool exact = false;
  /// Coefficients of exponents up to this value are final.
  Rational known_through;
  std::vector<long> char_exponents;
  int genus = 0;
  std::optional<SemigroupSpec> semigroup;
  /// How often the branch occurs as a factor (1 for reduced f).
  int multiplicity = 1;
  /// Largest relative residual seen when substituting the branch into f.
  double residual = 0.0;

  /// (n', m') of the leading exponent m'/n'; empty for the branch y = 0.
  std::optional<BranchClass> leading_class() const;
  std::string to_string(int max_terms = 8) const;
};

struct PuiseuxOptions {
  /// Expansion steps past the point where a branch is isolated; negative
  /// picks 2n + 2 for a branch of ramification n.
  int depth = -1;
  /// Relative distance under which roots of an edge polynomial are merged,
  /// and the residual tolerance.
  double tol = 1e-8;
};

struct PuiseuxResult {
  int x_power = 0;  // power of x divided out of f
  std::vector<PuiseuxBranch> branches;
};

/// Decimal rendering with parts below 1e-30 of |re| + |im| dropped.
std::string format_complex(const Complex& c, int digits = 12);

/// Newton-Puiseux expansion of a concrete f with f(0,0) = 0. Throws
/// PreconditionError on bad input and ToleranceError when root clusters are
/// ambiguous or a residual check fails.
PuiseuxResult puiseux_expand(const PlaneSeries& f, const PuiseuxOptions& opts = {});

/// n1 * sum over the conjugates psi_j of b2 of ord_x(phi - psi_j). Throws
/// InsufficientDepthError when the known terms do not separate the branches.
int intersection_numeric(const PuiseuxBranch& b1, const PuiseuxBranch& b2);

/// Branch classes (by leading exponent) and the pairwise intersection table,
/// in canonical order, for comparison with oka_decomposition.
TopologyReport topology_from_puiseux(const PuiseuxResult& r);

}  // namespace polarnd
