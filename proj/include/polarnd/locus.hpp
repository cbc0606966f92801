#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polarnd/mpoly.hpp"
#include "polarnd/newton.hpp"

namespace polarnd {

/// Zariski closed subset of a family's coefficient space, as a union of
/// hypersurfaces Z(g) plus (rarely) higher-codimension pieces where several
/// polynomials vanish together. No generator involves x, y, z, a or b.
struct DegeneracyLocus {
  std::string family;
  std::vector<MPoly> generators;
  std::vector<std::vector<MPoly>> joint;

  bool empty() const { return generators.empty() && joint.empty(); }
  /// True when the assignment lies on the locus. Every variable of every
  /// generator must be assigned.
  bool contains(const std::map<VarId, Rational>& assignment) const;
  std::vector<std::string> rendered() const;
};

/// Builds the locus from raw conditions, each a polynomial in the polar
/// parameters a, b and the family coefficients. A raw condition holds for
/// general (a:b) only when all its (a,b)-coefficients vanish; a condition
/// with a nonzero constant coefficient never holds and is dropped.
/// `keep(v)` selects the family variables that may vanish; factors in other
/// variables (and rational constants) are stripped. Generators are made
/// squarefree, pairwise coprime, primitive and sorted.
DegeneracyLocus normalize_locus(const std::vector<MPoly>& raw,
                                const std::function<bool(const VarId&)>& keep,
                                std::string family);

/// Side of a generic polar with the symbolic coefficient of each support
/// point lying on it.
struct GenericSide {
  Side side;
  std::vector<std::pair<LatticePoint, MPoly>> points;
  UPoly associated;
};

/// Direct symbolic computation on a generic family member: the polar with
/// symbolic (a:b), its polygon, the polynomials of its sides, the locus where
/// a support point on a side vanishes or a side stops being squarefree, and
/// the Oka topology (absent when some discriminant is identically zero).
struct GenericPolarModel {
  PlaneSeries polar;
  NewtonPolygon polygon;
  std::vector<GenericSide> sides;
  DegeneracyLocus locus;
  Nondegeneracy verdict = Nondegeneracy::Degenerate;
  std::optional<TopologyReport> topology;
};

GenericPolarModel generic_polar_model(const PlaneSeries& member,
                                      const std::function<bool(const VarId&)>& keep,
                                      std::string family);

}  // namespace polarnd
