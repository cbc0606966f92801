#pragma once

#include <map>
#include <vector>

#include "polarnd/cfrac.hpp"
#include "polarnd/curvekit.hpp"
#include "polarnd/locus.hpp"
#include "polarnd/newton.hpp"

namespace polarnd {

/// A side of a predicted polar polygon together with the lattice points that
/// carry a term of the polar (a subset of the side's lattice points).
struct PredictedSide {
  Side side;
  std::vector<LatticePoint> support;  // ordered by increasing j
};

/// Assembles predicted sides into a polygon (sides sorted by decreasing n/m).
NewtonPolygon as_polygon(const std::vector<PredictedSide>& sides);

/// Associated polynomial of a predicted side from monomial terms keyed by
/// their y-degree.
UPoly associated_from_terms(const PredictedSide& side, const std::map<int, MPoly>& terms);

namespace genus1 {

/// q - floor((j+1)q/p), for 0 <= j <= p-1.
int alpha(int j, int p, int q);

/// The term of P(f1) at (alpha(j), j) for symbolic (a:b); coefficients come
/// from `fam` (a[0,p] = 1, a[q,0] = -1).
MPoly term_t(int j, const FamilyG1& fam);
MPoly term_t(int j, int p, int q);

/// Sides l_0, l_1, ... from the continued fraction of q/p, in that order
/// (l_0 is the side touching the i-axis).
std::vector<PredictedSide> predicted_polygon(int p, int q);

/// F_k(z) of side l_k, assembled from the t_j on it.
UPoly associated_F(int p, int q, int k);

/// The j with t_j on some predicted side (the index set of the product of
/// the t_lambda(1,1)), increasing.
std::vector<int> lambda_set(int p, int q);

DegeneracyLocus degeneracy_locus(int p, int q);

TopologyReport predicted_topology(int p, int q);

struct PolarModel {
  int p = 0;
  int q = 0;
  ContinuedFraction cf;
  ConvergentSeq conv;
  std::vector<LatticePoint> A;  // (alpha(j), j), j = 0..p-1
  std::map<int, MPoly> terms;
  std::vector<PredictedSide> sides;
  std::vector<UPoly> F;
  std::vector<int> lambda;
  FamilyG1 family;
};

PolarModel polar_model(int p, int q);

}  // namespace genus1
}  // namespace polarnd
