#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polarnd/genus1.hpp"
#include "polarnd/semigroup.hpp"

namespace polarnd::genus2 {

/// 2q - floor(((j+1)q - d)/p), for 0 <= j <= 2p-2 (mathematical floor).
int beta(int j, int p, int q, int d);

struct GhmTerms {
  MPoly g;  // term of f1 P(f1) at (alpha(j)+q, j); at (0, 2p-1) for j = 2p-1
  MPoly h;  // lowest term of P(f2) on the row y^j (zero for j = 2p-1)
  MPoly m;  // term of P(f) at the point of g
};

/// Defined for 0 <= j <= p-1 and j = 2p-1.
GhmTerms terms_ghm(int j, const FamilyG2& fam);
GhmTerms terms_ghm(int j, int p, int q, int d);

/// D_k = (q,0) + l_k in the order of the genus-one sides, then l_{p,q}.
std::vector<PredictedSide> predicted_polygon(int p, int q, int d);

/// k runs over the sides of predicted_polygon; the last one is l_{p,q}.
UPoly associated_F(int p, int q, int d, int k);

/// Genus-one index set together with 2p-1.
std::vector<int> lambda_set(int p, int q, int d);

DegeneracyLocus degeneracy_locus(int p, int q, int d);

TopologyReport predicted_topology(int p, int q, int d);

struct PolarModel {
  int p = 0;
  int q = 0;
  int d = 0;
  genus1::PolarModel g1;
  FamilyG2 family;
  std::map<int, int> beta;
  std::map<int, GhmTerms> terms;
  std::vector<PredictedSide> sides;
  std::vector<UPoly> F;
  std::vector<int> lambda;

  std::map<int, MPoly> m_terms() const;
};

PolarModel polar_model(int p, int q, int d);

/// Same family with f1 = y^2 - x^q (its analytic normal form when p = 2),
/// computed directly from the symbolic polar of the generic member.
GenericPolarModel normal_form_model(int p, int q, int d);

struct Classification {
  bool nondegenerate = false;
  int genus = 0;
  std::string reason;
  /// (e1, p, q, d) for genus-two input.
  std::optional<std::vector<long>> shape;
};

/// Whether the general polar of the general branch with this semigroup is
/// Newton nondegenerate. Throws PreconditionError on an invalid semigroup.
Classification classify_nondegenerate(const SemigroupSpec& spec);

}  // namespace polarnd::genus2
