#include "polarnd/genus2.hpp"

#include <numeric>
#include <set>

#include "polarnd/error.hpp"

namespace polarnd::genus2 {

namespace {

int floor_div(int num, int den) {
  int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

void check_pqd(int p, int q, int d) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) {
    throw PreconditionError("K(2p,2q,2pq+d) needs 2 <= p < q and gcd(p, q) = 1");
  }
  if (d < 1 || d % 2 == 0) throw PreconditionError("K(2p,2q,2pq+d) needs an odd d >= 1");
}

MPoly xy(int i, int j) {
  return MPoly::term(Rational(1), Monomial({{VarId::x(), static_cast<unsigned>(i)},
                                            {VarId::y(), static_cast<unsigned>(j)}}));
}

std::string tag(int p, int q, int d) {
  return "K(" + std::to_string(2 * p) + "," + std::to_string(2 * q) + "," +
         std::to_string(2 * p * q + d) + ")";
}

}  // namespace

int beta(int j, int p, int q, int d) {
  if (j < 0 || j > 2 * p - 2) throw PreconditionError("beta(j) needs 0 <= j <= 2p-2");
  const int b = 2 * q - floor_div((j + 1) * q - d, p);
  const int other = 2 * q - floor_div(j * q + p - d, p);
  if (b > other) throw Error("beta(j) exceeds the a-derivative bound");
  return b;
}

GhmTerms terms_ghm(int j, const FamilyG2& fam) {
  const int p = fam.p;
  const int q = fam.q;
  const int d = fam.d;
  if (fam.e1 != 2) throw PreconditionError("terms g, h, m are defined for e1 = 2");
  const MPoly a = MPoly::variable(VarId::a());
  const MPoly b = MPoly::variable(VarId::b());
  GhmTerms out;
  if (j == 2 * p - 1) {
    out.g = Rational(p) * b * xy(0, 2 * p - 1);
    out.m = Rational(2) * out.g;
    return out;
  }
  if (j < 0 || j > p - 1) throw PreconditionError("terms g, h, m need 0 <= j <= p-1 or j = 2p-1");
  out.g = -(xy(q, 0) * genus1::term_t(j, fam.f1));
  const int be = beta(j, p, q, d);
  MPoly c = Rational(j + 1) * b * fam.coeff_b(be, j + 1);
  if (be == 2 * q - floor_div(j * q + p - d, p)) c += Rational(be + 1) * a * fam.coeff_b(be + 1, j);
  for (const VarId& v : c.variables()) {
    if (v.kind != VarKind::CoeffB) continue;
    const int w = fam.weight(v.i, v.j);
    const int lo = 2 * p * q + d;
    if (w < lo || w >= lo + p) {
      throw Error("weight bound violated by " + v.name() + " in h_" + std::to_string(j));
    }
  }
  out.h = c * xy(be, j);
  const int al = genus1::alpha(j, p, q);
  if (be < al + q) throw Error("beta(j) < alpha(j) + q");
  out.m = Rational(2) * out.g;
  if (al + q == be) out.m += out.h;
  return out;
}

GhmTerms terms_ghm(int j, int p, int q, int d) {
  check_pqd(p, q, d);
  return terms_ghm(j, generic_member_g2(p, q, d));
}

std::vector<PredictedSide> predicted_polygon(int p, int q, int d) {
  check_pqd(p, q, d);
  std::vector<PredictedSide> out;
  for (const auto& s : genus1::predicted_polygon(p, q)) {
    std::vector<LatticePoint> pts;
    for (const auto& pt : s.support) pts.push_back({pt.i + q, pt.j});
    out.push_back({make_side({s.side.from.i + q, s.side.from.j}, {s.side.to.i + q, s.side.to.j}),
                   std::move(pts)});
  }
  out.push_back({make_side({0, 2 * p - 1}, {q, p - 1}), {{q, p - 1}, {0, 2 * p - 1}}});
  return out;
}

std::vector<int> lambda_set(int p, int q, int d) {
  check_pqd(p, q, d);
  std::vector<int> out = genus1::lambda_set(p, q);
  out.push_back(2 * p - 1);
  return out;
}

std::map<int, MPoly> PolarModel::m_terms() const {
  std::map<int, MPoly> out;
  for (const auto& [j, t] : terms) out.emplace(j, t.m);
  return out;
}

PolarModel polar_model(int p, int q, int d) {
  check_pqd(p, q, d);
  PolarModel m;
  m.p = p;
  m.q = q;
  m.d = d;
  m.g1 = genus1::polar_model(p, q);
  m.family = generic_member_g2(p, q, d);
  for (int j = 0; j <= 2 * p - 2; ++j) m.beta.emplace(j, beta(j, p, q, d));
  for (int j = 0; j < p; ++j) m.terms.emplace(j, terms_ghm(j, m.family));
  m.terms.emplace(2 * p - 1, terms_ghm(2 * p - 1, m.family));
  m.sides = predicted_polygon(p, q, d);
  const auto mt = m.m_terms();
  for (const auto& s : m.sides) m.F.push_back(associated_from_terms(s, mt));
  m.lambda = lambda_set(p, q, d);
  return m;
}

UPoly associated_F(int p, int q, int d, int k) {
  const PolarModel m = polar_model(p, q, d);
  if (k < 0 || k >= static_cast<int>(m.F.size())) {
    throw PreconditionError("no predicted side with index " + std::to_string(k));
  }
  return m.F[static_cast<std::size_t>(k)];
}

DegeneracyLocus degeneracy_locus(int p, int q, int d) {
  const PolarModel m = polar_model(p, q, d);
  const VarId lead = m.family.leading_b();
  std::vector<MPoly> raw;
  for (int j : m.lambda) {
    const auto pc = plane_coefficients(m.terms.at(j).m);
    raw.push_back(pc.begin()->second);
  }
  for (const auto& F : m.F) raw.push_back(discriminant(F));
  return normalize_locus(
      raw, [lead](const VarId& v) { return v.is_family() && v != lead; }, tag(p, q, d));
}

TopologyReport predicted_topology(int p, int q, int d) {
  return oka_decomposition(as_polygon(predicted_polygon(p, q, d)));
}

GenericPolarModel normal_form_model(int p, int q, int d) {
  check_pqd(p, q, d);
  const FamilyG2 fam = generic_member_g2(p, q, d, 2, std::nullopt, F1Shape::Binomial);
  const VarId lead = fam.leading_b();
  return generic_polar_model(
      fam.generic, [lead](const VarId& v) { return v.is_family() && v != lead; },
      tag(p, q, d) + " with f1 = y^" + std::to_string(p) + " - x^" + std::to_string(q));
}

Classification classify_nondegenerate(const SemigroupSpec& spec) {
  validate_semigroup(spec);
  Classification out;
  out.genus = spec.genus();
  const auto& v = spec.generators;
  if (out.genus == 0) {
    out.nondegenerate = true;
    out.reason = "smooth branch";
  } else if (out.genus == 1) {
    out.nondegenerate = true;
    out.reason = "genus 1";
  } else if (out.genus == 2) {
    const long e1 = std::gcd(v[0], v[1]);
    const long p = v[0] / e1;
    const long q = v[1] / e1;
    const long d = v[2] - e1 * p * q;
    if (d <= 0 || std::gcd(e1, d) != 1) {
      throw PreconditionError("genus-two semigroup is not of the form <e1 p, e1 q, e1 pq + d>");
    }
    out.shape = std::vector<long>{e1, p, q, d};
    out.nondegenerate = e1 == 2;
    out.reason = "e1=" + std::to_string(e1);
  } else {
    out.nondegenerate = false;
    out.reason = "genus " + std::to_string(out.genus) + " >= 3";
  }
  return out;
}

}  // namespace polarnd::genus2
