#include "polarnd/genus1.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polarnd/error.hpp"

namespace polarnd {

NewtonPolygon as_polygon(const std::vector<PredictedSide>& sides) {
  if (sides.empty()) throw PreconditionError("no sides");
  NewtonPolygon poly;
  for (const auto& s : sides) poly.sides.push_back(s.side);
  std::sort(poly.sides.begin(), poly.sides.end(), [](const Side& l, const Side& r) {
    return static_cast<long long>(l.n) * r.m > static_cast<long long>(r.n) * l.m;
  });
  for (std::size_t k = 1; k < poly.sides.size(); ++k) {
    if (poly.sides[k].from != poly.sides[k - 1].to) {
      throw Error("predicted sides do not form a chain");
    }
  }
  poly.top = poly.sides.front().from;
  poly.bottom = poly.sides.back().to;
  return poly;
}

UPoly associated_from_terms(const PredictedSide& side, const std::map<int, MPoly>& terms) {
  const int j_low = side.side.to.j;
  std::vector<MPoly> coeffs(static_cast<std::size_t>(side.side.n) + 1);
  for (const LatticePoint& pt : side.support) {
    auto it = terms.find(pt.j);
    if (it == terms.end()) throw Error("no term at j = " + std::to_string(pt.j));
    const auto pc = plane_coefficients(it->second);
    auto c = pc.find({pt.i, pt.j});
    if (c == pc.end() || pc.size() != 1) {
      throw Error("term at j = " + std::to_string(pt.j) + " does not sit at (" +
                  std::to_string(pt.i) + "," + std::to_string(pt.j) + ")");
    }
    coeffs[static_cast<std::size_t>(pt.j - j_low)] += c->second;
  }
  return UPoly(VarId::z(), std::move(coeffs));
}

namespace genus1 {

namespace {

void check_pq(int p, int q) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1) {
    throw PreconditionError("K(p,q) needs 2 <= p < q and gcd(p, q) = 1");
  }
}

MPoly xy(int i, int j) {
  return MPoly::term(Rational(1), Monomial({{VarId::x(), static_cast<unsigned>(i)},
                                            {VarId::y(), static_cast<unsigned>(j)}}));
}

PredictedSide predicted_side(std::vector<LatticePoint> pts) {
  // pts run from the i-axis end upwards.
  PredictedSide out{make_side(pts.back(), pts.front()), pts};
  if (static_cast<std::size_t>(out.side.d) + 1 != pts.size()) {
    throw Error("predicted side misses some of its lattice points");
  }
  return out;
}

}  // namespace

int alpha(int j, int p, int q) {
  if (j < 0 || j > p - 1) throw PreconditionError("alpha(j) needs 0 <= j <= p-1");
  return q - (j + 1) * q / p;
}

MPoly term_t(int j, const FamilyG1& fam) {
  const int p = fam.p;
  const int q = fam.q;
  const int al = alpha(j, p, q);
  const int fl1 = (j + 1) * q / p;
  const int fl0 = j * q / p;
  const MPoly a = MPoly::variable(VarId::a());
  const MPoly b = MPoly::variable(VarId::b());
  MPoly c = Rational(j + 1) * b * fam.coeff(al, j + 1);
  if (fl1 == fl0 + 1) c += Rational(q - fl0) * a * fam.coeff(al + 1, j);
  for (const VarId& v : c.variables()) {
    if (v.kind != VarKind::CoeffA) continue;
    const int w = fam.weight(v.i, v.j);
    if (w <= p * q || w >= p * q + p) {
      throw Error("weight bound violated by " + v.name() + " in t_" + std::to_string(j));
    }
  }
  return c * xy(al, j);
}

MPoly term_t(int j, int p, int q) {
  check_pq(p, q);
  return term_t(j, generic_member_g1(p, q));
}

std::vector<PredictedSide> predicted_polygon(int p, int q) {
  check_pq(p, q);
  const ContinuedFraction cf = continued_fraction(q, p);
  const ConvergentSeq conv = convergents(cf);
  const int s = cf.s();
  std::vector<PredictedSide> out;
  for (int k = 0; 2 * k + 2 <= s; ++k) {
    const LatticePoint start{q - static_cast<int>(conv[2 * k].q),
                             static_cast<int>(conv[2 * k].p) - 1};
    const int di = -static_cast<int>(conv[2 * k + 1].q);
    const int dj = static_cast<int>(conv[2 * k + 1].p);
    std::vector<LatticePoint> pts;
    for (long l = 0; l <= cf.h[2 * k + 2]; ++l) {
      pts.push_back({start.i + static_cast<int>(l) * di, start.j + static_cast<int>(l) * dj});
    }
    out.push_back(predicted_side(std::move(pts)));
  }
  if (s % 2 == 1) {
    out.push_back(predicted_side({{q - static_cast<int>(conv[s - 1].q),
                                   static_cast<int>(conv[s - 1].p) - 1},
                                  {0, p - 1}}));
  }
  return out;
}

std::vector<int> lambda_set(int p, int q) {
  std::set<int> js;
  for (const auto& s : predicted_polygon(p, q)) {
    for (const auto& pt : s.support) js.insert(pt.j);
  }
  return {js.begin(), js.end()};
}

PolarModel polar_model(int p, int q) {
  check_pq(p, q);
  PolarModel m;
  m.p = p;
  m.q = q;
  m.cf = continued_fraction(q, p);
  m.conv = convergents(m.cf);
  m.family = generic_member_g1(p, q);
  for (int j = 0; j < p; ++j) {
    m.A.push_back({alpha(j, p, q), j});
    m.terms.emplace(j, term_t(j, m.family));
  }
  m.sides = predicted_polygon(p, q);
  for (const auto& s : m.sides) {
    for (const auto& pt : s.support) {
      if (pt != m.A[static_cast<std::size_t>(pt.j)]) {
        throw Error("predicted point off the set A");
      }
    }
    m.F.push_back(associated_from_terms(s, m.terms));
  }
  m.lambda = lambda_set(p, q);
  return m;
}

UPoly associated_F(int p, int q, int k) {
  const PolarModel m = polar_model(p, q);
  if (k < 0 || k >= static_cast<int>(m.F.size())) {
    throw PreconditionError("no predicted side with index " + std::to_string(k));
  }
  return m.F[static_cast<std::size_t>(k)];
}

DegeneracyLocus degeneracy_locus(int p, int q) {
  const PolarModel m = polar_model(p, q);
  std::vector<MPoly> raw;
  for (int j : m.lambda) {
    const auto pc = plane_coefficients(m.terms.at(j));
    raw.push_back(pc.begin()->second);
  }
  for (const auto& F : m.F) raw.push_back(discriminant(F));
  return normalize_locus(
      raw, [](const VarId& v) { return v.is_family(); },
      "K(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

TopologyReport predicted_topology(int p, int q) {
  return oka_decomposition(as_polygon(predicted_polygon(p, q)));
}

}  // namespace genus1
}  // namespace polarnd
