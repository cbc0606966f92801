#include <gtest/gtest.h>

#include "polarnd/error.hpp"
#include "polarnd/genus1.hpp"
#include "polarnd/genus2.hpp"

using namespace polarnd;

namespace {

MPoly P(const std::string& s) { return parse_series(s).poly; }

std::set<std::string> normalized(const std::vector<MPoly>& v) {
  std::set<std::string> out;
  for (const auto& g : v) out.insert(normalize_primitive(g).to_string());
  return out;
}

std::set<std::string> normalized(std::initializer_list<const char*> v) {
  std::vector<MPoly> m;
  for (const char* s : v) m.push_back(P(s));
  return normalized(m);
}

std::vector<LatticePoint> pts(std::initializer_list<std::pair<int, int>> v) {
  std::vector<LatticePoint> out;
  for (auto [i, j] : v) out.push_back({i, j});
  return out;
}

bool family_var(const VarId& v) { return v.is_family(); }

const GenericSide& side_like(const GenericPolarModel& g, const Side& s) {
  for (const auto& gs : g.sides) {
    if (gs.side == s) return gs;
  }
  throw Error("side missing from the generic polar");
}

}  // namespace

TEST(Genus1, Alpha) {
  EXPECT_EQ(genus1::alpha(0, 7, 19), 17);
  EXPECT_EQ(genus1::alpha(6, 7, 19), 0);
  EXPECT_EQ(genus1::alpha(2, 5, 12), 5);
  EXPECT_THROW(genus1::alpha(7, 7, 19), PreconditionError);
}

TEST(Genus1, Terms) {
  EXPECT_EQ(genus1::term_t(0, 7, 19), P("b*a[17,1]*x^17"));
  EXPECT_EQ(genus1::term_t(1, 7, 19), P("2*b*a[14,2]*x^14*y"));
  EXPECT_EQ(genus1::term_t(6, 7, 19), P("7*b*y^6"));
  EXPECT_EQ(genus1::term_t(1, 3, 4), P("(2*b*a[2,2] + 3*a*a[3,1])*x^2*y"));
}

TEST(Genus1, PredictedPolygon) {
  const auto s = genus1::predicted_polygon(7, 19);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].support, pts({{17, 0}, {14, 1}, {11, 2}}));
  EXPECT_EQ(s[1].support, pts({{11, 2}, {0, 6}}));
  const auto t = genus1::predicted_polygon(5, 12);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].support, pts({{10, 0}, {5, 2}, {0, 4}}));
  const auto u = genus1::predicted_polygon(2, 3);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u[0].support, pts({{2, 0}, {0, 1}}));
}

TEST(Genus1, AssociatedPolynomials) {
  EXPECT_EQ(genus1::associated_F(7, 19, 0).to_mpoly(), P("3*b*a[11,3]*z^2 + 2*b*a[14,2]*z + b*a[17,1]"));
  EXPECT_EQ(genus1::associated_F(7, 19, 1).to_mpoly(), P("b*(7*z^4 + 3*a[11,3])"));
  EXPECT_EQ(genus1::associated_F(5, 12, 0).to_mpoly(), P("5*b*z^4 + 3*b*a[5,3]*z^2 + b*a[10,1]"));
}

TEST(Genus1, Locus) {
  EXPECT_EQ(normalized(genus1::degeneracy_locus(7, 19).generators),
            normalized({"a[17,1]", "a[14,2]", "a[11,3]", "3*a[11,3]*a[17,1] - a[14,2]^2"}));
  EXPECT_EQ(normalized(genus1::degeneracy_locus(5, 12).generators),
            normalized({"a[10,1]", "a[5,3]", "9*a[5,3]^2 - 20*a[10,1]"}));
  EXPECT_TRUE(genus1::degeneracy_locus(2, 3).empty());
}

TEST(Genus1, Topology) {
  const TopologyReport t = genus1::predicted_topology(7, 19).canonical();
  EXPECT_EQ(t.branches, (std::vector<BranchClass>{{1, 3, 2}, {4, 11, 1}}));
  EXPECT_EQ(t.intersections, (std::vector<std::vector<int>>{{0, 3, 11}, {3, 0, 11}, {11, 11, 0}}));
  const TopologyReport u = genus1::predicted_topology(5, 12).canonical();
  EXPECT_EQ(u.branches, (std::vector<BranchClass>{{2, 5, 2}}));
  EXPECT_EQ(u.intersections, (std::vector<std::vector<int>>{{0, 10}, {10, 0}}));
  const TopologyReport v = genus1::predicted_topology(2, 3).canonical();
  EXPECT_EQ(v.branches, (std::vector<BranchClass>{{1, 2, 1}}));
}

// The formulas against the symbolic polar of the generic member.
TEST(Genus1, FormulasMatchGenericPolar) {
  for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}, {3, 7}, {4, 7}, {5, 7}, {5, 12}, {7, 19}}) {
    SCOPED_TRACE(std::to_string(p) + "," + std::to_string(q));
    const genus1::PolarModel m = genus1::polar_model(p, q);
    const GenericPolarModel g = generic_polar_model(m.family.generic, family_var, "g");
    EXPECT_EQ(g.polygon, as_polygon(m.sides));
    int height = 0;
    for (const auto& s : m.sides) height += s.side.n;
    EXPECT_EQ(height, p - 1);
    ASSERT_EQ(g.sides.size(), m.F.size());
    for (std::size_t k = 0; k < m.F.size(); ++k) {
      const GenericSide& gs = side_like(g, m.sides[k].side);
      EXPECT_EQ(gs.associated, m.F[k]);
      std::vector<LatticePoint> present;
      for (const auto& [pt, c] : gs.points) present.push_back(pt);
      std::sort(present.begin(), present.end(), [](auto u, auto v) { return u.j < v.j; });
      EXPECT_EQ(present, m.sides[k].support);
    }
    EXPECT_EQ(normalized(g.locus.generators), normalized(genus1::degeneracy_locus(p, q).generators));
    ASSERT_TRUE(g.topology.has_value());
    EXPECT_EQ(g.topology->canonical(), genus1::predicted_topology(p, q).canonical());
  }
}

TEST(Genus2, Beta) {
  EXPECT_EQ(genus2::beta(2, 5, 12, 1), 17);
  EXPECT_EQ(genus2::beta(0, 5, 12, 1), 22);
  EXPECT_EQ(genus2::beta(4, 5, 12, 1), 13);
  EXPECT_LT(genus1::alpha(4, 5, 12) + 12, genus2::beta(4, 5, 12, 1));
}

TEST(Genus2, TermsOfExample) {
  const genus2::PolarModel m = genus2::polar_model(5, 12, 1);
  EXPECT_EQ(m.terms.at(9).m, P("10*b*y^9"));
  EXPECT_EQ(m.terms.at(4).m, P("-10*b*x^12*y^4"));
  EXPECT_EQ(m.terms.at(2).m, P("3*b*(b[17,3] - 2*a[5,3])*x^17*y^2"));
  EXPECT_EQ(m.terms.at(0).m, P("b*(b[22,1] - 2*a[10,1])*x^22"));
  EXPECT_EQ(m.terms.at(9).g, P("5*b*y^9"));
}

TEST(Genus2, PredictedPolygon) {
  const auto s = genus2::predicted_polygon(5, 12, 1);
  const NewtonPolygon np = as_polygon(s);
  EXPECT_EQ(np.vertices(), pts({{0, 9}, {12, 4}, {22, 0}}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].support, pts({{22, 0}, {17, 2}, {12, 4}}));
  EXPECT_EQ(s[1].support, pts({{12, 4}, {0, 9}}));
  const NewtonPolygon small = as_polygon(genus2::predicted_polygon(2, 3, 1));
  EXPECT_EQ(small.vertices(), pts({{0, 3}, {3, 1}, {5, 0}}));
}

TEST(Genus2, AssociatedPolynomials) {
  EXPECT_EQ(genus2::associated_F(5, 12, 1, 0).to_mpoly(),
            P("b*(-10*z^4 + 3*(b[17,3] - 2*a[5,3])*z^2 + b[22,1] - 2*a[10,1])"));
  EXPECT_EQ(genus2::associated_F(5, 12, 1, 1).to_mpoly(), P("10*b*z^5 - 10*b"));
  const UPoly lpq = genus2::associated_F(2, 3, 1, 1);
  EXPECT_EQ(normalize_primitive(lpq.to_mpoly()).to_string(), "z^2*b - b");
}

TEST(Genus2, Locus) {
  EXPECT_EQ(normalized(genus2::degeneracy_locus(5, 12, 1).generators),
            normalized({"b[17,3] - 2*a[5,3]", "b[22,1] - 2*a[10,1]",
                        "9*b[17,3]^2 - 36*a[5,3]*b[17,3] + 36*a[5,3]^2 + 40*b[22,1] - 80*a[10,1]"}));
}

TEST(Genus2, LargeDUsesOnlyGenusOneCoefficients) {
  for (auto [p, q, d] : {std::tuple{2, 5, 7}, {2, 3, 5}}) {
    const DegeneracyLocus l = genus2::degeneracy_locus(p, q, d);
    for (const auto& g : l.generators) {
      for (const VarId& v : g.variables()) EXPECT_EQ(v.kind, VarKind::CoeffA) << g.to_string();
    }
    for (const auto& comp : l.joint) {
      for (const auto& g : comp) {
        for (const VarId& v : g.variables()) EXPECT_EQ(v.kind, VarKind::CoeffA);
      }
    }
  }
}

// With f1 = y^2 - x^k the locus is empty and the polar is a smooth branch
// plus a <2,k> branch meeting with I = k. The general genus-one factor
// brings its own conditions.
TEST(Genus2, NormalFormWhenPIsTwo) {
  for (auto [k, d] : {std::pair{3, 1}, {5, 1}, {5, 3}}) {
    SCOPED_TRACE(std::to_string(k) + "," + std::to_string(d));
    const GenericPolarModel m = genus2::normal_form_model(2, k, d);
    EXPECT_TRUE(m.locus.empty());
    ASSERT_TRUE(m.topology.has_value());
    const TopologyReport t = m.topology->canonical();
    ASSERT_EQ(t.branches.size(), 2u);
    EXPECT_EQ(t.branches[0].a0, 1);
    EXPECT_EQ(t.branches[0].count, 1);
    EXPECT_EQ(t.branches[1], (BranchClass{2, k, 1}));
    EXPECT_EQ(t.intersections[0][1], k);
  }
  EXPECT_EQ(normalized(genus2::degeneracy_locus(2, 5, 1).generators), normalized({"2*a[3,1] - b[8,1]"}));
  EXPECT_EQ(normalized(genus2::degeneracy_locus(2, 5, 3).generators), normalized({"a[3,1]"}));
}

TEST(Genus2, Topology) {
  const TopologyReport t = genus2::predicted_topology(5, 12, 1).canonical();
  EXPECT_EQ(t.branches, (std::vector<BranchClass>{{2, 5, 2}, {5, 12, 1}}));
  EXPECT_EQ(t.intersections, (std::vector<std::vector<int>>{{0, 10, 24}, {10, 0, 24}, {24, 24, 0}}));
  const TopologyReport u = genus2::predicted_topology(2, 3, 1).canonical();
  EXPECT_EQ(u.branches, (std::vector<BranchClass>{{1, 2, 1}, {2, 3, 1}}));
  EXPECT_EQ(u.intersections[0][1], 3);
}

TEST(Genus2, FormulasMatchGenericPolar) {
  for (auto [p, q, d] : {std::tuple{2, 3, 1}, {2, 5, 1}, {2, 5, 7}, {2, 3, 5}, {3, 4, 1}, {5, 12, 1}}) {
    SCOPED_TRACE(std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(d));
    const genus2::PolarModel m = genus2::polar_model(p, q, d);
    const VarId lead = m.family.leading_b();
    const GenericPolarModel g = generic_polar_model(
        m.family.generic, [lead](const VarId& v) { return v.is_family() && v != lead; }, "g");
    EXPECT_EQ(g.polygon, as_polygon(m.sides));
    ASSERT_EQ(g.sides.size(), m.F.size());
    for (std::size_t k = 0; k < m.F.size(); ++k) {
      EXPECT_EQ(side_like(g, m.sides[k].side).associated, m.F[k]);
    }
    EXPECT_EQ(normalized(g.locus.generators), normalized(genus2::degeneracy_locus(p, q, d).generators));
    ASSERT_TRUE(g.topology.has_value());
    EXPECT_EQ(g.topology->canonical(), genus2::predicted_topology(p, q, d).canonical());
  }
}

TEST(Genus2, Classifier) {
  auto verdict = [](std::vector<long> v) { return genus2::classify_nondegenerate({v}); };
  EXPECT_TRUE(verdict({4, 9}).nondegenerate);
  const auto c = verdict({4, 6, 13});
  EXPECT_TRUE(c.nondegenerate);
  EXPECT_EQ(c.shape, (std::vector<long>{2, 2, 3, 1}));
  const auto n = verdict({6, 9, 19});
  EXPECT_FALSE(n.nondegenerate);
  EXPECT_EQ(n.reason, "e1=3");
  const auto g3 = genus2::classify_nondegenerate(semigroup_from_char({8, 12, 26, 53}));
  EXPECT_EQ(g3.genus, 3);
  EXPECT_FALSE(g3.nondegenerate);
  EXPECT_THROW(verdict({4, 6, 12}), PreconditionError);
  EXPECT_TRUE(verdict({1}).nondegenerate);
}
