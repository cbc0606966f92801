#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polarnd/curvekit.hpp"
#include "polarnd/error.hpp"
#include "polarnd/newton.hpp"
#include "polarnd/verify.hpp"

using namespace polarnd;

namespace {

PlaneSeries S(const std::string& s) { return parse_series(s); }

std::set<oracle::Edge> edges_of(const NewtonPolygon& np) {
  std::set<oracle::Edge> out;
  for (const Side& s : np.sides) {
    EXPECT_EQ(s.n, s.from.j - s.to.j);
    EXPECT_EQ(s.m, s.to.i - s.from.i);
    EXPECT_EQ(static_cast<int>(s.lattice_points.size()), s.d + 1);
    out.emplace(s.from, s.to, s.n / s.d, s.m / s.d);
  }
  return out;
}

std::vector<LatticePoint> random_support(std::mt19937_64& rng, int count, int range) {
  std::uniform_int_distribution<int> c(0, range);
  std::vector<LatticePoint> pts;
  for (int k = 0; k < count; ++k) pts.push_back({c(rng), c(rng)});
  return pts;
}

}  // namespace

TEST(Newton, SingleSide) {
  const NewtonPolygon np = newton_polygon(S("y^7 - x^19"));
  ASSERT_EQ(np.sides.size(), 1u);
  EXPECT_EQ(np.sides[0].from, (LatticePoint{0, 7}));
  EXPECT_EQ(np.sides[0].to, (LatticePoint{19, 0}));
  EXPECT_EQ(np.sides[0].d, 1);
}

TEST(Newton, GenusTwoExampleSupport) {
  const std::vector<LatticePoint> pts{{0, 9}, {12, 4}, {17, 2}, {22, 0}};
  const NewtonPolygon np = newton_polygon(pts);
  ASSERT_EQ(np.sides.size(), 2u);
  EXPECT_EQ(np.sides[0].from, (LatticePoint{0, 9}));
  EXPECT_EQ(np.sides[0].to, (LatticePoint{12, 4}));
  EXPECT_EQ(np.sides[1].from, (LatticePoint{12, 4}));
  EXPECT_EQ(np.sides[1].to, (LatticePoint{22, 0}));
  EXPECT_EQ(np.sides[1].lattice_points,
            (std::vector<LatticePoint>{{12, 4}, {17, 2}, {22, 0}}));
  EXPECT_EQ(np.vertices(), (std::vector<LatticePoint>{{0, 9}, {12, 4}, {22, 0}}));
}

TEST(Newton, BruteForceHull) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    const auto pts = random_support(rng, 1 + k % 30, 20);
    const NewtonPolygon np = newton_polygon(pts);
    EXPECT_EQ(edges_of(np), oracle::brute_edges(pts));
    const auto v = np.vertices();
    EXPECT_EQ(std::set<LatticePoint>(v.begin(), v.end()), oracle::brute_vertices(pts));
    int height = 0;
    for (const Side& s : np.sides) height += s.from.j - s.to.j;
    EXPECT_EQ(height, np.height());
  }
}

TEST(Newton, MinkowskiSum) {
  const NewtonPolygon a = newton_polygon(S("y^2 - x^3"));
  const NewtonPolygon two = minkowski_sum(a, a);
  ASSERT_EQ(two.sides.size(), 1u);
  EXPECT_EQ(two.sides[0].from, (LatticePoint{0, 4}));
  EXPECT_EQ(two.sides[0].to, (LatticePoint{6, 0}));
  EXPECT_EQ(minkowski_sum(a, newton_polygon(S("1"))), a);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    const auto p1 = random_support(rng, 6, 10);
    const auto p2 = random_support(rng, 6, 10);
    std::vector<LatticePoint> sum;
    for (auto u : p1) {
      for (auto v : p2) sum.push_back({u.i + v.i, u.j + v.j});
    }
    EXPECT_EQ(minkowski_sum(newton_polygon(p1), newton_polygon(p2)), newton_polygon(sum));
  }
}

// N(f1 P(f1)) = N(f1) + N(P(f1)) on sampled members.
TEST(Newton, ProductPolygonIsMinkowskiSum) {
  int checked = 0;
  for (auto [p, q] : {std::pair{2, 3}, {3, 7}, {5, 12}, {7, 19}}) {
    SampleConfig cfg;
    cfg.family = {p, q, std::nullopt, 2};
    for (int t = 0; t < 5; ++t) {
      const Sample s = sample_off_locus(cfg, t);
      const PlaneSeries pol = polar(s.member, PolarParams::concrete(s.ab->first, s.ab->second));
      const PlaneSeries prod{s.member.poly * pol.poly, std::nullopt};
      EXPECT_EQ(newton_polygon(prod), minkowski_sum(newton_polygon(s.member), newton_polygon(pol)));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 20);
}

TEST(Newton, AssociatedPolynomial) {
  const PlaneSeries f = S("y^2 - x^3");
  const NewtonPolygon np = newton_polygon(f);
  EXPECT_EQ(associated_polynomial(f, np.sides[0]).to_string(), "z^2 - 1");
  EXPECT_EQ(side_polynomial(f, np.sides[0]), f.poly);
}

TEST(Newton, Nondegeneracy) {
  EXPECT_FALSE(is_nondegenerate(S("(y - x)^2")).nondegenerate());
  EXPECT_TRUE(is_nondegenerate(S("y^2 - x^3")).nondegenerate());
  const NondegeneracyReport r = is_nondegenerate(S("(y^2 - x^3)^3 + x^7*y^2"));
  EXPECT_EQ(r.verdict, Nondegeneracy::Degenerate);
  const NondegeneracyReport g = is_nondegenerate(S("y^2 - a[3,1]*x^3"));
  EXPECT_EQ(g.verdict, Nondegeneracy::GenericallyNondegenerate);
}

TEST(Newton, OkaExamples) {
  // sides (0,6)-(11,2) and (11,2)-(17,0) of the K(7,19) polar
  const NewtonPolygon np = newton_polygon(std::vector<LatticePoint>{{0, 6}, {11, 2}, {14, 1}, {17, 0}});
  const TopologyReport t = oka_decomposition(np).canonical();
  ASSERT_EQ(t.branches.size(), 2u);
  EXPECT_EQ(t.branches[0], (BranchClass{1, 3, 2}));
  EXPECT_EQ(t.branches[1], (BranchClass{4, 11, 1}));
  EXPECT_EQ(t.intersections, (std::vector<std::vector<int>>{{0, 3, 11}, {3, 0, 11}, {11, 11, 0}}));

  const TopologyReport one = oka_decomposition(newton_polygon(S("y^5 - x^12"))).canonical();
  ASSERT_EQ(one.branches.size(), 1u);
  EXPECT_EQ(one.branches[0], (BranchClass{5, 12, 1}));

  const TopologyReport g2 =
      oka_decomposition(newton_polygon(std::vector<LatticePoint>{{0, 9}, {12, 4}, {17, 2}, {22, 0}})).canonical();
  ASSERT_EQ(g2.branches.size(), 2u);
  EXPECT_EQ(g2.branches[0], (BranchClass{2, 5, 2}));
  EXPECT_EQ(g2.branches[1], (BranchClass{5, 12, 1}));
  EXPECT_EQ(g2.intersections, (std::vector<std::vector<int>>{{0, 10, 24}, {10, 0, 24}, {24, 24, 0}}));
  EXPECT_EQ(intersection_number({2, 5, 1}, {5, 12, 1}), 24);
  EXPECT_EQ(intersection_number({1, 3, 1}, {4, 11, 1}), 11);
}

// For nondegenerate f the classes account for the whole polygon height.
TEST(Newton, BranchCountMatchesHeight) {
  for (auto [p, q] : {std::pair{3, 7}, {5, 12}, {7, 19}}) {
    SampleConfig cfg;
    cfg.family = {p, q, std::nullopt, 2};
    const Sample s = sample_off_locus(cfg, 0);
    const PlaneSeries pol = polar(s.member, PolarParams::concrete(s.ab->first, s.ab->second));
    const NewtonPolygon np = newton_polygon(pol);
    const TopologyReport t = oka_decomposition(pol);
    int total = 0;
    for (const auto& b : t.branches) total += b.count * b.a0;
    EXPECT_EQ(total, np.height());
    for (std::size_t i = 0; i < t.intersections.size(); ++i) {
      for (std::size_t j = 0; j < t.intersections.size(); ++j) {
        EXPECT_EQ(t.intersections[i][j], t.intersections[j][i]);
      }
    }
  }
}

TEST(Newton, OkaRejectsDegenerate) {
  EXPECT_THROW(oka_decomposition(S("(y - x)^2")), PreconditionError);
}
