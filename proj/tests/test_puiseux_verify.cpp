#include <gtest/gtest.h>

#include <json.hpp>

#include "polarnd/error.hpp"
#include "polarnd/genus1.hpp"
#include "polarnd/genus2.hpp"
#include "polarnd/puiseux.hpp"
#include "polarnd/verify.hpp"

using namespace polarnd;

namespace {

PlaneSeries S(const std::string& s) { return parse_series(s); }

const char* kPinnedMember = "y^5 - x^12 + x^5*y^3 + x^8*y^2 + (9/20)*x^10*y";

PlaneSeries sampled_polar(const FamilySpec& fam, int trial) {
  SampleConfig cfg;
  cfg.family = fam;
  const Sample s = sample_off_locus(cfg, trial);
  return polar(s.member, PolarParams::concrete(s.ab->first, s.ab->second));
}

int y_order(const PlaneSeries& f) {
  int best = -1;
  for (const auto& [ij, c] : plane_coefficients(f.poly)) {
    if (ij.first == 0 && (best < 0 || ij.second < best)) best = ij.second;
  }
  return best;
}

const PuiseuxBranch& with_class(const PuiseuxResult& r, int n, int m) {
  for (const auto& b : r.branches) {
    const auto c = b.leading_class();
    if (c && c->a0 == n && c->a1 == m) return b;
  }
  throw Error("no branch of class (" + std::to_string(n) + "," + std::to_string(m) + ")");
}

}  // namespace

TEST(Puiseux, Cusp) {
  const PuiseuxResult r = puiseux_expand(S("y^2 - x^3"));
  ASSERT_EQ(r.branches.size(), 1u);
  const PuiseuxBranch& b = r.branches[0];
  EXPECT_EQ(b.n, 2);
  ASSERT_EQ(b.terms.size(), 1u);
  EXPECT_EQ(b.terms[0].exponent, make_rational(3, 2));
  EXPECT_LT(static_cast<double>(abs(abs(b.terms[0].coeff) - 1)), 1e-30);
  EXPECT_TRUE(b.exact);
  EXPECT_EQ(b.char_exponents, (std::vector<long>{2, 3}));
  EXPECT_EQ(b.genus, 1);
}

TEST(Puiseux, PinnedDegeneratePolar) {
  const PlaneSeries pol = polar(S(kPinnedMember), PolarParams::concrete(1, 1));
  const PuiseuxResult r = puiseux_expand(pol);
  ASSERT_EQ(r.branches.size(), 1u);
  const PuiseuxBranch& b = r.branches[0];
  EXPECT_EQ(b.n, 4);
  EXPECT_EQ(b.char_exponents, (std::vector<long>{4, 10, 11}));
  EXPECT_EQ(b.genus, 2);
  ASSERT_TRUE(b.semigroup.has_value());
  EXPECT_EQ(b.semigroup->generators, (std::vector<long>{4, 10, 21}));
  EXPECT_LT(b.residual, 1e-8);
  ASSERT_GE(b.terms.size(), 2u);
  EXPECT_EQ(b.terms[0].exponent, make_rational(10, 4));
  EXPECT_EQ(b.terms[1].exponent, make_rational(11, 4));
  // the same polar at another general point
  const PuiseuxResult r2 = puiseux_expand(polar(S(kPinnedMember), PolarParams::concrete(3, -2)));
  ASSERT_EQ(r2.branches.size(), 1u);
  EXPECT_EQ(r2.branches[0].char_exponents, (std::vector<long>{4, 10, 11}));
}

TEST(Puiseux, TwoLines) {
  const PuiseuxResult r = puiseux_expand(S("(y - x)*(y - 2*x)"));
  ASSERT_EQ(r.branches.size(), 2u);
  for (const auto& b : r.branches) {
    EXPECT_EQ(b.n, 1);
    EXPECT_EQ(b.genus, 0);
  }
  EXPECT_EQ(intersection_numeric(r.branches[0], r.branches[1]), 1);
}

TEST(Puiseux, RepeatedFactor) {
  const PuiseuxResult r = puiseux_expand(S("(y - x)^2*(y + x)"));
  int total = 0;
  for (const auto& b : r.branches) total += b.n * b.multiplicity;
  EXPECT_EQ(total, 3);
  bool doubled = false;
  for (const auto& b : r.branches) doubled = doubled || b.multiplicity == 2;
  EXPECT_TRUE(doubled);
}

TEST(Puiseux, Preconditions) {
  EXPECT_THROW(puiseux_expand(S("1 + x")), PreconditionError);
  EXPECT_THROW(puiseux_expand(S("y^2 - a[3,1]*x^3")), PreconditionError);
}

TEST(Puiseux, SemigroupFromChar) {
  EXPECT_EQ(semigroup_from_char({2, 3}).generators, (std::vector<long>{2, 3}));
  EXPECT_EQ(semigroup_from_char({4, 10, 11}).generators, (std::vector<long>{4, 10, 21}));
  EXPECT_EQ(semigroup_from_char({7, 19}).generators, (std::vector<long>{7, 19}));
  EXPECT_EQ(semigroup_from_char({4, 10, 11}).to_string(), "<4,10,21>");
}

TEST(Puiseux, SampledGenusOnePolar) {
  const PlaneSeries pol = sampled_polar({7, 19, std::nullopt, 2}, 0);
  const PuiseuxResult r = puiseux_expand(pol);
  int total = 0;
  for (const auto& b : r.branches) total += b.n * b.multiplicity;
  EXPECT_EQ(total, y_order(pol));
  std::vector<const PuiseuxBranch*> smooth;
  for (const auto& b : r.branches) {
    if (b.n == 1) smooth.push_back(&b);
  }
  ASSERT_EQ(smooth.size(), 2u);
  const PuiseuxBranch& rho = with_class(r, 4, 11);
  EXPECT_EQ(intersection_numeric(*smooth[0], *smooth[1]), 3);
  EXPECT_EQ(intersection_numeric(*smooth[0], rho), 11);
  EXPECT_EQ(intersection_numeric(rho, *smooth[1]), 11);
  EXPECT_EQ(topology_from_puiseux(r), oka_decomposition(pol).canonical());
}

TEST(Puiseux, SampledGenusTwoPolar) {
  const PlaneSeries pol = sampled_polar({5, 12, 1, 2}, 0);
  const PuiseuxResult r = puiseux_expand(pol);
  const PuiseuxBranch& big = with_class(r, 5, 12);
  for (const auto& b : r.branches) {
    if (&b == &big) continue;
    EXPECT_EQ(b.leading_class(), (BranchClass{2, 5, 1}));
    EXPECT_EQ(intersection_numeric(b, big), 24);
  }
  EXPECT_EQ(topology_from_puiseux(r), genus2::predicted_topology(5, 12, 1).canonical());
}

TEST(Verify, SamplesAvoidTheLocus) {
  SampleConfig cfg;
  cfg.family = {7, 19, std::nullopt, 2};
  cfg.seed = 1;
  const DegeneracyLocus l = genus1::degeneracy_locus(7, 19);
  for (int t = 0; t < 10; ++t) {
    const Sample s = sample_off_locus(cfg, t);
    EXPECT_FALSE(l.contains(s.assignment));
    ASSERT_TRUE(s.ab.has_value());
    EXPECT_NE(s.ab->first, 0);
    EXPECT_NE(s.ab->second, 0);
  }
  cfg.family = {2, 3, std::nullopt, 2};
  for (int t = 0; t < 10; ++t) EXPECT_EQ(sample_off_locus(cfg, t).redraws, 0);
}

TEST(Verify, OnLocusChangesThePolygon) {
  SampleConfig cfg;
  cfg.family = {7, 19, std::nullopt, 2};
  cfg.trials = 5;
  cfg.forced[VarId::coeff_a(17, 1)] = 0;
  const VerifyReport rep = run_verification(cfg);
  for (const auto& r : rep.records) {
    ASSERT_TRUE(r.polygon_match.has_value());
    EXPECT_FALSE(*r.polygon_match);
  }
  const Sample s = sample_off_locus(cfg, 0);
  const PlaneSeries pol = polar(s.member, PolarParams::concrete(s.ab->first, s.ab->second));
  for (const auto& [ij, c] : plane_coefficients(pol.poly)) EXPECT_NE(ij, std::make_pair(17, 0));
}

TEST(Verify, GenusOneFamily) {
  SampleConfig cfg;
  cfg.family = {7, 19, std::nullopt, 2};
  const VerifyReport rep = run_verification(cfg);
  EXPECT_EQ(rep.summary.trials, 50);
  EXPECT_EQ(rep.summary.polygon_match, 50);
  EXPECT_EQ(rep.summary.all_squarefree, 50);
  EXPECT_EQ(rep.summary.topology_match, 50);
  EXPECT_TRUE(rep.all_match());
}

TEST(Verify, GenusTwoFamily) {
  SampleConfig cfg;
  cfg.family = {5, 12, 1, 2};
  const VerifyReport rep = run_verification(cfg);
  EXPECT_EQ(rep.summary.polygon_match, 50);
  EXPECT_EQ(rep.summary.all_squarefree, 50);
  EXPECT_EQ(rep.summary.topology_match, 50);
  for (const auto& r : rep.records) EXPECT_EQ(r.pq_branches, 1);
}

TEST(Verify, CubeOfGenusOneIsDegenerate) {
  SampleConfig cfg;
  cfg.family = {2, 3, 1, 3};
  cfg.trials = 10;
  const VerifyReport rep = run_verification(cfg);
  const MPoly want = normalize_primitive(S("(z^2 - 1)^2").poly);
  for (const auto& r : rep.records) {
    EXPECT_FALSE(r.nondegenerate);
    ASSERT_TRUE(r.failing_side.has_value());
    EXPECT_EQ(r.failing_segment, "(0,5)-(6,1)");
    EXPECT_EQ(normalize_primitive(S(r.failing_polynomial).poly), want);
  }
}

TEST(Verify, Deterministic) {
  SampleConfig cfg;
  cfg.family = {3, 7, std::nullopt, 2};
  cfg.trials = 8;
  cfg.puiseux_crosscheck = true;
  const std::string a = run_verification(cfg).to_json();
  const std::string b = run_verification(cfg).to_json();
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["prng"], kPrngName);
  EXPECT_EQ(j["records"].size(), 8u);
  cfg.seed = 43;
  EXPECT_NE(run_verification(cfg).to_json(), a);
}
