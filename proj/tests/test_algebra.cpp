#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polarnd/curvekit.hpp"
#include "polarnd/error.hpp"
#include "polarnd/mpoly.hpp"
#include "polarnd/upoly.hpp"

using namespace polarnd;

namespace {

MPoly P(const std::string& s) { return parse_series(s).poly; }

UPoly Z(const std::string& s) { return UPoly::from_mpoly(P(s), VarId::z()); }

bool proportional(const MPoly& f, const MPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return normalize_primitive(f) == normalize_primitive(g);
}

MPoly random_concrete(std::mt19937_64& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> c(-6, 6);
  MPoly f;
  for (int k = 0; k < terms; ++k) {
    const Monomial m({{VarId::x(), static_cast<unsigned>(e(rng))},
                      {VarId::y(), static_cast<unsigned>(e(rng))}});
    f += MPoly::term(make_rational(c(rng), 1 + std::abs(c(rng))), m);
  }
  return f;
}

}  // namespace

TEST(Rational, Canonical) {
  EXPECT_EQ(to_string(make_rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(make_rational(3, -6)), "-1/2");
  EXPECT_EQ(to_string(make_rational(6, 3)), "2");
  EXPECT_EQ(parse_rational("-9/20"), make_rational(-9, 20));
  EXPECT_THROW(make_rational(1, 0), PreconditionError);
}

TEST(MPoly, RingExamples) {
  EXPECT_EQ(P("x+y") * P("x-y"), P("x^2-y^2"));
  EXPECT_EQ(P("y^2-x^3") + P("x^3"), P("y^2"));
  const MPoly f1 = P("y^5 - x^12 + x^5*y^3 + x^8*y^2 + (9/20)*x^10*y");
  EXPECT_EQ(pow(f1, 2), f1 * f1);
  EXPECT_EQ(pow(f1, 0), MPoly(1));
}

TEST(MPoly, Derivatives) {
  EXPECT_EQ(derivative(P("y^5 - x^12"), VarId::x()), P("-12*x^11"));
  const MPoly f1 = P("y^5 - x^12 + x^5*y^3 + x^8*y^2 + (9/20)*x^10*y");
  EXPECT_EQ(derivative(f1, VarId::y()), P("5*y^4 + 3*x^5*y^2 + 2*x^8*y + (9/20)*x^10"));
  EXPECT_TRUE(derivative(P("7/3"), VarId::x()).is_zero());
}

TEST(MPoly, LeibnizRandom) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const MPoly f = random_concrete(rng, 5, 6);
    const MPoly g = random_concrete(rng, 5, 6);
    for (VarId v : {VarId::x(), VarId::y()}) {
      EXPECT_EQ(derivative(f * g, v), derivative(f, v) * g + f * derivative(g, v));
    }
  }
}

TEST(MPoly, RenderParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    MPoly f = random_concrete(rng, 6, 5);
    f += random_concrete(rng, 3, 2) * P("a[11,3] - 2*b[22,1]*z^2 + a*b");
    EXPECT_EQ(P(f.to_string()), f) << f.to_string();
  }
  EXPECT_EQ(P("0").to_string(), "0");
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(Z("z^2 - a"), Z("z")), P("-a"));
  EXPECT_TRUE(resultant(Z("z^3 + x*z + 1"), Z("z^3 + x*z + 1")).is_zero());
  EXPECT_EQ(resultant(Z("z - x"), Z("z - y")), P("x - y"));
}

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(Z("z^2 + a*z + b")), P("a^2 - 4*b"));
  EXPECT_EQ(discriminant(Z("z^3 + a*z + b")), P("-4*a^3 - 27*b^2"));
  const UPoly f0 = Z("3*b*a[11,3]*z^2 + 2*b*a[14,2]*z + b*a[17,1]");
  const MPoly d0 = discriminant(f0);
  EXPECT_EQ(d0, P("4*b^2*a[14,2]^2 - 12*b^2*a[11,3]*a[17,1]"));
  // the value 12 b^3 a[11,3] (...) is Res(F, F') = -lc(F) disc(F)
  EXPECT_EQ(resultant(f0, f0.derivative()), P("12*b^3*a[11,3]*(3*a[11,3]*a[17,1] - a[14,2]^2)"));
  const MPoly d1 = discriminant(Z("b*(7*z^4 + 3*a[11,3])"));
  EXPECT_TRUE(proportional(d1, pow(P("84*b^2*a[11,3]"), 3)));
  EXPECT_EQ(d1, Rational(4) * pow(P("84*b^2*a[11,3]"), 3));
}

// Res vanishes exactly when a common factor exists; Res(FG,H) splits;
// disc(FG) = disc F disc G Res(F,G)^2 for monic F, G.
TEST(Resultant, RandomIdentities) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-4, 4);
  auto monic = [&](int deg) {
    std::vector<Rational> v(static_cast<std::size_t>(deg + 1));
    for (auto& x : v) x = Rational(c(rng));
    v.back() = 1;
    return v;
  };
  for (int k = 0; k < 40; ++k) {
    const UPoly f = oracle::to_upoly(monic(1 + k % 3));
    const UPoly g = oracle::to_upoly(monic(1 + (k / 3) % 3));
    const UPoly h = oracle::to_upoly(monic(1 + (k / 9) % 3));
    const UPoly fg = UPoly::from_mpoly(f.to_mpoly() * g.to_mpoly(), VarId::z());
    EXPECT_EQ(resultant(fg, h), resultant(f, h) * resultant(g, h));
    EXPECT_EQ(discriminant(fg),
              discriminant(f) * discriminant(g) * pow(resultant(f, g), 2));
    const bool common = gcd(f.to_mpoly(), g.to_mpoly()).total_degree() > 0;
    EXPECT_EQ(resultant(f, g).is_zero(), common);
    const UPoly fh = UPoly::from_mpoly(f.to_mpoly() * h.to_mpoly(), VarId::z());
    EXPECT_TRUE(resultant(fh, fg).is_zero());
  }
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(is_squarefree(Z("z^2 - 1")).squarefree);
  EXPECT_FALSE(is_squarefree(Z("(z-1)^2")).squarefree);
  EXPECT_FALSE(is_squarefree(Z("(z^2-1)^2")).squarefree);
  const SquarefreeVerdict sym = is_squarefree(Z("z^2 + a[3,1]*z + 1"));
  EXPECT_TRUE(sym.squarefree);
  EXPECT_EQ(sym.method, SquarefreeMethod::SymbolicDiscriminant);
}

TEST(Squarefree, AgreesWithRootClustering) {
  std::mt19937_64 rng(20240601);
  int repeated = 0;
  for (int k = 0; k < 100; ++k) {
    const auto c = oracle::random_univariate(rng);
    const int deg = static_cast<int>(c.size()) - 1;
    const bool numeric = oracle::distinct_roots(c) == deg;
    EXPECT_EQ(is_squarefree(oracle::to_upoly(c)).squarefree, numeric) << oracle::to_upoly(c).to_string();
    repeated += numeric ? 0 : 1;
  }
  EXPECT_GT(repeated, 10);  // the sample must exercise both answers
}

TEST(StripContent, Examples) {
  auto is_a = [](const VarId& v) { return v.kind == VarKind::CoeffA; };
  EXPECT_EQ(strip_content(P("12*b^3*a[11,3]*(3*a[11,3]*a[17,1] - a[14,2]^2)"), is_a),
            P("a[11,3]*(3*a[11,3]*a[17,1] - a[14,2]^2)"));
  EXPECT_EQ(strip_content(P("7*b"), is_a), MPoly(1));
  EXPECT_EQ(strip_content(P("-4*x^2*y"), std::set<VarId>{}), MPoly(1));
}

TEST(SquarefreePart, Examples) {
  const MPoly s = squarefree_part(pow(P("84*b^2*a[11,3]"), 3), VarId::coeff_a(11, 3));
  EXPECT_EQ(s, P("b*a[11,3]"));
  EXPECT_EQ(squarefree_part(P("a[17,1]"), VarId::coeff_a(17, 1)), P("a[17,1]"));
  EXPECT_TRUE(proportional(squarefree_part(P("(x^2-y)^2*(x+y)"), VarId::x()),
                           P("(x^2-y)*(x+y)")));
}

TEST(StripContent, Idempotent) {
  auto is_a = [](const VarId& v) { return v.kind == VarKind::CoeffA; };
  for (const char* s : {"12*b^3*a[11,3]*(3*a[11,3]*a[17,1] - a[14,2]^2)", "6*a[5,3]^2*b - 4*a[10,1]*b",
                        "(a[1,1]^2-b)^2*(a[1,1]+b)*a^3"}) {
    const MPoly once = strip_content(P(s), is_a);
    EXPECT_EQ(strip_content(once, is_a), once);
    const MPoly sf = squarefree_part(P(s));
    EXPECT_EQ(squarefree_part(sf), sf);
  }
}

TEST(Gcd, Basic) {
  EXPECT_EQ(gcd(P("(x+y)^2*(x-1)"), P("(x+y)*(y-3)")), P("x+y"));
  EXPECT_EQ(gcd(P("2*x"), P("3")), MPoly(1));
  EXPECT_THROW(divide_exact(P("x"), P("y")), PreconditionError);
}
