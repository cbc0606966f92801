#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "polarnd/curvekit.hpp"
#include "polarnd/upoly.hpp"

namespace polarnd {

struct LatticePoint {
  int i = 0;
  int j = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Compact side of a Newton polygon. `from` is the end with larger j, `to`
/// the end with larger i; n = from.j - to.j, m = to.i - from.i, d = gcd(n, m).
struct Side {
  LatticePoint from;
  LatticePoint to;
  std::vector<LatticePoint> lattice_points;  // from -> to, d + 1 entries
  int n = 0;
  int m = 0;
  int d = 0;

  /// True when (i, j) lies on the supporting line of the side.
  bool on_line(LatticePoint pt) const { return n * pt.i + m * pt.j == n * from.i + m * from.j; }
  bool operator==(const Side& o) const { return from == o.from && to == o.to; }
};

Side make_side(LatticePoint from, LatticePoint to);

/// Lower-left hull of a support. Sides are ordered from the j-axis end to the
/// i-axis end, i.e. by strictly decreasing n/m.
struct NewtonPolygon {
  std::vector<Side> sides;
  LatticePoint top;     // minimal i, then minimal j
  LatticePoint bottom;  // minimal j, then minimal i

  std::vector<LatticePoint> vertices() const;
  int height() const { return top.j - bottom.j; }
  bool operator==(const NewtonPolygon& o) const {
    return sides == o.sides && top == o.top && bottom == o.bottom;
  }
};

/// Throws PreconditionError on an empty support.
NewtonPolygon newton_polygon(std::span<const LatticePoint> support);
/// Polygon of the x, y support (points whose coefficient is a nonzero
/// polynomial). Throws on the zero series.
NewtonPolygon newton_polygon(const PlaneSeries& f);

std::vector<LatticePoint> support(const PlaneSeries& f);

/// Sum of the terms of f lying on the side. Throws if `s` is not a side of N(f).
MPoly side_polynomial(const PlaneSeries& f, const Side& s);
/// F(z) = f_side(1, z) / z^{j0}, j0 the smallest j on the side.
UPoly associated_polynomial(const PlaneSeries& f, const Side& s);

enum class Nondegeneracy {
  Nondegenerate,
  /// Every discriminant is a nonzero polynomial: holds for general values.
  GenericallyNondegenerate,
  Degenerate,
};

std::string to_string(Nondegeneracy v);

struct SideVerdict {
  Side side;
  UPoly associated;
  bool squarefree = false;
  SquarefreeMethod method = SquarefreeMethod::ConcreteGcd;
};

struct NondegeneracyReport {
  Nondegeneracy verdict = Nondegeneracy::Degenerate;
  NewtonPolygon polygon;
  std::vector<SideVerdict> sides;

  bool nondegenerate() const { return verdict != Nondegeneracy::Degenerate; }
};

/// f is assumed reduced. Throws on the zero series.
NondegeneracyReport is_nondegenerate(const PlaneSeries& f);

/// Branch class <a0, a1> (a0 <= a1, coprime) with its number of branches.
struct BranchClass {
  int a0 = 1;
  int a1 = 1;
  int count = 1;
  auto operator<=>(const BranchClass&) const = default;
};

/// min(a0 b1, b0 a1).
int intersection_number(const BranchClass& lhs, const BranchClass& rhs);

struct TopologyReport {
  std::vector<BranchClass> branches;
  /// Symmetric table over individual branches (classes expanded by count,
  /// in the order of `branches`); the diagonal is 0.
  std::vector<std::vector<int>> intersections;

  static TopologyReport from_classes(std::vector<BranchClass> classes);
  /// Classes sorted, equal classes merged.
  TopologyReport canonical() const;
  bool operator==(const TopologyReport&) const = default;
};

/// Oka's decomposition of a polygon whose sides are all known to be
/// squarefree. Requires top.i = 0, bottom.j = 0 and m >= n on every side.
TopologyReport oka_decomposition(const NewtonPolygon& polygon);
/// Concrete f: checks nondegeneracy first.
TopologyReport oka_decomposition(const PlaneSeries& f);

NewtonPolygon minkowski_sum(const NewtonPolygon& lhs, const NewtonPolygon& rhs);

}  // namespace polarnd
