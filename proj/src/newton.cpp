#include "polarnd/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polarnd/error.hpp"

namespace polarnd {

Side make_side(LatticePoint from, LatticePoint to) {
  if (!(from.j > to.j && to.i > from.i)) {
    throw PreconditionError("a side must descend from the j-axis end to the i-axis end");
  }
  Side s{from, to, {}, from.j - to.j, to.i - from.i, 0};
  s.d = std::gcd(s.n, s.m);
  const int di = s.m / s.d;
  const int dj = s.n / s.d;
  for (int t = 0; t <= s.d; ++t) s.lattice_points.push_back({from.i + t * di, from.j - t * dj});
  return s;
}

std::vector<LatticePoint> NewtonPolygon::vertices() const {
  std::vector<LatticePoint> out{top};
  for (const auto& s : sides) out.push_back(s.to);
  return out;
}

NewtonPolygon newton_polygon(std::span<const LatticePoint> support) {
  if (support.empty()) throw PreconditionError("Newton polygon of an empty support");
  NewtonPolygon poly;
  poly.top = *std::min_element(support.begin(), support.end());
  poly.bottom = *std::min_element(support.begin(), support.end(),
                                  [](const LatticePoint& l, const LatticePoint& r) {
                                    return std::tie(l.j, l.i) < std::tie(r.j, r.i);
                                  });
  LatticePoint cur = poly.top;
  while (cur != poly.bottom) {
    // Steepest descent from cur; among equally steep points the farthest.
    const LatticePoint* best = nullptr;
    for (const auto& pt : support) {
      if (pt.j >= cur.j || pt.i <= cur.i) continue;
      if (best == nullptr) {
        best = &pt;
        continue;
      }
      const long long lhs = static_cast<long long>(cur.j - pt.j) * (best->i - cur.i);
      const long long rhs = static_cast<long long>(cur.j - best->j) * (pt.i - cur.i);
      if (lhs > rhs || (lhs == rhs && pt.i > best->i)) best = &pt;
    }
    if (best == nullptr) throw Error("Newton polygon walk lost the hull");
    poly.sides.push_back(make_side(cur, *best));
    cur = *best;
  }
  return poly;
}

std::vector<LatticePoint> support(const PlaneSeries& f) {
  std::vector<LatticePoint> out;
  for (const auto& [ij, c] : plane_coefficients(f.poly)) out.push_back({ij.first, ij.second});
  return out;
}

NewtonPolygon newton_polygon(const PlaneSeries& f) {
  if (f.poly.is_zero()) throw PreconditionError("Newton polygon of the zero series");
  const auto pts = support(f);
  return newton_polygon(pts);
}

namespace {

void require_side_of(const PlaneSeries& f, const Side& s) {
  const NewtonPolygon poly = newton_polygon(f);
  if (std::find(poly.sides.begin(), poly.sides.end(), s) == poly.sides.end()) {
    throw PreconditionError("side (" + std::to_string(s.from.i) + "," +
                            std::to_string(s.from.j) + ")-(" + std::to_string(s.to.i) +
                            "," + std::to_string(s.to.j) + ") is not a side of N(f)");
  }
}

UPoly associated_unchecked(const std::map<std::pair<int, int>, MPoly>& coeffs, const Side& s) {
  std::vector<MPoly> out(static_cast<std::size_t>(s.n) + 1);
  for (const auto& [ij, c] : coeffs) {
    const LatticePoint pt{ij.first, ij.second};
    if (!s.on_line(pt)) continue;
    out[static_cast<std::size_t>(pt.j - s.to.j)] = c;
  }
  return UPoly(VarId::z(), std::move(out));
}

}  // namespace

MPoly side_polynomial(const PlaneSeries& f, const Side& s) {
  require_side_of(f, s);
  MPoly out;
  for (const auto& [m, c] : f.poly.terms()) {
    const LatticePoint pt{static_cast<int>(m.exponent(VarId::x())),
                          static_cast<int>(m.exponent(VarId::y()))};
    if (s.on_line(pt)) out.add_term(m, c);
  }
  return out;
}

UPoly associated_polynomial(const PlaneSeries& f, const Side& s) {
  require_side_of(f, s);
  return associated_unchecked(plane_coefficients(f.poly), s);
}

std::string to_string(Nondegeneracy v) {
  switch (v) {
    case Nondegeneracy::Nondegenerate: return "nondegenerate";
    case Nondegeneracy::GenericallyNondegenerate: return "generically nondegenerate";
    case Nondegeneracy::Degenerate: return "degenerate";
  }
  return "?";
}

NondegeneracyReport is_nondegenerate(const PlaneSeries& f) {
  NondegeneracyReport report;
  report.polygon = newton_polygon(f);
  const auto coeffs = plane_coefficients(f.poly);
  bool all_squarefree = true;
  bool symbolic = false;
  for (const auto& s : report.polygon.sides) {
    SideVerdict v{s, associated_unchecked(coeffs, s), false, SquarefreeMethod::ConcreteGcd};
    const auto sq = is_squarefree(v.associated);
    v.squarefree = sq.squarefree;
    v.method = sq.method;
    all_squarefree = all_squarefree && sq.squarefree;
    symbolic = symbolic || sq.method == SquarefreeMethod::SymbolicDiscriminant;
    report.sides.push_back(std::move(v));
  }
  if (!all_squarefree) {
    report.verdict = Nondegeneracy::Degenerate;
  } else {
    report.verdict = symbolic ? Nondegeneracy::GenericallyNondegenerate
                              : Nondegeneracy::Nondegenerate;
  }
  return report;
}

int intersection_number(const BranchClass& lhs, const BranchClass& rhs) {
  return std::min(lhs.a0 * rhs.a1, rhs.a0 * lhs.a1);
}

TopologyReport TopologyReport::from_classes(std::vector<BranchClass> classes) {
  TopologyReport out;
  out.branches = std::move(classes);
  std::vector<const BranchClass*> expanded;
  for (const auto& c : out.branches) {
    for (int k = 0; k < c.count; ++k) expanded.push_back(&c);
  }
  const std::size_t n = expanded.size();
  out.intersections.assign(n, std::vector<int>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r != c) out.intersections[r][c] = intersection_number(*expanded[r], *expanded[c]);
    }
  }
  return out;
}

TopologyReport TopologyReport::canonical() const {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& c : branches) counts[{c.a0, c.a1}] += c.count;
  std::vector<BranchClass> merged;
  for (const auto& [k, n] : counts) merged.push_back({k.first, k.second, n});
  return from_classes(std::move(merged));
}

TopologyReport oka_decomposition(const NewtonPolygon& polygon) {
  std::vector<std::string> problems;
  if (polygon.top.i != 0) problems.push_back("x divides f (polygon misses the j-axis)");
  if (polygon.bottom.j != 0) problems.push_back("y divides f (polygon misses the i-axis)");
  for (const auto& s : polygon.sides) {
    if (s.m < s.n) {
      problems.push_back("tangent cone contains the line x = 0 (side with m < n)");
      break;
    }
  }
  if (!problems.empty()) {
    std::string msg = "Oka decomposition preconditions violated:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw PreconditionError(msg);
  }
  std::vector<BranchClass> classes;
  for (const auto& s : polygon.sides) classes.push_back({s.n / s.d, s.m / s.d, s.d});
  return TopologyReport::from_classes(std::move(classes));
}

TopologyReport oka_decomposition(const PlaneSeries& f) {
  const auto report = is_nondegenerate(f);
  if (!report.nondegenerate()) {
    throw PreconditionError("Oka decomposition needs a Newton nondegenerate curve");
  }
  return oka_decomposition(report.polygon);
}

NewtonPolygon minkowski_sum(const NewtonPolygon& lhs, const NewtonPolygon& rhs) {
  struct Dir {
    int n, m;
  };
  std::vector<Dir> dirs;
  for (const auto& s : lhs.sides) dirs.push_back({s.n, s.m});
  for (const auto& s : rhs.sides) dirs.push_back({s.n, s.m});
  std::stable_sort(dirs.begin(), dirs.end(), [](const Dir& l, const Dir& r) {
    return static_cast<long long>(l.n) * r.m > static_cast<long long>(r.n) * l.m;
  });
  NewtonPolygon out;
  out.top = {lhs.top.i + rhs.top.i, lhs.top.j + rhs.top.j};
  out.bottom = {lhs.bottom.i + rhs.bottom.i, lhs.bottom.j + rhs.bottom.j};
  LatticePoint cur = out.top;
  for (std::size_t k = 0; k < dirs.size();) {
    int n = dirs[k].n;
    int m = dirs[k].m;
    std::size_t next = k + 1;
    while (next < dirs.size() &&
           static_cast<long long>(dirs[next].n) * m == static_cast<long long>(n) * dirs[next].m) {
      n += dirs[next].n;
      m += dirs[next].m;
      ++next;
    }
    const LatticePoint to{cur.i + m, cur.j - n};
    out.sides.push_back(make_side(cur, to));
    cur = to;
    k = next;
  }
  return out;
}

}  // namespace polarnd
