#include "polarnd/locus.hpp"

#include <algorithm>
#include <set>

#include "polarnd/error.hpp"

namespace polarnd {

namespace {

// Largest monomial dividing every term.
Monomial monomial_content(const MPoly& g) {
  const auto vars = g.variables();
  std::vector<Monomial::Entry> entries;
  for (const VarId& v : vars) {
    unsigned lo = ~0U;
    for (const auto& [m, c] : g.terms()) lo = std::min(lo, m.exponent(v));
    if (lo > 0) entries.emplace_back(v, lo);
  }
  return Monomial(std::move(entries));
}

bool same_up_to_scalar(const MPoly& lhs, const MPoly& rhs) {
  return normalize_primitive(lhs) == normalize_primitive(rhs);
}

bool generator_less(const MPoly& lhs, const MPoly& rhs) {
  if (lhs.total_degree() != rhs.total_degree()) return lhs.total_degree() < rhs.total_degree();
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs.to_string() < rhs.to_string();
}

// Splits a nonconstant polynomial into squarefree pieces: one per variable
// of its monomial content, plus the squarefree part of the remainder.
void push_factors(const MPoly& g, std::vector<MPoly>& out) {
  const Monomial mono = monomial_content(g);
  for (const auto& [v, e] : mono.entries()) out.push_back(MPoly::variable(v));
  const MPoly rest = divide_exact(g, MPoly::term(Rational(1), mono));
  if (!rest.is_constant()) out.push_back(normalize_primitive(squarefree_part(rest)));
}

// Repeated gcd splitting until the list is pairwise coprime.
std::vector<MPoly> coprime_basis(std::vector<MPoly> list) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < list.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < list.size() && !changed; ++j) {
        if (same_up_to_scalar(list[i], list[j])) {
          list.erase(list.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
        const MPoly g = gcd(list[i], list[j]);
        if (g.is_constant()) continue;
        const MPoly li = divide_exact(list[i], g);
        const MPoly lj = divide_exact(list[j], g);
        std::vector<MPoly> next;
        for (std::size_t k = 0; k < list.size(); ++k) {
          if (k != i && k != j) next.push_back(list[k]);
        }
        next.push_back(g);
        if (!li.is_constant()) next.push_back(li);
        if (!lj.is_constant()) next.push_back(lj);
        list = std::move(next);
        changed = true;
      }
    }
  }
  for (auto& g : list) g = normalize_primitive(g);
  std::sort(list.begin(), list.end(), generator_less);
  return list;
}

bool vanishes_at(const MPoly& g, const std::map<VarId, Rational>& assignment) {
  std::map<VarId, MPoly> values;
  for (const VarId& v : g.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw PreconditionError("no value assigned to " + v.name());
    values.emplace(v, MPoly(it->second));
  }
  return g.substitute(values).is_zero();
}

}  // namespace

bool DegeneracyLocus::contains(const std::map<VarId, Rational>& assignment) const {
  for (const auto& g : generators) {
    if (vanishes_at(g, assignment)) return true;
  }
  for (const auto& component : joint) {
    bool all = true;
    for (const auto& g : component) all = all && vanishes_at(g, assignment);
    if (all) return true;
  }
  return false;
}

std::vector<std::string> DegeneracyLocus::rendered() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.to_string());
  return out;
}

DegeneracyLocus normalize_locus(const std::vector<MPoly>& raw,
                                const std::function<bool(const VarId&)>& keep,
                                std::string family) {
  DegeneracyLocus locus;
  locus.family = std::move(family);
  const std::set<VarId> ab{VarId::a(), VarId::b()};
  std::vector<MPoly> hyper;
  std::vector<std::vector<MPoly>> joint;

  for (const MPoly& g : raw) {
    if (g.is_zero()) {
      throw PreconditionError("a degeneracy condition vanishes identically on " + locus.family);
    }
    for (const VarId& v : g.variables()) {
      if (v.is_plane() || v.kind == VarKind::Z) {
        throw PreconditionError("degeneracy condition still involves " + v.name());
      }
    }
    std::vector<MPoly> coeffs;
    bool never = false;
    for (const auto& [m, c] : g.coefficients_in(ab)) {
      if (c.is_constant()) {
        never = true;
        break;
      }
      const MPoly stripped = strip_content(c, keep);
      if (stripped.is_constant()) {
        never = true;
        break;
      }
      coeffs.push_back(stripped);
    }
    if (never) continue;

    MPoly common = coeffs.front();
    for (std::size_t k = 1; k < coeffs.size(); ++k) common = gcd(common, coeffs[k]);
    if (!common.is_constant()) push_factors(common, hyper);
    if (coeffs.size() > 1) {
      std::vector<MPoly> rest;
      bool unit = false;
      for (const auto& c : coeffs) {
        const MPoly q = common.is_constant() ? c : divide_exact(c, common);
        if (q.is_constant()) {
          unit = true;
          break;
        }
        rest.push_back(normalize_primitive(squarefree_part(q)));
      }
      if (!unit) joint.push_back(std::move(rest));
    }
  }

  locus.generators = coprime_basis(std::move(hyper));

  // A joint component lying inside some hypersurface adds nothing.
  for (auto& component : joint) {
    std::sort(component.begin(), component.end(), generator_less);
    component.erase(std::unique(component.begin(), component.end()), component.end());
    bool covered = false;
    for (const auto& g : locus.generators) {
      for (const auto& c : component) covered = covered || same_up_to_scalar(g, c);
    }
    if (covered) continue;
    if (std::find(locus.joint.begin(), locus.joint.end(), component) == locus.joint.end()) {
      locus.joint.push_back(std::move(component));
    }
  }
  return locus;
}

GenericPolarModel generic_polar_model(const PlaneSeries& member,
                                      const std::function<bool(const VarId&)>& keep,
                                      std::string family) {
  GenericPolarModel model;
  model.polar = polar(member, PolarParams::symbolic());
  model.polygon = newton_polygon(model.polar);
  const auto coeffs = plane_coefficients(model.polar.poly);

  std::vector<MPoly> raw;
  bool generic_ok = true;
  for (const Side& s : model.polygon.sides) {
    GenericSide gs{s, {}, UPoly()};
    std::vector<MPoly> by_height(static_cast<std::size_t>(s.n) + 1);
    for (const auto& [ij, c] : coeffs) {
      const LatticePoint pt{ij.first, ij.second};
      if (!s.on_line(pt)) continue;
      gs.points.emplace_back(pt, c);
      by_height[static_cast<std::size_t>(pt.j - s.to.j)] = c;
      raw.push_back(c);
    }
    gs.associated = UPoly(VarId::z(), std::move(by_height));
    if (gs.associated.degree() >= 1) {
      const MPoly delta = discriminant(gs.associated);
      generic_ok = generic_ok && !delta.is_zero();
      if (!delta.is_zero()) raw.push_back(delta);
    }
    model.sides.push_back(std::move(gs));
  }
  model.verdict = generic_ok ? Nondegeneracy::GenericallyNondegenerate : Nondegeneracy::Degenerate;
  model.locus = normalize_locus(raw, keep, std::move(family));
  if (generic_ok) {
    try {
      model.topology = oka_decomposition(model.polygon);
    } catch (const PreconditionError&) {
      model.topology.reset();
    }
  }
  return model;
}

}  // namespace polarnd
