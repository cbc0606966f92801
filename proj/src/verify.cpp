#include "polarnd/verify.hpp"

#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polarnd/error.hpp"
#include "polarnd/genus2.hpp"
#include "polarnd/puiseux.hpp"

namespace polarnd {

std::string FamilySpec::tag() const {
  if (!d) return "K(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return "K(" + std::to_string(e1 * p) + "," + std::to_string(e1 * q) + "," +
         std::to_string(e1 * p * q + *d) + ")";
}

namespace {

constexpr int kRedrawLimit = 1000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rational draw_rational(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 2L * range);
  const long n = num(rng);
  long dd = den(rng);
  if (dd > range) dd = range - dd;  // maps to [-range, -1]
  return make_rational(n, dd);
}

Rational draw_nonzero(std::mt19937_64& rng, int range) {
  for (;;) {
    Rational r = draw_rational(rng, range);
    if (r != 0) return r;
  }
}

Rational evaluate(const MPoly& g, const std::map<VarId, Rational>& values) {
  std::map<VarId, MPoly> subst;
  for (const VarId& v : g.variables()) {
    auto it = values.find(v);
    if (it == values.end()) throw PreconditionError("no value assigned to " + v.name());
    subst.emplace(v, MPoly(it->second));
  }
  const MPoly r = g.substitute(subst);
  if (!r.is_constant()) throw Error("evaluation left free variables");
  return r.constant_term();
}

// Everything the harness needs about a family, computed once.
struct Context {
  FamilySpec spec;
  PlaneSeries generic;
  std::vector<VarId> vars;
  std::optional<VarId> nonzero_var;
  DegeneracyLocus locus;
  bool predicted = false;
  std::vector<PredictedSide> sides;
  NewtonPolygon polygon;
  TopologyReport topology;
  std::vector<MPoly> ab_conditions;
};

Context make_context(const FamilySpec& spec) {
  Context ctx;
  ctx.spec = spec;
  if (!spec.d) {
    const FamilyG1 fam = generic_member_g1(spec.p, spec.q);
    ctx.generic = fam.generic;
    ctx.vars = fam.coeff_vars;
    const genus1::PolarModel m = genus1::polar_model(spec.p, spec.q);
    ctx.locus = genus1::degeneracy_locus(spec.p, spec.q);
    ctx.predicted = true;
    ctx.sides = m.sides;
    for (int j : m.lambda) ctx.ab_conditions.push_back(plane_coefficients(m.terms.at(j)).begin()->second);
    for (const auto& F : m.F) ctx.ab_conditions.push_back(discriminant(F));
  } else if (spec.e1 == 2) {
    const FamilyG2 fam = generic_member_g2(spec.p, spec.q, *spec.d);
    ctx.generic = fam.generic;
    ctx.vars = fam.coeff_vars();
    ctx.nonzero_var = fam.leading_b();
    const genus2::PolarModel m = genus2::polar_model(spec.p, spec.q, *spec.d);
    ctx.locus = genus2::degeneracy_locus(spec.p, spec.q, *spec.d);
    ctx.predicted = true;
    ctx.sides = m.sides;
    for (int j : m.lambda) {
      ctx.ab_conditions.push_back(plane_coefficients(m.terms.at(j).m).begin()->second);
    }
    for (const auto& F : m.F) ctx.ab_conditions.push_back(discriminant(F));
  } else {
    const FamilyG2 fam = generic_member_g2(spec.p, spec.q, *spec.d, spec.e1);
    ctx.generic = fam.generic;
    ctx.vars = fam.coeff_vars();
    ctx.nonzero_var = fam.leading_b();
    ctx.locus.family = spec.tag();
  }
  if (ctx.predicted) {
    ctx.polygon = as_polygon(ctx.sides);
    ctx.topology = oka_decomposition(ctx.polygon).canonical();
  }
  return ctx;
}

Sample draw(const SampleConfig& cfg, const Context& ctx, int trial) {
  std::mt19937_64 rng(splitmix64(cfg.seed + static_cast<std::uint64_t>(trial)));
  Sample s;
  for (;;) {
    s.assignment.clear();
    for (const VarId& v : ctx.vars) {
      auto pinned = cfg.forced.find(v);
      if (pinned != cfg.forced.end()) {
        s.assignment[v] = pinned->second;
      } else if (ctx.nonzero_var && v == *ctx.nonzero_var) {
        s.assignment[v] = draw_nonzero(rng, cfg.coeff_range);
      } else {
        s.assignment[v] = draw_rational(rng, cfg.coeff_range);
      }
    }
    if (!cfg.forced.empty() || !ctx.locus.contains(s.assignment)) break;
    if (++s.redraws >= kRedrawLimit) {
      throw Error("no off-locus sample after " + std::to_string(kRedrawLimit) + " redraws");
    }
  }
  s.member = substitute(ctx.generic, s.assignment);
  if (cfg.ab_mode == AbMode::Symbolic) return s;

  for (int attempt = 0;; ++attempt) {
    if (attempt >= kRedrawLimit) {
      throw Error("no general (a:b) after " + std::to_string(kRedrawLimit) + " redraws");
    }
    const Rational a = draw_nonzero(rng, cfg.coeff_range);
    const Rational b = draw_nonzero(rng, cfg.coeff_range);
    std::map<VarId, Rational> values = s.assignment;
    values[VarId::a()] = a;
    values[VarId::b()] = b;
    bool general = true;
    if (cfg.forced.empty()) {
      for (const MPoly& g : ctx.ab_conditions) {
        if (evaluate(g, values) == 0) {
          general = false;
          break;
        }
      }
    }
    if (general) {
      s.ab = std::make_pair(a, b);
      return s;
    }
  }
}

std::string digest_of(const Sample& s) {
  std::string text;
  for (const auto& [v, r] : s.assignment) text += v.name() + "=" + to_string(r) + ";";
  if (s.ab) text += "a=" + to_string(s.ab->first) + ";b=" + to_string(s.ab->second) + ";";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

std::set<LatticePoint> support_on(const PlaneSeries& f, const Side& s) {
  std::set<LatticePoint> out;
  for (const auto& [ij, c] : plane_coefficients(f.poly)) {
    const LatticePoint pt{ij.first, ij.second};
    if (s.on_line(pt)) out.insert(pt);
  }
  return out;
}

TrialRecord run_trial(const SampleConfig& cfg, const Context& ctx, int trial) {
  TrialRecord rec;
  rec.index = trial;
  const Sample s = draw(cfg, ctx, trial);
  rec.digest = digest_of(s);
  const PolarParams ab = s.ab ? PolarParams::concrete(s.ab->first, s.ab->second)
                              : PolarParams::symbolic();
  rec.ab = s.ab ? "(" + to_string(s.ab->first) + ":" + to_string(s.ab->second) + ")" : "symbolic";
  const PlaneSeries pol = polar(s.member, ab);
  const NondegeneracyReport nd = is_nondegenerate(pol);
  for (std::size_t k = 0; k < nd.sides.size(); ++k) {
    rec.side_squarefree.push_back(nd.sides[k].squarefree);
    if (!nd.sides[k].squarefree && !rec.failing_side) {
      rec.failing_side = static_cast<int>(k);
      const Side& fs = nd.sides[k].side;
      rec.failing_segment = "(" + std::to_string(fs.from.i) + "," + std::to_string(fs.from.j) +
                            ")-(" + std::to_string(fs.to.i) + "," + std::to_string(fs.to.j) + ")";
      rec.failing_polynomial = nd.sides[k].associated.to_string();
    }
  }
  rec.nondegenerate = nd.nondegenerate();

  if (ctx.predicted) {
    bool match = nd.polygon == ctx.polygon;
    if (match) {
      for (const auto& ps : ctx.sides) {
        const std::set<LatticePoint> want(ps.support.begin(), ps.support.end());
        if (support_on(pol, ps.side) != want) {
          match = false;
          rec.notes.push_back("support differs on side (" + std::to_string(ps.side.from.i) + "," +
                              std::to_string(ps.side.from.j) + ")-(" +
                              std::to_string(ps.side.to.i) + "," + std::to_string(ps.side.to.j) +
                              ")");
        }
      }
    } else {
      rec.notes.push_back("polygon differs from the prediction");
    }
    rec.polygon_match = match;
  }

  std::optional<TopologyReport> oka;
  if (rec.nondegenerate) {
    try {
      oka = oka_decomposition(nd.polygon).canonical();
    } catch (const PreconditionError& e) {
      rec.notes.push_back(e.what());
    }
  }
  if (oka) {
    for (const auto& c : oka->branches) {
      if (c.a0 == ctx.spec.p && c.a1 == ctx.spec.q) rec.pq_branches += c.count;
    }
  }
  if (ctx.predicted) rec.topology_match = oka.has_value() && *oka == ctx.topology;

  if (cfg.puiseux_crosscheck) {
    if (!s.ab) {
      rec.notes.push_back("Puiseux cross-check needs a concrete (a:b)");
    } else if (oka) {
      try {
        rec.puiseux_match = topology_from_puiseux(puiseux_expand(pol)) == *oka;
      } catch (const Error& e) {
        rec.puiseux_match = false;
        rec.notes.push_back(std::string("puiseux: ") + e.what());
      }
    }
  }
  return rec;
}

std::string side_flags(const std::vector<bool>& v) {
  std::string out;
  for (bool b : v) out += b ? '1' : '0';
  return out;
}

}  // namespace

Sample sample_off_locus(const SampleConfig& cfg, int trial) {
  return draw(cfg, make_context(cfg.family), trial);
}

VerifyReport run_verification(const SampleConfig& cfg) {
  if (cfg.trials < 1) throw PreconditionError("trials must be positive");
  if (cfg.coeff_range < 2) throw PreconditionError("coefficient range must be at least 2");
  const Context ctx = make_context(cfg.family);
  VerifyReport report;
  report.config = cfg;
  report.locus = ctx.locus.rendered();
  for (int t = 0; t < cfg.trials; ++t) {
    TrialRecord rec = run_trial(cfg, ctx, t);
    auto& sm = report.summary;
    ++sm.trials;
    if (rec.polygon_match.value_or(false)) ++sm.polygon_match;
    if (rec.nondegenerate) ++sm.all_squarefree;
    if (rec.topology_match.value_or(false)) ++sm.topology_match;
    if (rec.puiseux_match) {
      ++sm.puiseux_checked;
      if (*rec.puiseux_match) ++sm.puiseux_match;
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

bool VerifyReport::all_match() const {
  const auto& s = summary;
  return s.polygon_match == s.trials && s.all_squarefree == s.trials &&
         s.topology_match == s.trials && s.puiseux_match == s.puiseux_checked;
}

std::string VerifyReport::to_json(int indent) const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["prng"] = prng;
  ordered_json fam;
  fam["tag"] = config.family.tag();
  fam["p"] = config.family.p;
  fam["q"] = config.family.q;
  if (config.family.d) {
    fam["d"] = *config.family.d;
    fam["e1"] = config.family.e1;
  }
  j["family"] = fam;
  j["seed"] = config.seed;
  j["trials"] = config.trials;
  j["range"] = config.coeff_range;
  j["ab_mode"] = config.ab_mode == AbMode::Symbolic ? "symbolic" : "concrete-random";
  j["puiseux_crosscheck"] = config.puiseux_crosscheck;
  ordered_json forced = ordered_json::object();
  for (const auto& [v, r] : config.forced) forced[v.name()] = to_string(r);
  j["forced"] = forced;
  j["locus"] = {{"generators", locus}};
  ordered_json recs = ordered_json::array();
  for (const auto& r : records) {
    ordered_json o;
    o["trial"] = r.index;
    o["digest"] = r.digest;
    o["ab"] = r.ab;
    o["polygon_match"] = r.polygon_match ? ordered_json(*r.polygon_match) : ordered_json();
    o["side_squarefree"] = r.side_squarefree;
    o["nondegenerate"] = r.nondegenerate;
    if (r.failing_side) {
      o["failing_side"] = *r.failing_side;
      o["failing_segment"] = r.failing_segment;
      o["failing_polynomial"] = r.failing_polynomial;
    }
    o["topology_match"] = r.topology_match ? ordered_json(*r.topology_match) : ordered_json();
    o["puiseux_match"] = r.puiseux_match ? ordered_json(*r.puiseux_match) : ordered_json();
    o["pq_branches"] = r.pq_branches;
    o["notes"] = r.notes;
    recs.push_back(std::move(o));
  }
  j["records"] = recs;
  j["summary"] = {{"trials", summary.trials},
                  {"polygon_match", summary.polygon_match},
                  {"all_squarefree", summary.all_squarefree},
                  {"topology_match", summary.topology_match},
                  {"puiseux_checked", summary.puiseux_checked},
                  {"puiseux_match", summary.puiseux_match}};
  return j.dump(indent);
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "verify " << config.family.tag() << " seed=" << config.seed << " trials=" << config.trials
     << " range=" << config.coeff_range << " prng=" << prng << "\n";
  os << "locus:";
  if (locus.empty()) os << " (empty)";
  for (const auto& g : locus) os << " {" << g << "}";
  os << "\n";
  for (const auto& r : records) {
    os << "  #" << r.index << " " << r.digest << " ab=" << r.ab;
    if (r.polygon_match) os << " polygon=" << (*r.polygon_match ? "ok" : "MISMATCH");
    os << " sides=" << side_flags(r.side_squarefree);
    if (r.topology_match) os << " topology=" << (*r.topology_match ? "ok" : "MISMATCH");
    if (r.puiseux_match) os << " puiseux=" << (*r.puiseux_match ? "ok" : "MISMATCH");
    if (r.failing_side) os << " failing_side=" << r.failing_segment << " F=" << r.failing_polynomial;
    for (const auto& n : r.notes) os << " [" << n << "]";
    os << "\n";
  }
  const auto& s = summary;
  os << "summary: polygon " << s.polygon_match << "/" << s.trials << ", squarefree "
     << s.all_squarefree << "/" << s.trials << ", topology " << s.topology_match << "/" << s.trials;
  if (s.puiseux_checked > 0) os << ", puiseux " << s.puiseux_match << "/" << s.puiseux_checked;
  os << "\n";
  return os.str();
}

}  // namespace polarnd
