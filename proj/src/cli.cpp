#include "polarnd/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarnd/cfrac.hpp"
#include "polarnd/error.hpp"
#include "polarnd/genus1.hpp"
#include "polarnd/genus2.hpp"
#include "polarnd/puiseux.hpp"
#include "polarnd/verify.hpp"

#ifndef POLARND_VERSION
#define POLARND_VERSION "0.0.0"
#endif

namespace polarnd {

std::string version() { return POLARND_VERSION; }

namespace {

using Json = nlohmann::ordered_json;

// Signals a bad command line discovered after CLI11 accepted it.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Envelope {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> warnings;
  std::string text;  // rendering for --format text
};

Json point(LatticePoint p) { return Json::array({p.i, p.j}); }

Json polygon_json(const NewtonPolygon& np) {
  Json v = Json::array();
  for (const auto& p : np.vertices()) v.push_back(point(p));
  Json sides = Json::array();
  for (const auto& s : np.sides) {
    Json pts = Json::array();
    for (const auto& p : s.lattice_points) pts.push_back(point(p));
    sides.push_back({{"from", point(s.from)},
                     {"to", point(s.to)},
                     {"lattice_points", pts},
                     {"n", s.n},
                     {"m", s.m},
                     {"gcd", s.d}});
  }
  return {{"vertices", v}, {"sides", sides}};
}

std::string pt_text(LatticePoint p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

std::string polygon_text(const NewtonPolygon& np) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& p : np.vertices()) os << " " << pt_text(p);
  os << "\n";
  for (std::size_t k = 0; k < np.sides.size(); ++k) {
    const Side& s = np.sides[k];
    os << "side " << k << ": " << pt_text(s.from) << "-" << pt_text(s.to) << " slope " << s.n << "/"
       << s.m << " gcd " << s.d << "\n";
  }
  return os.str();
}

Json topology_json(const TopologyReport& t) {
  Json br = Json::array();
  for (const auto& b : t.branches) br.push_back({{"a0", b.a0}, {"a1", b.a1}, {"count", b.count}});
  return {{"branches", br}, {"intersections", t.intersections}};
}

std::string topology_text(const TopologyReport& t) {
  std::ostringstream os;
  for (const auto& b : t.branches) {
    os << b.count << " x (" << b.a0 << "," << b.a1 << ")\n";
  }
  os << "intersections:\n";
  for (const auto& row : t.intersections) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "  ") << row[k];
    os << "\n";
  }
  return os.str();
}

Json locus_json(const DegeneracyLocus& l) {
  Json j = {{"generators", l.rendered()}};
  if (!l.joint.empty()) {
    Json joint = Json::array();
    for (const auto& comp : l.joint) {
      Json c = Json::array();
      for (const auto& g : comp) c.push_back(g.to_string());
      joint.push_back(c);
    }
    j["joint"] = joint;
  }
  return j;
}

std::string locus_text(const DegeneracyLocus& l) {
  std::ostringstream os;
  os << "locus of " << l.family << ":";
  if (l.empty()) os << " empty";
  os << "\n";
  for (const auto& g : l.rendered()) os << "  " << g << " = 0\n";
  for (const auto& comp : l.joint) {
    os << "  {";
    for (std::size_t k = 0; k < comp.size(); ++k) os << (k ? ", " : "") << comp[k].to_string();
    os << "} = 0\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CurveInput {
  std::string file;
  std::string expr;

  void attach(CLI::App* sub) {
    auto* f = sub->add_option("--input", file, "file holding a curve expression");
    auto* e = sub->add_option("--expr", expr, "curve expression");
    f->excludes(e);
  }
  PlaneSeries load(Json& inputs) const {
    if (file.empty() == expr.empty()) throw UsageError("give exactly one of --input and --expr");
    if (!file.empty()) {
      inputs["input"] = file;
      return parse_series(read_file(file));
    }
    inputs["expr"] = expr;
    return parse_series(expr);
  }
};

struct FamilyArgs {
  int p = 0;
  int q = 0;
  int d = 0;
  int e1 = 2;

  void attach(CLI::App* sub, bool g2) {
    sub->add_option("--p", p)->required();
    sub->add_option("--q", q)->required();
    if (g2) {
      sub->add_option("--d", d)->required();
      sub->add_option("--e1", e1)->capture_default_str();
    }
  }
  void echo(Json& inputs, bool g2) const {
    inputs["p"] = p;
    inputs["q"] = q;
    if (g2) {
      inputs["d"] = d;
      inputs["e1"] = e1;
    }
  }
};

std::string tag_g1(int p, int q) { return "K(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

Envelope run_cf(long q, long p) {
  Envelope env;
  env.inputs = {{"q", q}, {"p", p}};
  const ContinuedFraction cf = continued_fraction(q, p);
  const ConvergentSeq conv = convergents(cf);
  Json cj = Json::array();
  std::ostringstream os;
  os << "h = [";
  for (std::size_t k = 0; k < cf.h.size(); ++k) os << (k ? "," : "") << cf.h[k];
  os << "]\nconvergents:";
  for (const auto& c : conv) {
    cj.push_back({{"p", c.p}, {"q", c.q}});
    os << " (" << c.p << "," << c.q << ")";
  }
  os << "\n";
  env.result = {{"h", cf.h}, {"convergents", cj}};
  env.text = os.str();
  return env;
}

Envelope run_family(const FamilyArgs& fa, bool g2, std::optional<int> bound) {
  Envelope env;
  fa.echo(env.inputs, g2);
  if (bound) env.inputs["bound"] = *bound;
  std::vector<std::string> names;
  std::ostringstream os;
  if (!g2) {
    const FamilyG1 fam = generic_member_g1(fa.p, fa.q, bound);
    for (const auto& v : fam.coeff_vars) names.push_back(v.name());
    env.result = {{"family", tag_g1(fa.p, fa.q)},
                  {"weight_bound", fam.weight_bound},
                  {"coefficient_variables", names},
                  {"generic", fam.generic.to_string()}};
    os << tag_g1(fa.p, fa.q) << " weight bound " << fam.weight_bound << "\n";
  } else {
    const FamilyG2 fam = generic_member_g2(fa.p, fa.q, fa.d, fa.e1, bound);
    for (const auto& v : fam.coeff_vars()) names.push_back(v.name());
    FamilySpec spec{fa.p, fa.q, fa.d, fa.e1};
    env.result = {{"family", spec.tag()},
                  {"weight_bound", fam.weight_bound},
                  {"i0", fam.i0},
                  {"j0", fam.j0},
                  {"leading", fam.leading_b().name()},
                  {"coefficient_variables", names},
                  {"generic", fam.generic.to_string()}};
    os << spec.tag() << " weight bound " << fam.weight_bound << ", leading coefficient "
       << fam.leading_b().name() << " at (" << fam.i0 << "," << fam.j0 << ")\n";
  }
  os << "variables:";
  for (const auto& n : names) os << " " << n;
  os << "\n" << env.result["generic"].get<std::string>() << "\n";
  env.text = os.str();
  return env;
}

Envelope run_polar(const CurveInput& in, const std::string& a, const std::string& b) {
  Envelope env;
  const PlaneSeries f = in.load(env.inputs);
  if (a.empty() != b.empty()) throw UsageError("give both --a and --b or neither");
  PolarParams ab = PolarParams::symbolic();
  if (!a.empty()) {
    env.inputs["a"] = a;
    env.inputs["b"] = b;
    ab = PolarParams::concrete(parse_rational(a), parse_rational(b));
  }
  const PlaneSeries pol = polar(f, ab);
  env.result = {{"polar", pol.to_string()}};
  env.text = pol.to_string() + "\n";
  return env;
}

Envelope run_polygon(const CurveInput& in) {
  Envelope env;
  const PlaneSeries f = in.load(env.inputs);
  const NewtonPolygon np = newton_polygon(f);
  env.result = polygon_json(np);
  env.text = polygon_text(np);
  return env;
}

std::string method_name(SquarefreeMethod m) {
  return m == SquarefreeMethod::ConcreteGcd ? "gcd" : "discriminant";
}

Envelope run_nondeg(const CurveInput& in) {
  Envelope env;
  const PlaneSeries f = in.load(env.inputs);
  const NondegeneracyReport rep = is_nondegenerate(f);
  Json sides = Json::array();
  std::ostringstream os;
  os << "verdict: " << to_string(rep.verdict) << "\n";
  for (std::size_t k = 0; k < rep.sides.size(); ++k) {
    const SideVerdict& sv = rep.sides[k];
    sides.push_back({{"from", point(sv.side.from)},
                     {"to", point(sv.side.to)},
                     {"associated", sv.associated.to_string()},
                     {"squarefree", sv.squarefree},
                     {"method", method_name(sv.method)}});
    os << "side " << k << " " << pt_text(sv.side.from) << "-" << pt_text(sv.side.to) << ": "
       << (sv.squarefree ? "squarefree" : "not squarefree") << "  F = " << sv.associated.to_string()
       << "\n";
  }
  env.result = {{"verdict", to_string(rep.verdict)},
                {"nondegenerate", rep.nondegenerate()},
                {"polygon", polygon_json(rep.polygon)},
                {"sides", sides}};
  env.text = os.str();
  return env;
}

Envelope run_locus(const FamilyArgs& fa, bool g2, bool normal_form) {
  Envelope env;
  fa.echo(env.inputs, g2);
  DegeneracyLocus l;
  if (!g2) {
    l = genus1::degeneracy_locus(fa.p, fa.q);
  } else {
    if (fa.e1 != 2) throw PreconditionError("the locus is defined for e1 = 2");
    env.inputs["normal_form"] = normal_form;
    l = normal_form ? genus2::normal_form_model(fa.p, fa.q, fa.d).locus
                    : genus2::degeneracy_locus(fa.p, fa.q, fa.d);
  }
  env.result = locus_json(l);
  env.text = locus_text(l);
  if (!l.joint.empty()) env.warnings.push_back("locus has components of codimension above one");
  return env;
}

Envelope run_topology(const FamilyArgs& fa, bool g2, bool normal_form) {
  Envelope env;
  fa.echo(env.inputs, g2);
  TopologyReport t;
  if (!g2) {
    t = genus1::predicted_topology(fa.p, fa.q);
  } else {
    if (fa.e1 != 2) throw PreconditionError("the predicted topology is defined for e1 = 2");
    env.inputs["normal_form"] = normal_form;
    if (normal_form) {
      const GenericPolarModel m = genus2::normal_form_model(fa.p, fa.q, fa.d);
      if (!m.topology) throw Error("generic polar of the normal form is degenerate");
      t = *m.topology;
    } else {
      t = genus2::predicted_topology(fa.p, fa.q, fa.d);
    }
  }
  t = t.canonical();
  env.result = topology_json(t);
  env.text = topology_text(t);
  return env;
}

Envelope run_classify(const std::vector<long>& gens, const std::vector<long>& chars) {
  Envelope env;
  if (gens.empty() == chars.empty()) throw UsageError("give exactly one of --semigroup and --char");
  SemigroupSpec spec;
  if (!gens.empty()) {
    env.inputs["semigroup"] = gens;
    spec.generators = gens;
  } else {
    env.inputs["char"] = chars;
    spec = semigroup_from_char(chars);
  }
  const genus2::Classification c = genus2::classify_nondegenerate(spec);
  env.result = {{"semigroup", spec.to_string()},
                {"genus", c.genus},
                {"verdict", c.nondegenerate ? "yes" : "no"},
                {"nondegenerate", c.nondegenerate},
                {"reason", c.reason}};
  env.text = spec.to_string() + ": " + (c.nondegenerate ? "yes" : "no") + " (" + c.reason + ")\n";
  return env;
}

Json branch_json(const PuiseuxBranch& b) {
  Json terms = Json::array();
  for (const auto& t : b.terms) {
    terms.push_back({{"exponent", to_string(t.exponent)}, {"coeff", format_complex(t.coeff, 20)}});
  }
  Json j = {{"n", b.n},
            {"multiplicity", b.multiplicity},
            {"terms", terms},
            {"exact", b.exact},
            {"known_through", to_string(b.known_through)},
            {"char_exponents", b.char_exponents},
            {"genus", b.genus},
            {"semigroup", b.semigroup ? Json(b.semigroup->to_string()) : Json()},
            {"residual", b.residual}};
  return j;
}

Envelope run_puiseux(const CurveInput& in, int depth, double tol) {
  Envelope env;
  const PlaneSeries f = in.load(env.inputs);
  env.inputs["depth"] = depth;
  env.inputs["tol"] = tol;
  PuiseuxOptions opts;
  opts.depth = depth;
  opts.tol = tol;
  const PuiseuxResult r = puiseux_expand(f, opts);
  Json br = Json::array();
  std::ostringstream os;
  if (r.x_power > 0) os << "factor x^" << r.x_power << "\n";
  for (std::size_t k = 0; k < r.branches.size(); ++k) {
    const PuiseuxBranch& b = r.branches[k];
    br.push_back(branch_json(b));
    os << "branch " << k << ": " << b.to_string() << "\n  char (";
    for (std::size_t i = 0; i < b.char_exponents.size(); ++i) {
      os << (i ? (i == 1 ? ";" : ",") : "") << b.char_exponents[i];
    }
    os << ") genus " << b.genus;
    if (b.semigroup) os << " semigroup " << b.semigroup->to_string();
    if (b.multiplicity > 1) os << " multiplicity " << b.multiplicity;
    os << " residual " << b.residual << "\n";
  }
  env.result = {{"x_power", r.x_power}, {"branches", br}};
  // Pairwise numbers need distinct branches; report what can be decided.
  Json inter = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < r.branches.size() && ok; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < r.branches.size(); ++j) {
      if (i == j) {
        row.push_back(nullptr);
        continue;
      }
      try {
        row.push_back(intersection_numeric(r.branches[i], r.branches[j]));
      } catch (const InsufficientDepthError& e) {
        env.warnings.push_back(e.what());
        ok = false;
        break;
      }
    }
    inter.push_back(row);
  }
  if (ok) {
    env.result["intersections"] = inter;
    if (r.branches.size() > 1) {
      os << "intersections:\n";
      for (const auto& row : inter) {
        os << " ";
        for (const auto& v : row) os << " " << (v.is_null() ? std::string("-") : v.dump());
        os << "\n";
      }
    }
  }
  env.text = os.str();
  return env;
}

struct VerifyArgs {
  int trials = 50;
  std::uint64_t seed = 42;
  int range = 10;
  bool crosscheck = false;
  bool symbolic_ab = false;
  bool strict = false;

  void attach(CLI::App* sub) {
    sub->add_option("--trials", trials)->capture_default_str();
    sub->add_option("--seed", seed)->capture_default_str();
    sub->add_option("--range", range)->capture_default_str();
    sub->add_flag("--puiseux-crosscheck", crosscheck);
    sub->add_flag("--symbolic-ab", symbolic_ab, "keep (a:b) symbolic");
    sub->add_flag("--strict", strict, "exit 1 unless every trial matches");
  }
};

Envelope run_verify(const FamilyArgs& fa, bool g2, const VerifyArgs& va, bool& mismatch) {
  Envelope env;
  fa.echo(env.inputs, g2);
  env.inputs["trials"] = va.trials;
  env.inputs["seed"] = va.seed;
  env.inputs["range"] = va.range;
  env.inputs["puiseux_crosscheck"] = va.crosscheck;
  env.inputs["symbolic_ab"] = va.symbolic_ab;
  if (va.trials < 1 || va.range < 1) throw UsageError("--trials and --range must be positive");
  SampleConfig cfg;
  cfg.family.p = fa.p;
  cfg.family.q = fa.q;
  if (g2) {
    cfg.family.d = fa.d;
    cfg.family.e1 = fa.e1;
  }
  cfg.seed = va.seed;
  cfg.trials = va.trials;
  cfg.coeff_range = va.range;
  cfg.ab_mode = va.symbolic_ab ? AbMode::Symbolic : AbMode::ConcreteRandom;
  cfg.puiseux_crosscheck = va.crosscheck;
  const VerifyReport rep = run_verification(cfg);
  env.result = Json::parse(rep.to_json());
  env.text = rep.to_text();
  mismatch = !rep.all_match();
  if (mismatch) env.warnings.push_back("some trials do not match the prediction");
  return env;
}

void emit(const Envelope& env, bool json, std::ostream& out, std::ostream& err) {
  if (json) {
    Json j;
    j["tool_version"] = version();
    j["command"] = env.command;
    j["inputs"] = env.inputs;
    j["result"] = env.result;
    j["warnings"] = env.warnings;
    out << j.dump(2) << "\n";
  } else {
    out << env.text;
    for (const auto& w : env.warnings) err << "warning: " << w << "\n";
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polars of plane branches of genus one and two", "polarnd"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.set_version_flag("--version", version());

  long cf_q = 0, cf_p = 0;
  auto* cf = app.add_subcommand("cf", "continued fraction of q/p");
  cf->add_option("--q", cf_q)->required();
  cf->add_option("--p", cf_p)->required();

  // family / locus / topology / verify all take g1|g2 with the same numbers.
  FamilyArgs fam;
  std::optional<int> bound;
  bool normal_form = false;
  VerifyArgs va;
  struct Pair {
    CLI::App* g1;
    CLI::App* g2;
  };
  auto family_group = [&](const std::string& name, const std::string& help) {
    auto* top = app.add_subcommand(name, help);
    top->require_subcommand(1);
    top->fallthrough();
    Pair pr{top->add_subcommand("g1", "K(p,q)"), top->add_subcommand("g2", "K(e1 p, e1 q, e1 pq + d)")};
    pr.g1->fallthrough();
    pr.g2->fallthrough();
    fam.attach(pr.g1, false);
    fam.attach(pr.g2, true);
    return pr;
  };
  const Pair family = family_group("family", "generic member of a family");
  family.g1->add_option("--bound", bound, "weight truncation");
  family.g2->add_option("--bound", bound, "weight truncation");
  const Pair locus = family_group("locus", "degeneracy locus of the generic polar");
  locus.g2->add_flag("--normal-form", normal_form, "use f1 = y^p - x^q");
  const Pair topo = family_group("topology", "predicted topology of the generic polar");
  topo.g2->add_flag("--normal-form", normal_form, "use f1 = y^p - x^q");
  const Pair ver = family_group("verify", "sampled check of the predictions");
  va.attach(ver.g1);
  va.attach(ver.g2);

  CurveInput curve;
  std::string a_text, b_text;
  auto* pol = app.add_subcommand("polar", "polar curve a f_x + b f_y");
  curve.attach(pol);
  pol->add_option("--a", a_text);
  pol->add_option("--b", b_text);
  auto* poly = app.add_subcommand("polygon", "Newton polygon");
  curve.attach(poly);
  auto* nd = app.add_subcommand("nondeg", "nondegeneracy test");
  curve.attach(nd);
  int depth = -1;
  double tol = 1e-8;
  auto* pu = app.add_subcommand("puiseux", "Newton-Puiseux branches");
  curve.attach(pu);
  pu->add_option("--depth", depth)->capture_default_str();
  pu->add_option("--tol", tol)->capture_default_str();

  std::vector<long> gens, chars;
  auto* cl = app.add_subcommand("classify", "nondegeneracy of the generic polar by semigroup");
  cl->add_option("--semigroup", gens)->delimiter(',');
  cl->add_option("--char", chars, "characteristic exponents")->delimiter(',');

  for (auto* sub : {cf, pol, poly, nd, pu, cl}) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const bool json = format == "json";
  auto picked = [](const Pair& p) -> std::optional<bool> {
    if (p.g1->parsed()) return false;
    if (p.g2->parsed()) return true;
    return std::nullopt;
  };
  try {
    Envelope env;
    bool mismatch = false;
    if (cf->parsed()) {
      env = run_cf(cf_q, cf_p);
      env.command = "cf";
    } else if (auto g = picked(family)) {
      env = run_family(fam, *g, bound);
      env.command = *g ? "family g2" : "family g1";
    } else if (auto g = picked(locus)) {
      env = run_locus(fam, *g, normal_form);
      env.command = *g ? "locus g2" : "locus g1";
    } else if (auto g = picked(topo)) {
      env = run_topology(fam, *g, normal_form);
      env.command = *g ? "topology g2" : "topology g1";
    } else if (auto g = picked(ver)) {
      env = run_verify(fam, *g, va, mismatch);
      env.command = *g ? "verify g2" : "verify g1";
    } else if (pol->parsed()) {
      env = run_polar(curve, a_text, b_text);
      env.command = "polar";
    } else if (poly->parsed()) {
      env = run_polygon(curve);
      env.command = "polygon";
    } else if (nd->parsed()) {
      env = run_nondeg(curve);
      env.command = "nondeg";
    } else if (pu->parsed()) {
      env = run_puiseux(curve, depth, tol);
      env.command = "puiseux";
    } else if (cl->parsed()) {
      env = run_classify(gens, chars);
      env.command = "classify";
    }
    emit(env, json, out, err);
    return mismatch && va.strict ? 1 : 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace polarnd
