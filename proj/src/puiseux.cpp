#include "polarnd/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <iomanip>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "polarnd/error.hpp"

namespace polarnd {

namespace {

using CPoly = std::map<std::pair<long, long>, Complex>;  // (t-exponent, y-exponent)

constexpr int kMaxSteps = 400;

const Real& drop_threshold() {
  static const Real v("1e-40");
  return v;
}

const Real& equal_threshold() {
  static const Real v("1e-30");
  return v;
}

Complex to_complex(const Rational& r) {
  Real num(r.get_num().get_str());
  Real den(r.get_den().get_str());
  return Complex(num / den);
}

Real magnitude(const Complex& c) { return abs(c); }

Complex eval(const std::vector<Complex>& p, const Complex& z) {
  Complex acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> derive(const std::vector<Complex>& p) {
  std::vector<Complex> out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * Real(static_cast<long>(k)));
  return out;
}

// Aberth iteration on a polynomial with nonzero leading and constant terms.
std::vector<Complex> aberth(const std::vector<Complex>& p) {
  const std::size_t d = p.size() - 1;
  const std::vector<Complex> dp = derive(p);
  Real radius = 0;
  for (std::size_t k = 0; k < d; ++k) radius = std::max(radius, magnitude(p[k] / p[d]));
  radius = 1 + radius;
  std::vector<Complex> z(d);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  for (std::size_t k = 0; k < d; ++k) {
    const Real angle = two_pi * static_cast<long>(k) / static_cast<long>(d) + Real("0.4");
    z[k] = polar(radius * Real("0.5"), angle);
  }
  const Real stop("1e-95");
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const Complex val = eval(p, z[i]);
      if (val == Complex(0)) continue;
      Complex der = eval(dp, z[i]);
      const Complex ratio = val / der;
      Complex sum = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) sum += Complex(1) / (z[i] - z[j]);
      }
      const Complex w = ratio / (Complex(1) - ratio * sum);
      z[i] -= w;
      worst = std::max(worst, magnitude(w) / std::max(Real(1), magnitude(z[i])));
    }
    if (worst < stop) break;
  }
  return z;
}

struct RootCluster {
  Complex u;
  int multiplicity = 1;
};

// Roots of p grouped into clusters; each cluster centre is refined as a
// simple root of the (r-1)-th derivative.
std::vector<RootCluster> clustered_roots(const std::vector<Complex>& p, double tol) {
  const std::vector<Complex> z = aberth(p);
  const std::size_t d = z.size();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  const Real rel(tol);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Real scale = std::max(Real(1), std::max(magnitude(z[i]), magnitude(z[j])));
      if (magnitude(z[i] - z[j]) <= rel * scale) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < d; ++i) groups[find(i)].push_back(i);

  std::vector<RootCluster> out;
  for (const auto& [root, members] : groups) {
    RootCluster c;
    c.multiplicity = static_cast<int>(members.size());
    Complex mean = 0;
    for (std::size_t i : members) mean += z[i];
    mean /= Real(static_cast<long>(members.size()));
    std::vector<Complex> q = p;
    for (int k = 1; k < c.multiplicity; ++k) q = derive(q);
    const std::vector<Complex> dq = derive(q);
    Complex u = mean;
    for (int iter = 0; iter < 200 && !dq.empty(); ++iter) {
      const Complex der = eval(dq, u);
      if (der == Complex(0)) break;
      const Complex step = eval(q, u) / der;
      u -= step;
      if (magnitude(step) <= Real("1e-98") * std::max(Real(1), magnitude(u))) break;
    }
    if (magnitude(u - mean) > Real(tol) * std::max(Real(1), magnitude(mean))) {
      throw ToleranceError("root cluster of size " + std::to_string(c.multiplicity) +
                           " moved while refining; clustering tolerance is ambiguous");
    }
    c.u = u;
    out.push_back(c);
  }
  // Deterministic order: by argument, then modulus.
  std::sort(out.begin(), out.end(), [](const RootCluster& l, const RootCluster& r) {
    const Real al = arg(l.u);
    const Real ar = arg(r.u);
    if (abs(al - ar) > Real("1e-50")) return al < ar;
    return magnitude(l.u) < magnitude(r.u);
  });
  return out;
}

Complex principal_root(const Complex& u, long n) {
  if (n == 1) return u;
  const Real r = pow(magnitude(u), Real(1) / Real(n));
  return polar(r, Real(arg(u)) / Real(n));
}

// G(t1^{n'}, t1^{m'} (c + y)) / t1^{w}.
CPoly transform(const CPoly& g, long np, long mp, const Complex& c) {
  long w = -1;
  for (const auto& [k, coef] : g) {
    const long v = np * k.first + mp * k.second;
    if (w < 0 || v < w) w = v;
  }
  // A coefficient is dropped when it is negligible against the sum of the
  // magnitudes that produced it (exact cancellation up to rounding).
  CPoly out;
  std::map<std::pair<long, long>, Real> size;
  for (const auto& [k, coef] : g) {
    const long i = np * k.first + mp * k.second - w;
    const long j = k.second;
    std::vector<Complex> cpow(static_cast<std::size_t>(j) + 1);
    cpow[0] = 1;
    for (long l = 1; l <= j; ++l) cpow[static_cast<std::size_t>(l)] = cpow[static_cast<std::size_t>(l - 1)] * c;
    Real binom = 1;
    for (long l = 0; l <= j; ++l) {
      const Complex term = coef * binom * cpow[static_cast<std::size_t>(j - l)];
      out[{i, l}] += term;
      size[{i, l}] += magnitude(term);
      binom = binom * Real(j - l) / Real(l + 1);
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (magnitude(it->second) <= size[it->first] * drop_threshold()) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::vector<LatticePoint> support_of(const CPoly& g) {
  std::vector<LatticePoint> pts;
  for (const auto& [k, c] : g) pts.push_back({static_cast<int>(k.first), static_cast<int>(k.second)});
  return pts;
}

struct Expander {
  const PuiseuxOptions& opts;
  std::vector<PuiseuxBranch> out;

  void emit(std::vector<PuiseuxTerm> terms, long N, bool exact, const Rational& known,
            int mult) {
    PuiseuxBranch b;
    b.n = static_cast<int>(N);
    b.terms = std::move(terms);
    b.exact = exact;
    b.known_through = known;
    b.multiplicity = mult;
    out.push_back(std::move(b));
  }

  // y = prefix + x^E y1, x = t^N, G(t, y1) = 0 with `r` roots y1 -> 0.
  // `extra` counts steps since the branch became isolated (-1 before).
  void run(CPoly g, long N, std::vector<PuiseuxTerm> prefix, const Rational& E, int extra,
           int steps) {
    if (steps > kMaxSteps) {
      throw ToleranceError("roots did not separate after " + std::to_string(kMaxSteps) +
                           " steps; is f reduced?");
    }
    const NewtonPolygon poly = newton_polygon(support_of(g));
    if (poly.bottom.j > 0) {
      // y1 divides G: the prefix is an exact root of that multiplicity.
      emit(prefix, N, true, E, poly.bottom.j);
      CPoly reduced;
      for (const auto& [k, c] : g) reduced[{k.first, k.second - poly.bottom.j}] = c;
      g = std::move(reduced);
    }
    const NewtonPolygon live = newton_polygon(support_of(g));
    if (live.sides.empty()) return;
    const int depth_limit = opts.depth >= 0 ? opts.depth : static_cast<int>(2 * N + 2);
    if (extra >= depth_limit) {
      emit(prefix, N, false, E, 1);
      return;
    }
    for (const Side& s : live.sides) {
      const long np = s.n / s.d;
      const long mp = s.m / s.d;
      std::vector<Complex> phi(static_cast<std::size_t>(s.d) + 1);
      for (int k = 0; k <= s.d; ++k) {
        const auto it = g.find({s.to.i - k * mp, s.to.j + k * np});
        if (it != g.end()) phi[static_cast<std::size_t>(k)] = it->second;
      }
      for (const RootCluster& rc : clustered_roots(phi, opts.tol)) {
        const Complex c = principal_root(rc.u, np);
        const Rational E_new = E + make_rational(s.m, static_cast<long>(s.n) * N);
        std::vector<PuiseuxTerm> terms = prefix;
        terms.push_back({E_new, c});
        run(transform(g, np, mp, c), N * np, std::move(terms), E_new,
            rc.multiplicity == 1 ? extra + 1 : -1, steps + 1);
      }
    }
  }
};

void finish_branch(PuiseuxBranch& b) {
  // Characteristic exponents from the t-exponents, t^n = x.
  long e = b.n;
  b.char_exponents = {b.n};
  for (const auto& term : b.terms) {
    if (e == 1) break;
    Rational te = term.exponent * b.n;
    if (te.get_den() != 1) throw Error("exponent denominator does not divide n");
    const long T = te.get_num().get_si();
    const long g = std::gcd(e, T);
    if (g < e) {
      b.char_exponents.push_back(T);
      e = g;
    }
  }
  if (e != 1) throw Error("characteristic exponents do not end at gcd 1");
  b.genus = static_cast<int>(b.char_exponents.size()) - 1;
  if (b.genus <= 2) b.semigroup = semigroup_from_char(b.char_exponents);
}

// Truncated power series in t with high-precision coefficients.
using Series = std::vector<Complex>;

Series mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == Complex(0)) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Max over k <= limit of |f(t^n, phi(t))_k| relative to the magnitude of the
// contributions at order k; limit = n E_last + ord_t f_y along the branch.
double residual_check(const std::map<std::pair<int, int>, Rational>& f, const PuiseuxBranch& b,
                      double tol) {
  const long n = b.n;
  const long K = b.terms.empty() ? 0 : Rational(b.known_through * n).get_num().get_si();
  const std::size_t len = static_cast<std::size_t>(4 * K + 4 * n + 24);
  Series phi(len);
  Series phi_abs(len);
  for (const auto& term : b.terms) {
    const long T = Rational(term.exponent * n).get_num().get_si();
    if (static_cast<std::size_t>(T) < len) {
      phi[static_cast<std::size_t>(T)] = term.coeff;
      phi_abs[static_cast<std::size_t>(T)] = Complex(magnitude(term.coeff));
    }
  }
  int ymax = 0;
  for (const auto& [ij, c] : f) ymax = std::max(ymax, ij.second);
  std::vector<Series> pw{Series(len)};
  std::vector<Series> pw_abs{Series(len)};
  pw[0][0] = 1;
  pw_abs[0][0] = 1;
  for (int j = 1; j <= ymax; ++j) {
    pw.push_back(mul(pw.back(), phi, len));
    pw_abs.push_back(mul(pw_abs.back(), phi_abs, len));
  }
  Series res(len), mag(len), fy(len), fy_mag(len);
  for (const auto& [ij, c] : f) {
    const std::size_t shift = static_cast<std::size_t>(n * ij.first);
    const Complex cc = to_complex(c);
    const Real ca = abs(cc);
    for (std::size_t k = 0; k + shift < len; ++k) {
      res[k + shift] += cc * pw[static_cast<std::size_t>(ij.second)][k];
      mag[k + shift] += Complex(ca) * pw_abs[static_cast<std::size_t>(ij.second)][k];
      if (ij.second > 0) {
        const Complex d = cc * Real(ij.second);
        fy[k + shift] += d * pw[static_cast<std::size_t>(ij.second - 1)][k];
        fy_mag[k + shift] += Complex(abs(d)) * pw_abs[static_cast<std::size_t>(ij.second - 1)][k];
      }
    }
  }
  const Real rel(tol);
  std::size_t ord_fy = len;
  for (std::size_t k = 0; k < len; ++k) {
    if (magnitude(fy[k]) > rel * std::max(Real("1e-300"), magnitude(fy_mag[k]))) {
      ord_fy = k;
      break;
    }
  }
  std::size_t limit = b.exact ? len - 1 : static_cast<std::size_t>(K) + ord_fy;
  if (ord_fy == len && !b.exact) {
    throw ToleranceError("derivative along the branch vanishes to the computed order");
  }
  limit = std::min(limit, len - 1);
  Real worst = 0;
  for (std::size_t k = 0; k <= limit; ++k) {
    const Real m = magnitude(mag[k]);
    if (m == 0) continue;
    worst = std::max(worst, magnitude(res[k]) / m);
  }
  return static_cast<double>(worst);
}

}  // namespace

std::optional<BranchClass> PuiseuxBranch::leading_class() const {
  if (terms.empty()) return std::nullopt;
  const Rational& e = terms.front().exponent;
  return BranchClass{static_cast<int>(e.get_den().get_si()), static_cast<int>(e.get_num().get_si()),
                     1};
}

std::string format_complex(const Complex& c, int digits) {
  const Real re = c.real();
  const Real im = c.imag();
  const Real scale = abs(re) + abs(im);
  const Real cut = scale * Real("1e-30");
  const bool show_re = abs(re) > cut;
  const bool show_im = abs(im) > cut;
  std::ostringstream os;
  os << std::setprecision(digits);
  if (!show_im) {
    os << (show_re ? re : Real(0));
  } else if (!show_re) {
    os << im << "i";
  } else {
    os << re << (im < 0 ? "-" : "+") << abs(im) << "i";
  }
  return os.str();
}

std::string PuiseuxBranch::to_string(int max_terms) const {
  std::ostringstream os;
  os << "n=" << n << " y =";
  if (terms.empty()) os << " 0";
  int shown = 0;
  for (const auto& t : terms) {
    if (shown++ == max_terms) {
      os << " + ...";
      break;
    }
    os << (shown == 1 ? " (" : " + (") << format_complex(t.coeff) << ")*x^"
       << polarnd::to_string(t.exponent);
  }
  if (!exact && shown <= max_terms) os << " + ...";
  return os.str();
}

PuiseuxResult puiseux_expand(const PlaneSeries& f, const PuiseuxOptions& opts) {
  if (f.poly.is_zero()) throw PreconditionError("Puiseux expansion of the zero series");
  std::map<std::pair<int, int>, Rational> coeffs;
  for (const auto& [ij, c] : plane_coefficients(f.poly)) {
    if (!c.is_constant()) {
      throw PreconditionError("Puiseux expansion needs rational coefficients; found " +
                              c.to_string());
    }
    coeffs[ij] = c.constant_term();
  }
  if (coeffs.count({0, 0}) != 0) throw PreconditionError("f(0,0) != 0");
  PuiseuxResult result;
  result.x_power = std::numeric_limits<int>::max();
  for (const auto& [ij, c] : coeffs) result.x_power = std::min(result.x_power, ij.first);
  if (result.x_power > 0) {
    std::map<std::pair<int, int>, Rational> shifted;
    for (const auto& [ij, c] : coeffs) shifted[{ij.first - result.x_power, ij.second}] = c;
    coeffs = std::move(shifted);
  }
  int order_y = std::numeric_limits<int>::max();
  for (const auto& [ij, c] : coeffs) {
    if (ij.first == 0) order_y = std::min(order_y, ij.second);
  }
  if (order_y == 0) throw PreconditionError("f(0,0) != 0 once x is divided out");

  CPoly g;
  for (const auto& [ij, c] : coeffs) g[{ij.first, ij.second}] = to_complex(c);
  Expander ex{opts, {}};
  ex.run(std::move(g), 1, {}, Rational(0), -1, 0);

  long total = 0;
  for (auto& b : ex.out) {
    finish_branch(b);
    b.residual = residual_check(coeffs, b, opts.tol);
    if (b.residual > opts.tol) {
      throw ToleranceError("residual " + std::to_string(b.residual) +
                           " exceeds tolerance on branch " + b.to_string(4));
    }
    total += static_cast<long>(b.n) * b.multiplicity;
  }
  if (total != order_y) {
    throw ToleranceError("branches account for " + std::to_string(total) + " of " +
                         std::to_string(order_y) + " roots");
  }
  result.branches = std::move(ex.out);
  return result;
}

int intersection_numeric(const PuiseuxBranch& b1, const PuiseuxBranch& b2) {
  const long n2 = b2.n;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  Rational total(0);
  for (long k = 0; k < n2; ++k) {
    // psi_k: coefficient of x^e times exp(2 pi i k e n2 / n2) = zeta^(k e n2).
    std::map<Rational, Complex> psi;
    for (const auto& t : b2.terms) {
      const Rational te = t.exponent * n2;
      const Real angle = two_pi * Real(k) * Real(te.get_num().get_si()) / Real(n2);
      psi[t.exponent] = t.coeff * polar(Real(1), angle);
    }
    std::map<Rational, Complex> phi;
    for (const auto& t : b1.terms) phi[t.exponent] = t.coeff;
    std::map<Rational, std::pair<Complex, Complex>> merged;
    for (const auto& [e, c] : phi) merged[e].first = c;
    for (const auto& [e, c] : psi) merged[e].second = c;

    const Rational horizon = [&] {
      if (b1.exact && b2.exact) return Rational(1000000);
      if (b1.exact) return b2.known_through;
      if (b2.exact) return b1.known_through;
      return std::min(b1.known_through, b2.known_through);
    }();
    std::optional<Rational> contact;
    for (const auto& [e, cc] : merged) {
      if (e > horizon) break;
      const Real scale = std::max(Real(1), std::max(magnitude(cc.first), magnitude(cc.second)));
      if (magnitude(cc.first - cc.second) > equal_threshold() * scale) {
        contact = e;
        break;
      }
    }
    if (!contact) {
      if (b1.exact && b2.exact) throw PreconditionError("the two branches coincide");
      throw InsufficientDepthError("branches agree on every known term; expand deeper");
    }
    total += *contact;
  }
  total *= b1.n;
  if (total.get_den() != 1) throw Error("non-integral intersection number");
  return static_cast<int>(total.get_num().get_si());
}

TopologyReport topology_from_puiseux(const PuiseuxResult& r) {
  struct Entry {
    BranchClass cls;
    const PuiseuxBranch* branch;
  };
  std::vector<Entry> entries;
  for (const auto& b : r.branches) {
    const auto cls = b.leading_class();
    if (!cls) throw PreconditionError("the branch y = 0 has no class");
    for (int k = 0; k < b.multiplicity; ++k) entries.push_back({*cls, &b});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& rr) {
    return std::tie(l.cls.a0, l.cls.a1) < std::tie(rr.cls.a0, rr.cls.a1);
  });
  TopologyReport out;
  for (const auto& e : entries) {
    if (!out.branches.empty() && out.branches.back().a0 == e.cls.a0 &&
        out.branches.back().a1 == e.cls.a1) {
      ++out.branches.back().count;
    } else {
      out.branches.push_back(e.cls);
    }
  }
  const std::size_t n = entries.size();
  out.intersections.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int v = intersection_numeric(*entries[i].branch, *entries[j].branch);
      out.intersections[i][j] = v;
      out.intersections[j][i] = v;
    }
  }
  return out;
}

}  // namespace polarnd
