#include "polarnd/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "polarnd/error.hpp"

namespace polarnd {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& l, const Entry& r) { return l.first < r.first; });
  for (const auto& [v, e] : entries) {
    if (!entries_.empty() && entries_.back().first == v) {
      entries_.back().second += e;
    } else {
      entries_.emplace_back(v, e);
    }
  }
  std::erase_if(entries_, [](const Entry& en) { return en.second == 0; });
}

Monomial Monomial::of(VarId v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.entries_.emplace_back(v, exponent);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& en : entries_) d += en.second;
  return d;
}

unsigned Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : entries_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() ||
        (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto b = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (b != other.entries_.end() && b->first < v) ++b;
    if (b == other.entries_.end() || b->first != v || b->second < e) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<Entry> out = entries_;
  for (const auto& [v, e] : other.entries_) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Entry& en) { return en.first == v; });
    if (it == out.end() || it->second < e) {
      throw PreconditionError("monomial division is not exact");
    }
    it->second -= e;
  }
  return Monomial(std::move(out));
}

Monomial Monomial::without(VarId v) const {
  Monomial out = *this;
  std::erase_if(out.entries_, [&](const Entry& en) { return en.first == v; });
  return out;
}

int grlex_compare(const Monomial& lhs, const Monomial& rhs) {
  const unsigned dl = lhs.degree();
  const unsigned dr = rhs.degree();
  if (dl != dr) return dl < dr ? -1 : 1;
  auto a = lhs.entries().begin();
  auto b = rhs.entries().begin();
  while (a != lhs.entries().end() && b != rhs.entries().end()) {
    if (a->first < b->first) return 1;
    if (b->first < a->first) return -1;
    if (a->second != b->second) return a->second < b->second ? -1 : 1;
    ++a;
    ++b;
  }
  if (a != lhs.entries().end()) return 1;
  if (b != rhs.entries().end()) return -1;
  return 0;
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

MPoly::MPoly(long constant) : MPoly(Rational(constant)) {}

MPoly MPoly::variable(VarId v) { return term(Rational(1), Monomial::of(v)); }

MPoly MPoly::term(const Rational& coefficient, Monomial monomial) {
  MPoly p;
  p.add_term(monomial, coefficient);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MPoly::constant_term() const { return coefficient(Monomial()); }

Rational MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MPoly::degree(VarId v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<VarId> MPoly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& en : m.entries()) out.insert(en.first);
  }
  return out;
}

bool MPoly::depends_on(VarId v) const {
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) > 0) return true;
  }
  return false;
}

const std::pair<const Monomial, Rational>& MPoly::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return *terms_.begin();
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      out.add_term(ml * mr, Rational(cl * cr));
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= scalar;
  }
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::map<unsigned, MPoly> MPoly::coefficients_in(VarId v) const {
  std::map<unsigned, MPoly> out;
  for (const auto& [m, c] : terms_) {
    out[m.exponent(v)].add_term(m.without(v), c);
  }
  return out;
}

std::map<Monomial, MPoly, GrlexGreater> MPoly::coefficients_in(
    const std::set<VarId>& vars) const {
  std::map<Monomial, MPoly, GrlexGreater> out;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Entry> inside;
    std::vector<Monomial::Entry> outside;
    for (const auto& en : m.entries()) {
      (vars.contains(en.first) ? inside : outside).push_back(en);
    }
    out[Monomial(std::move(inside))].add_term(Monomial(std::move(outside)), c);
  }
  return out;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& values) const {
  MPoly out;
  // Cache powers per variable; substitution values are reused heavily.
  std::map<std::pair<VarId, unsigned>, MPoly> power_cache;
  auto power = [&](VarId v, unsigned e) -> const MPoly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    return power_cache.emplace(key, pow(values.at(v), e)).first->second;
  };
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Entry> kept;
    MPoly factor(c);
    for (const auto& [v, e] : m.entries()) {
      if (values.contains(v)) {
        factor *= power(v, e);
        if (factor.is_zero()) break;
      } else {
        kept.emplace_back(v, e);
      }
    }
    if (factor.is_zero()) continue;
    out += factor * MPoly::term(Rational(1), Monomial(std::move(kept)));
  }
  return out;
}

namespace {

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.entries()) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += polarnd::to_string(mag);
    } else if (mag == 1) {
      out += render_monomial(m);
    } else {
      out += polarnd::to_string(mag) + "*" + render_monomial(m);
    }
  }
  return out;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result(1L);
  MPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

MPoly derivative(const MPoly& f, VarId v) {
  MPoly out;
  for (const auto& [m, c] : f.terms()) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m / Monomial::of(v), Rational(c * e));
  }
  return out;
}

std::optional<MPoly> try_divide(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& [lm, lc] = den.leading_term();
  MPoly quotient;
  MPoly rest = num;
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    MPoly t = MPoly::term(Rational(rc / lc), rm / lm);
    quotient += t;
    rest -= t * den;
  }
  return quotient;
}

MPoly divide_exact(const MPoly& num, const MPoly& den) {
  auto q = try_divide(num, den);
  if (!q) throw PreconditionError("polynomial division is not exact");
  return *std::move(q);
}

MPoly normalize_primitive(const MPoly& f) {
  if (f.is_zero()) return f;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.leading_term().second < 0) scale = -scale;
  return f * scale;
}

namespace {

// Pseudo-remainder of a by b as polynomials in v.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, VarId v) {
  const unsigned db = b.degree(v);
  auto bc = b.coefficients_in(v);
  const MPoly lb = bc.rbegin()->second;
  MPoly rest = a;
  unsigned dr = rest.degree(v);
  int scale_count = static_cast<int>(dr) - static_cast<int>(db) + 1;
  while (!rest.is_zero() && rest.degree(v) >= db) {
    dr = rest.degree(v);
    auto rc = rest.coefficients_in(v);
    const MPoly lr = rc.rbegin()->second;
    rest = lb * rest - lr * MPoly::term(Rational(1), Monomial::of(v, dr - db)) * b;
    --scale_count;
  }
  if (scale_count > 0) rest *= pow(lb, static_cast<unsigned>(scale_count));
  return rest;
}

MPoly primitive_in(const MPoly& f, VarId v) {
  return divide_exact(f, content_in(f, v));
}

}  // namespace

MPoly content_in(const MPoly& f, VarId v) {
  MPoly g;
  for (const auto& [e, c] : f.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_constant()) return MPoly(1L);
  }
  return g;
}

MPoly gcd(const MPoly& f, const MPoly& g) {
  if (f.is_zero()) return normalize_primitive(g);
  if (g.is_zero()) return normalize_primitive(f);
  if (f.is_constant() || g.is_constant()) return MPoly(1L);

  std::set<VarId> vars = f.variables();
  vars.merge(g.variables());
  const VarId v = *vars.begin();
  if (!f.depends_on(v)) return gcd(f, content_in(g, v));
  if (!g.depends_on(v)) return gcd(content_in(f, v), g);

  const MPoly cf = content_in(f, v);
  const MPoly cg = content_in(g, v);
  const MPoly c = gcd(cf, cg);
  MPoly a = divide_exact(f, cf);
  MPoly b = divide_exact(g, cg);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (true) {
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      b = MPoly(1L);
      break;
    }
    a = std::move(b);
    b = primitive_in(r, v);
  }
  return normalize_primitive(c * b);
}

MPoly strip_content(const MPoly& g,
                    const std::function<bool(const VarId&)>& keep) {
  if (g.is_zero()) throw PreconditionError("strip_content of the zero polynomial");
  std::map<VarId, unsigned> min_exp;
  bool first = true;
  for (const auto& [m, c] : g.terms()) {
    if (first) {
      for (const auto& [v, e] : m.entries()) {
        if (!keep(v)) min_exp[v] = e;
      }
      first = false;
      continue;
    }
    for (auto& [v, e] : min_exp) e = std::min(e, m.exponent(v));
  }
  std::vector<Monomial::Entry> factor;
  for (const auto& [v, e] : min_exp) {
    if (e > 0) factor.emplace_back(v, e);
  }
  MPoly out;
  const Monomial divisor(std::move(factor));
  for (const auto& [m, c] : g.terms()) out.add_term(m / divisor, c);
  return normalize_primitive(out);
}

MPoly strip_content(const MPoly& g, const std::set<VarId>& keep) {
  return strip_content(g, [&](const VarId& v) { return keep.contains(v); });
}

MPoly squarefree_part(const MPoly& g, VarId main) {
  if (g.is_zero()) throw PreconditionError("squarefree_part of the zero polynomial");
  if (g.is_constant()) return MPoly(1L);
  if (!g.depends_on(main)) return squarefree_part(g);
  const MPoly content = content_in(g, main);
  const MPoly primitive = divide_exact(g, content);
  const MPoly sf = divide_exact(primitive, gcd(primitive, derivative(primitive, main)));
  MPoly out = sf;
  if (!content.is_constant()) out *= squarefree_part(content);
  return normalize_primitive(out);
}

MPoly squarefree_part(const MPoly& g) {
  if (g.is_zero()) throw PreconditionError("squarefree_part of the zero polynomial");
  if (g.is_constant()) return MPoly(1L);
  return squarefree_part(g, *g.variables().begin());
}

}  // namespace polarnd
