#include "polarnd/semigroup.hpp"

#include <numeric>

#include "polarnd/error.hpp"

namespace polarnd {

std::string SemigroupSpec::to_string() const {
  std::string out = "<";
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(generators[k]);
  }
  return out + ">";
}

void validate_semigroup(const SemigroupSpec& spec) {
  const auto& v = spec.generators;
  if (v.empty()) throw PreconditionError("empty semigroup generator list");
  for (long g : v) {
    if (g < 1) throw PreconditionError("semigroup generators must be positive");
  }
  if (v.size() == 1) {
    if (v[0] != 1) throw PreconditionError("a single generator must be 1 (smooth branch)");
    return;
  }
  if (v[0] < 2 || v[1] <= v[0]) throw PreconditionError("need 2 <= v0 < v1");
  long e_prev = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) {
    const long e = std::gcd(e_prev, v[i]);
    if (e >= e_prev) {
      throw PreconditionError("gcd chain does not drop at v" + std::to_string(i) +
                              "; not a minimal system");
    }
    if (i + 1 < v.size() && (e_prev / e) * v[i] >= v[i + 1]) {
      throw PreconditionError("v" + std::to_string(i + 1) + " must exceed (e" +
                              std::to_string(i - 1) + "/e" + std::to_string(i) + ") v" +
                              std::to_string(i));
    }
    e_prev = e;
  }
  if (e_prev != 1) throw PreconditionError("gcd of the generators must be 1");
}

SemigroupSpec semigroup_from_char(const std::vector<long>& beta) {
  if (beta.empty() || beta[0] < 1) throw PreconditionError("invalid characteristic sequence");
  SemigroupSpec out;
  out.generators.push_back(beta[0]);
  if (beta.size() == 1) {
    if (beta[0] != 1) throw PreconditionError("characteristic sequence does not end at gcd 1");
    return out;
  }
  long e_prev = beta[0];
  long e_cur = std::gcd(beta[0], beta[1]);
  if (beta[1] <= beta[0] || e_cur >= e_prev) {
    throw PreconditionError("invalid characteristic sequence");
  }
  out.generators.push_back(beta[1]);
  for (std::size_t i = 1; i + 1 < beta.size(); ++i) {
    const long e_next = std::gcd(e_cur, beta[i + 1]);
    if (beta[i + 1] <= beta[i] || e_next >= e_cur) {
      throw PreconditionError("invalid characteristic sequence");
    }
    out.generators.push_back((e_prev / e_cur) * out.generators.back() + beta[i + 1] - beta[i]);
    e_prev = e_cur;
    e_cur = e_next;
  }
  if (e_cur != 1) throw PreconditionError("characteristic sequence does not end at gcd 1");
  return out;
}

}  // namespace polarnd
