#pragma once

#include <string>
#include <vector>

namespace polarnd {

/// Minimal generator system <v0, ..., vg> of the semigroup of a plane branch.
struct SemigroupSpec {
  std::vector<long> generators;

  int genus() const { return static_cast<int>(generators.size()) - 1; }
  std::string to_string() const;
  bool operator==(const SemigroupSpec&) const = default;
};

/// Throws PreconditionError unless `spec` is the semigroup of some plane
/// branch: v0 < v1, the gcd chain e_i = gcd(v0..vi) strictly decreases to 1
/// and (e_{i-1}/e_i) v_i < v_{i+1}.
void validate_semigroup(const SemigroupSpec& spec);

/// Characteristic exponents (b0; b1, ..., bg) -> semigroup, via
/// v_{i+1} = (e_{i-1}/e_i) v_i + b_{i+1} - b_i.
SemigroupSpec semigroup_from_char(const std::vector<long>& char_exponents);

}  // namespace polarnd
