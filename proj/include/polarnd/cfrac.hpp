#pragma once

#include <vector>

namespace polarnd {

/// q/p = [h_0, ..., h_s] with h_s >= 2; s is the index of the last entry.
struct ContinuedFraction {
  long p = 0;
  long q = 0;
  std::vector<long> h;

  int s() const { return static_cast<int>(h.size()) - 1; }
};

struct Convergent {
  long p = 0;
  long q = 0;
  bool operator==(const Convergent&) const = default;
};

/// Convergents q_i/p_i = [h_0, ..., h_i], i = 0..s.
using ConvergentSeq = std::vector<Convergent>;

/// Requires 0 < p < q and gcd(p, q) = 1.
ContinuedFraction continued_fraction(long q, long p);

ConvergentSeq convergents(const ContinuedFraction& cf);

}  // namespace polarnd
