#include "polarnd/cfrac.hpp"

#include <numeric>
#include <string>

#include "polarnd/error.hpp"

namespace polarnd {

ContinuedFraction continued_fraction(long q, long p) {
  if (p < 1 || p >= q) {
    throw PreconditionError("continued_fraction needs 0 < p < q, got p=" +
                            std::to_string(p) + " q=" + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw PreconditionError("continued_fraction needs gcd(p, q) = 1");
  }
  ContinuedFraction cf{p, q, {}};
  long num = q;
  long den = p;
  while (den != 0) {
    cf.h.push_back(num / den);
    num %= den;
    std::swap(num, den);
  }
  return cf;
}

ConvergentSeq convergents(const ContinuedFraction& cf) {
  ConvergentSeq out;
  long p2 = 1, q2 = 0;  // index -2
  long p1 = 0, q1 = 1;  // index -1
  for (long h : cf.h) {
    const long p = h * p1 + p2;
    const long q = h * q1 + q2;
    out.push_back({p, q});
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
  }
  return out;
}

}  // namespace polarnd
