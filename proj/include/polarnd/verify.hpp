#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polarnd/curvekit.hpp"
#include "polarnd/locus.hpp"

namespace polarnd {

/// K(p,q) when d is empty, otherwise K(e1 p, e1 q, e1 pq + d).
struct FamilySpec {
  int p = 2;
  int q = 3;
  std::optional<int> d;
  int e1 = 2;

  bool genus2() const { return d.has_value(); }
  std::string tag() const;
};

enum class AbMode { ConcreteRandom, Symbolic };

struct SampleConfig {
  FamilySpec family;
  std::uint64_t seed = 42;
  int trials = 50;
  int coeff_range = 10;
  AbMode ab_mode = AbMode::ConcreteRandom;
  bool puiseux_crosscheck = false;
  /// Values pinned in every trial. When non-empty the sample is not forced
  /// off the locus.
  std::map<VarId, Rational> forced;
};

inline constexpr const char* kPrngName = "mt19937_64/splitmix64-v1";

struct Sample {
  std::map<VarId, Rational> assignment;
  PlaneSeries member;
  std::optional<std::pair<Rational, Rational>> ab;
  int redraws = 0;
};

/// Draw for trial `trial`: family coefficients are num/den with num, den
/// uniform in [-R, R] (den != 0), redrawn while the point lies on `locus`;
/// b[i0,j0] is never 0. In concrete mode (a:b) is drawn the same way with
/// a, b != 0, avoiding the finitely many points where a predicted term or
/// discriminant vanishes. Throws Error after 1000 redraws.
Sample sample_off_locus(const SampleConfig& cfg, int trial);

struct TrialRecord {
  int index = 0;
  std::string digest;
  std::string ab;
  std::optional<bool> polygon_match;
  std::vector<bool> side_squarefree;
  bool nondegenerate = false;
  /// Index (in the polygon of the computed polar) of the first side that is
  /// not squarefree, with its associated polynomial.
  std::optional<int> failing_side;
  std::string failing_segment;  // "(i,j)-(i',j')"
  std::string failing_polynomial;
  std::optional<bool> topology_match;
  std::optional<bool> puiseux_match;
  /// Branch classes of the computed polar equal to (p, q).
  int pq_branches = 0;
  std::vector<std::string> notes;
};

struct VerifySummary {
  int trials = 0;
  int polygon_match = 0;
  int all_squarefree = 0;
  int topology_match = 0;
  int puiseux_match = 0;
  int puiseux_checked = 0;
};

struct VerifyReport {
  SampleConfig config;
  std::string prng = kPrngName;
  std::vector<std::string> locus;
  std::vector<TrialRecord> records;
  VerifySummary summary;

  bool all_match() const;
  std::string to_json(int indent = 2) const;
  std::string to_text() const;
};

/// Runs every trial: computes the polar of the sample at a random general
/// (a:b) from scratch and compares it with the predicted polygon, side
/// supports, squarefreeness and topology. Failures are recorded, not thrown.
VerifyReport run_verification(const SampleConfig& cfg);

}  // namespace polarnd
