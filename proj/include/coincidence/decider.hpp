#pragma once

// Verdicts on whether f_1..f_k : M -> N can be deformed to be coincidence
// free. NotDeformable is only issued from a certified nonzero class, and
// DeformableFree only when every hypothesis of a converse theorem holds.

#include "coincidence/lefschetz.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coincidence::decider {

enum class JiangType { None, Jiang, Nilmanifold, CompactLieCoset, CNilpotentFiniteCenter };

std::string jiang_type_name(JiangType t);
/// Throws Schema on an unrecognized name.
JiangType parse_jiang_type(const std::string &name);

struct SourceFlags {
  bool closed = false;
  bool connected = false;
  bool oriented = false;
};

struct TargetFlags {
  bool closed = false;
  bool connected = false;
  bool orientable = false;
  bool simply_connected = false;
  JiangType jiang_type = JiangType::None;
  bool aspherical = false;
};

struct Scenario {
  int k;
  int n;
  int dim_m;
  SourceFlags m_flags;
  TargetFlags n_flags;
  lefschetz::ClassValue class_value;
  std::optional<bool> obstruction_known_zero;
  /// Free-text notes carried into the verdict (e.g. facts outside the engine).
  std::vector<std::string> remarks;

  /// Throws InvalidArgument unless k >= 2, n >= 1, dim_m >= 1.
  void validate() const;
};

/// Stable identifiers of the checked hypotheses.
namespace hyp {
inline constexpr const char *kDimension = "dim_M == (k-1)n";
inline constexpr const char *kObstructionRange = "n(k-1) >= 3";
inline constexpr const char *kSourceClosedConnected = "M closed and connected";
inline constexpr const char *kTargetClosedConnected = "N closed and connected";
inline constexpr const char *kSimplyConnected = "N simply connected";
inline constexpr const char *kJiangType = "N of Jiang type";
inline constexpr const char *kOrientable = "N orientable";
} // namespace hyp

struct HypothesisResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<HypothesisResult> check_hypotheses(const Scenario &s);

enum class Decision { NotDeformable, DeformableFree, Inconclusive };
std::string decision_name(Decision d);

/// Rule identifiers cited by verdicts.
namespace rule {
inline constexpr const char *kLefschetz =
    "lefschetz-coincidence-theorem: a nonzero class forces a coincidence";
inline constexpr const char *kConverseSimplyConnected =
    "converse-simply-connected: for simply connected N, deformable iff L2 = 0";
inline constexpr const char *kConverseJiang =
    "converse-jiang: for orientable Jiang-type N, deformable iff L2 = 0";
inline constexpr const char *kConverseObstruction =
    "converse-obstruction: deformable iff o_{(k-1)n} = 0";
inline constexpr const char *kNone = "none";
} // namespace rule

struct Verdict {
  Decision decision;
  std::string rule;
  std::vector<std::string> notes;
};

Verdict decide(const Scenario &s);

} // namespace coincidence::decider
