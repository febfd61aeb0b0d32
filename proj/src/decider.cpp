#include "coincidence/decider.hpp"

#include "coincidence/error.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace coincidence::decider {

namespace {

constexpr std::array<std::pair<JiangType, const char *>, 5> kJiangNames{{
    {JiangType::None, "None"},
    {JiangType::Jiang, "Jiang"},
    {JiangType::Nilmanifold, "Nilmanifold"},
    {JiangType::CompactLieCoset, "CompactLieCoset"},
    {JiangType::CNilpotentFiniteCenter, "CNilpotentFiniteCenter"},
}};

bool passed(const std::vector<HypothesisResult> &results, const char *name) {
  auto it = std::find_if(results.begin(), results.end(),
                         [&](const auto &r) { return r.name == name; });
  return it != results.end() && it->passed;
}

std::string describe(const HypothesisResult &h) {
  return std::string(h.passed ? "pass: " : "fail: ") + h.name + " (" +
         h.detail + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string jiang_type_name(JiangType t) {
  for (const auto &[type, name] : kJiangNames)
    if (type == t)
      return name;
  return "None";
}

JiangType parse_jiang_type(const std::string &name) {
  for (const auto &[type, n] : kJiangNames)
    if (name == n)
      return type;
  throw Error(Errc::Schema, "unknown jiang_type \"" + name + "\"");
}

void Scenario::validate() const {
  if (k < 2 || n < 1 || dim_m < 1)
    throw Error(Errc::InvalidArgument,
                "scenario needs k >= 2, n >= 1, dim_M >= 1");
}

std::string decision_name(Decision d) {
  switch (d) {
  case Decision::NotDeformable: return "NotDeformable";
  case Decision::DeformableFree: return "DeformableFree";
  case Decision::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::vector<HypothesisResult> check_hypotheses(const Scenario &s) {
  s.validate();
  std::vector<HypothesisResult> out;
  const int expected_dim = (s.k - 1) * s.n;
  out.push_back({hyp::kDimension, s.dim_m == expected_dim,
                 std::to_string(s.dim_m) + (s.dim_m == expected_dim ? " == " : " != ") +
                     std::to_string(expected_dim)});

  // Surfaces qualify once k >= 3.
  const int range = s.n * (s.k - 1);
  std::string range_detail = "n(k-1) = " + std::to_string(range);
  if (s.n == 2 && s.k >= 3)
    range_detail += "; surface target admitted since k >= 3";
  else if (s.n <= 2 && s.k == 2)
    range_detail += "; two maps into a surface or curve are not covered";
  out.push_back({hyp::kObstructionRange, range >= 3, range_detail});

  out.push_back({hyp::kSourceClosedConnected,
                 s.m_flags.closed && s.m_flags.connected,
                 "closed: " + yes_no(s.m_flags.closed) +
                     ", connected: " + yes_no(s.m_flags.connected)});
  out.push_back({hyp::kTargetClosedConnected,
                 s.n_flags.closed && s.n_flags.connected,
                 "closed: " + yes_no(s.n_flags.closed) +
                     ", connected: " + yes_no(s.n_flags.connected)});
  out.push_back({hyp::kSimplyConnected, s.n_flags.simply_connected,
                 "simply connected: " + yes_no(s.n_flags.simply_connected)});
  out.push_back({hyp::kJiangType, s.n_flags.jiang_type != JiangType::None,
                 "declared type: " + jiang_type_name(s.n_flags.jiang_type)});
  out.push_back({hyp::kOrientable, s.n_flags.orientable,
                 "orientable: " + yes_no(s.n_flags.orientable)});
  return out;
}

Verdict decide(const Scenario &s) {
  const auto hyps = check_hypotheses(s);
  const auto &cls = s.class_value;

  auto with_remarks = [&](Verdict v) {
    v.notes.insert(v.notes.end(), s.remarks.begin(), s.remarks.end());
    return v;
  };
  auto notes_for = [&](std::initializer_list<const char *> names) {
    std::vector<std::string> notes;
    for (const auto &h : hyps)
      if (std::find_if(names.begin(), names.end(), [&](const char *n) {
            return h.name == n;
          }) != names.end())
        notes.push_back(describe(h));
    return notes;
  };

  if (cls.kind() == lefschetz::ClassValue::Kind::Integer && cls.value() != 0) {
    Verdict v{Decision::NotDeformable, rule::kLefschetz,
              {"class = " + std::to_string(cls.value()) + " (" +
               cls.provenance() + ")"}};
    return with_remarks(std::move(v));
  }

  const bool common = passed(hyps, hyp::kDimension) &&
                      passed(hyps, hyp::kObstructionRange) &&
                      passed(hyps, hyp::kSourceClosedConnected) &&
                      passed(hyps, hyp::kTargetClosedConnected);
  const std::string class_note =
      cls.kind() == lefschetz::ClassValue::Kind::Zero
          ? "class vanishes: " + cls.reason()
          : "class = 0 (" + cls.provenance() + ")";

  if (cls.vanishes() && common && passed(hyps, hyp::kSimplyConnected)) {
    Verdict v{Decision::DeformableFree, rule::kConverseSimplyConnected,
              notes_for({hyp::kDimension, hyp::kObstructionRange,
                         hyp::kSourceClosedConnected,
                         hyp::kTargetClosedConnected, hyp::kSimplyConnected})};
    v.notes.push_back(class_note);
    return with_remarks(std::move(v));
  }
  if (cls.vanishes() && common && passed(hyps, hyp::kOrientable) &&
      passed(hyps, hyp::kJiangType)) {
    Verdict v{Decision::DeformableFree, rule::kConverseJiang,
              notes_for({hyp::kDimension, hyp::kObstructionRange,
                         hyp::kSourceClosedConnected,
                         hyp::kTargetClosedConnected, hyp::kOrientable,
                         hyp::kJiangType})};
    v.notes.push_back(class_note);
    return with_remarks(std::move(v));
  }
  if (s.obstruction_known_zero.value_or(false) && common) {
    Verdict v{Decision::DeformableFree, rule::kConverseObstruction,
              notes_for({hyp::kDimension, hyp::kObstructionRange,
                         hyp::kSourceClosedConnected,
                         hyp::kTargetClosedConnected})};
    v.notes.emplace_back("obstruction o_{(k-1)n} declared zero");
    return with_remarks(std::move(v));
  }

  Verdict v{Decision::Inconclusive, rule::kNone, {}};
  for (const auto &h : hyps)
    if (!h.passed)
      v.notes.push_back(describe(h));
  if (cls.kind() == lefschetz::ClassValue::Kind::Unknown)
    v.notes.push_back("class unknown: " + cls.reason());
  else if (cls.vanishes())
    v.notes.push_back(class_note);
  return with_remarks(std::move(v));
}

} // namespace coincidence::decider
