#pragma once

// Scenario files (JSON in) and reports (JSON out) for the coincidence-lab CLI.

#include "coincidence/affine_solver.hpp"
#include "coincidence/decider.hpp"
#include "coincidence/error.hpp"
#include "coincidence/lefschetz.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace coincidence::scenario {

struct TorusAffineModel {
  int m;
  int n;
  std::vector<affine::AffineTorusMap> maps;

  [[nodiscard]] lefschetz::TorusMapModel matrices() const;
};

struct SphereDegreesModel {
  int n;
  int k;
  std::vector<int64_t> degrees;
};

using Model =
    std::variant<TorusAffineModel, SphereDegreesModel, lefschetz::FactModel>;

/// The decider block: everything in decider::Scenario except the class.
struct DeciderBlock {
  int k;
  int n;
  int dim_m;
  decider::SourceFlags m_flags;
  decider::TargetFlags n_flags;
  std::optional<bool> obstruction_known_zero;
  std::vector<std::string> remarks;
};

struct ScenarioFile {
  Model model;
  std::optional<DeciderBlock> decider;
  nlohmann::json source; // the document as read
};

/// Validates the whole document. Throws Error{Schema} naming the offending
/// field, Error{DimensionMismatch} for shape errors.
ScenarioFile parse_scenario(const nlohmann::json &doc);

enum class Command { Class, Solve, Decide };

/// Builds the report for a command. Throws coincidence::Error.
nlohmann::json build_report(Command cmd, const ScenarioFile &scenario);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json &report);

/// 0 ok, 2 schema, 3 dimension, 4 transversality, 5 overflow, 1 other.
int exit_code_for(Errc code);

struct RunOutcome {
  int exit_code;
  std::string report;  // empty on failure
  std::string message; // diagnostic on failure
};

/// Reads, validates, computes and renders; never throws.
RunOutcome run(Command cmd, const std::filesystem::path &path);
RunOutcome run_document(Command cmd, const std::string &text);

} // namespace coincidence::scenario
