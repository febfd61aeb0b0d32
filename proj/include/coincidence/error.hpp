#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coincidence {

enum class Errc {
  RankMismatch,
  IntegerOverflow,
  GroupMismatch,
  ArityMismatch,
  IndexOutOfRange,
  DimensionMismatch,
  NonTransverse,
  UnknownIdentifier,
  InvalidArgument,
  Schema,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
  case Errc::RankMismatch: return "RankMismatch";
  case Errc::IntegerOverflow: return "IntegerOverflow";
  case Errc::GroupMismatch: return "GroupMismatch";
  case Errc::ArityMismatch: return "ArityMismatch";
  case Errc::IndexOutOfRange: return "IndexOutOfRange";
  case Errc::DimensionMismatch: return "DimensionMismatch";
  case Errc::NonTransverse: return "NonTransverse";
  case Errc::UnknownIdentifier: return "UnknownIdentifier";
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::Schema: return "Schema";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace coincidence
