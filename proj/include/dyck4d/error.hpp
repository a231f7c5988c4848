#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyck4d {

enum class ErrorKind {
  InvalidCharacter,
  NegativePrefix,
  Unbalanced,
  MalformedPath,
  ParityViolation,
  NotInLattice,
  UnboundedRegion,
  InconsistentProjection,
  RankOutOfRange,
  WrongArity,
  Degenerate,
  InvalidJson,
};

/// Stable lowercase name, used verbatim in CLI error lines.
constexpr std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidCharacter: return "invalid-character";
    case ErrorKind::NegativePrefix: return "negative-prefix";
    case ErrorKind::Unbalanced: return "unbalanced";
    case ErrorKind::MalformedPath: return "malformed-path";
    case ErrorKind::ParityViolation: return "parity-violation";
    case ErrorKind::NotInLattice: return "not-in-lattice";
    case ErrorKind::UnboundedRegion: return "unbounded-region";
    case ErrorKind::InconsistentProjection: return "inconsistent-projection";
    case ErrorKind::RankOutOfRange: return "rank-out-of-range";
    case ErrorKind::WrongArity: return "wrong-arity";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::InvalidJson: return "invalid-json";
  }
  return "unknown";
}

/// Domain error raised by every operation in the library.
///
/// `detail()` carries the numeric payload of the error when it has one:
/// a 0-based position for character, prefix, path and projection errors,
/// the final excess of opens over closes for `Unbalanced`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::optional<std::int64_t> detail = std::nullopt)
      : std::runtime_error(std::move(message)), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> detail_;
};

}  // namespace dyck4d
