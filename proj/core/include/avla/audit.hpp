#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avla/deformation.hpp"

namespace avla {

enum class Verdict { Pass, Fail, Skipped };

const char* to_string(Verdict v);

struct AuditCheck {
  std::string claim;             // e.g. "chain-map"
  std::string mode;              // "strict", "sum", or empty when mode-independent
  std::optional<std::size_t> degree;
  Verdict verdict = Verdict::Pass;
  std::size_t failures = 0;      // failing tuples or failing basis vectors
  std::string witness;           // first failure, empty unless Fail
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  /// True when every check that ran passed.
  bool passed() const;
  const AuditCheck* find(const std::string& claim, const std::string& mode = "",
                         std::optional<std::size_t> degree = std::nullopt) const;
  std::string text() const;
  std::string json() const;
};

struct AuditInput {
  LeibnizAlgebra algebra;
  AveragingOperator op;
  /// When absent, the self-representation with θ_M = θ is audited.
  std::optional<Representation> rep;
  /// When absent, both modes run.
  std::optional<InducedMode> mode;
};

/// Highest source degree of the chain-map and squared-differential checks.
inline constexpr std::size_t kAuditMaxDegree = 2;

/// Runs every check in a fixed order. Checks that assume a valid left
/// Leibniz algebra with an averaging operator (and, for the module checks,
/// a valid averaging representation) are skipped when that fails.
AuditReport audit(const AuditInput& in);

}  // namespace avla
