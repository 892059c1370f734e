#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "avla/cochain.hpp"

namespace avla {

/// LA: the Leibniz complex (delta). ALO: the operator complex (partial).
/// AL: the mapping cone of phi.
enum class ComplexKind { LA, ALO, AL };

const char* to_string(ComplexKind k);

struct ComplexSpec {
  ComplexKind kind = ComplexKind::LA;
  InducedMode mode = InducedMode::Strict;
  std::size_t max_degree = 3;  // 1 <= max_degree <= kMaxCochainDegree
  Representation rep;
  std::optional<AveragingOperator> op;  // required for ALO and AL

  /// Throws InvalidInput on a missing operator or out-of-range degree.
  void check() const;
};

/// Dimension of the degree-n cochain space of the complex.
std::size_t complex_cochain_dim(const ComplexSpec& spec, std::size_t n);

/// Coordinate matrix of d^n for the complex.
RatMatrix differential(const ComplexSpec& spec, std::size_t n);

struct DefectEntry {
  std::size_t degree = 0;  // checks d^{degree+1} d^{degree}
  bool is_zero = true;
  std::size_t defect_rank = 0;
};

/// d^{n+1} d^n for every n < max_degree.
std::vector<DefectEntry> complex_audit(const ComplexSpec& spec);

struct ComplexInvalid {
  std::size_t degree = 0;  // first n with d^{n+1} d^n != 0
  std::size_t defect_rank = 0;
};

/// dim ker d^n - rank d^{n-1}, refused when the complex fails at n-1 or n.
/// Requires n < max_degree.
std::variant<std::size_t, ComplexInvalid> betti(const ComplexSpec& spec, std::size_t n);

struct DegreeRow {
  std::size_t degree = 0;
  std::size_t cochain_dim = 0;
  std::size_t rank = 0;        // rank d^n
  std::size_t kernel_dim = 0;  // dim ker d^n
  std::optional<std::size_t> betti;  // absent when gated out
};

struct CohomologyReport {
  ComplexKind kind = ComplexKind::LA;
  InducedMode mode = InducedMode::Strict;
  std::vector<DegreeRow> degrees;      // 0 .. max_degree-1
  std::vector<DefectEntry> validity;   // 0 .. max_degree-1
  bool valid() const;
};

/// Builds each d^n once and derives ranks, kernels, audit and Betti numbers.
CohomologyReport cohomology_report(const ComplexSpec& spec);

}  // namespace avla
