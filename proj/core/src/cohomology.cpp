#include "avla/cohomology.hpp"

#include <string>

#include "avla/errors.hpp"
#include "avla/linalg.hpp"

namespace avla {

const char* to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::LA: return "la";
    case ComplexKind::ALO: return "alo";
    case ComplexKind::AL: return "al";
  }
  return "?";
}

void ComplexSpec::check() const {
  if (max_degree < 1 || max_degree > kMaxCochainDegree) {
    throw InvalidInput("max degree must lie in 1.." + std::to_string(kMaxCochainDegree));
  }
  rep.check_shape();
  if (kind != ComplexKind::LA) {
    if (!op) throw InvalidInput(std::string("complex '") + to_string(kind) + "' needs an averaging operator");
    if (op->dim() != rep.gdim()) throw InvalidInput("operator dimension does not match algebra");
    if (!rep.theta_m) throw InvalidInput("complex needs theta_M on the representation");
  }
}

std::size_t complex_cochain_dim(const ComplexSpec& spec, std::size_t n) {
  const std::size_t g = spec.rep.gdim(), m = spec.rep.mdim;
  return spec.kind == ComplexKind::AL ? cone_dim(n, g, m) : cochain_dim(n, g, m);
}

RatMatrix differential(const ComplexSpec& spec, std::size_t n) {
  switch (spec.kind) {
    case ComplexKind::LA: return matrix_of(CochainOperator::Delta, n, spec.rep);
    case ComplexKind::ALO: return matrix_of(CochainOperator::PartialAvg, n, spec.rep, spec.op, spec.mode);
    case ComplexKind::AL: return matrix_of(CochainOperator::Cone, n, spec.rep, spec.op, spec.mode);
  }
  throw InvalidInput("unknown complex kind");
}

namespace {

struct Differentials {
  std::vector<RatMatrix> d;  // d[0..max_degree]
  std::vector<DefectEntry> audit;
};

Differentials build(const ComplexSpec& spec) {
  spec.check();
  Differentials out;
  for (std::size_t n = 0; n <= spec.max_degree; ++n) out.d.push_back(differential(spec, n));
  for (std::size_t n = 0; n < spec.max_degree; ++n) {
    const RatMatrix product = out.d[n + 1] * out.d[n];
    DefectEntry e;
    e.degree = n;
    e.is_zero = product.is_zero();
    e.defect_rank = e.is_zero ? 0 : rank(product);
    out.audit.push_back(e);
  }
  return out;
}

std::optional<ComplexInvalid> gate(const std::vector<DefectEntry>& audit, std::size_t n) {
  for (const DefectEntry& e : audit) {
    if ((e.degree + 1 == n || e.degree == n) && !e.is_zero) return ComplexInvalid{e.degree, e.defect_rank};
  }
  return std::nullopt;
}

}  // namespace

std::vector<DefectEntry> complex_audit(const ComplexSpec& spec) { return build(spec).audit; }

std::variant<std::size_t, ComplexInvalid> betti(const ComplexSpec& spec, std::size_t n) {
  spec.check();
  if (n >= spec.max_degree) throw InvalidInput("betti degree must be below the max degree");
  // Only the differentials around n are needed; audit them locally.
  const RatMatrix d_n = differential(spec, n);
  const RatMatrix d_next = differential(spec, n + 1);
  std::vector<DefectEntry> audit;
  std::optional<RatMatrix> d_prev;
  if (n > 0) {
    d_prev = differential(spec, n - 1);
    const RatMatrix p = d_n * *d_prev;
    audit.push_back({n - 1, p.is_zero(), p.is_zero() ? 0 : rank(p)});
  }
  const RatMatrix p = d_next * d_n;
  audit.push_back({n, p.is_zero(), p.is_zero() ? 0 : rank(p)});
  if (auto bad = gate(audit, n)) return *bad;
  const std::size_t kernel = d_n.cols() - rank(d_n);
  const std::size_t image = d_prev ? rank(*d_prev) : 0;
  return kernel - image;
}

bool CohomologyReport::valid() const {
  for (const DefectEntry& e : validity)
    if (!e.is_zero) return false;
  return true;
}

CohomologyReport cohomology_report(const ComplexSpec& spec) {
  const Differentials diffs = build(spec);
  CohomologyReport report;
  report.kind = spec.kind;
  report.mode = spec.mode;
  report.validity = diffs.audit;
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n < spec.max_degree; ++n) ranks.push_back(rank(diffs.d[n]));
  for (std::size_t n = 0; n < spec.max_degree; ++n) {
    DegreeRow row;
    row.degree = n;
    row.cochain_dim = diffs.d[n].cols();
    row.rank = ranks[n];
    row.kernel_dim = row.cochain_dim - row.rank;
    if (!gate(diffs.audit, n)) row.betti = row.kernel_dim - (n > 0 ? ranks[n - 1] : 0);
    report.degrees.push_back(row);
  }
  return report;
}

}  // namespace avla
