#include "avla/audit.hpp"

#include <sstream>

#include "avla/errors.hpp"
#include "avla/linalg.hpp"
#include "json.hpp"

namespace avla {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped (precondition failed)";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxShownEntries = 8;

std::string tuple_text(std::span<const std::size_t> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

std::string witness_text(const ValidationReport& r) {
  const Witness& w = r.witnesses.front();
  std::string s = "at " + tuple_text(w.tuple);
  if (!w.tag.empty()) s += " [" + w.tag + "]";
  if (w.order >= 0) s += " order " + std::to_string(w.order);
  return s + " residual " + to_string(w.residual);
}

AuditCheck from_report(std::string claim, std::string mode, const ValidationReport& r) {
  AuditCheck c{std::move(claim), std::move(mode), std::nullopt, Verdict::Pass, r.failure_count, ""};
  if (!r.passed()) {
    c.verdict = Verdict::Fail;
    c.witness = witness_text(r);
  }
  return c;
}

AuditCheck skipped(std::string claim, std::string mode, std::optional<std::size_t> degree = std::nullopt) {
  return {std::move(claim), std::move(mode), degree, Verdict::Skipped, 0, ""};
}

// Names a flat cochain coordinate as (i1,..,in)->q, 1-based.
std::string coordinate_text(std::size_t index, std::size_t arity, std::size_t g, std::size_t m) {
  const std::size_t q = index % m;
  return tuple_text(tuple_unrank(index / m, arity, g)) + "->" + std::to_string(q + 1);
}

std::string sparse_text(std::span<const Rational> v, auto&& name) {
  std::string s = "{";
  std::size_t shown = 0, nonzero = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    ++nonzero;
    if (shown == kMaxShownEntries) continue;
    s += (shown ? ", " : "") + name(i) + ": " + v[i].str();
    ++shown;
  }
  if (nonzero > shown) s += ", ... (" + std::to_string(nonzero) + " nonzero)";
  return s + "}";
}

// Columns of `residual` index degree-n basis cochains; rows index degree row_arity.
AuditCheck matrix_check(std::string claim, std::string mode, std::size_t n, std::size_t row_arity,
                        const RatMatrix& residual, std::size_t g, std::size_t m) {
  AuditCheck c{std::move(claim), std::move(mode), n, Verdict::Pass, 0, ""};
  for (std::size_t col = 0; col < residual.cols(); ++col) {
    const RatVector column = residual.column(col);
    if (is_zero(column)) continue;
    if (c.failures++ == 0) {
      c.verdict = Verdict::Fail;
      c.witness = "basis cochain " + coordinate_text(col, n, g, m) + " residual " +
                  sparse_text(column, [&](std::size_t i) { return coordinate_text(i, row_arity, g, m); });
    }
  }
  return c;
}

// Degree-2 cone coordinates: μ₁ entries, then θ₁ as a 1-cochain.
std::string cone2_name(std::size_t index, std::size_t g) {
  if (index < g * g * g) return "mu1" + coordinate_text(index, 2, g, g);
  return "theta1" + coordinate_text(index - g * g * g, 1, g, g);
}

// Degree-3 cone coordinates: the δ component, then the operator component.
std::string cone3_name(std::size_t index, std::size_t g) {
  if (index < g * g * g * g) return "delta" + coordinate_text(index, 3, g, g);
  return "operator" + coordinate_text(index - g * g * g * g, 2, g, g);
}

// Whether `image` kills every kernel vector of `equations`.
AuditCheck implication_check(std::string claim, std::string mode, const RatMatrix& equations, const RatMatrix& image,
                             std::size_t row_offset, std::size_t g) {
  AuditCheck c{std::move(claim), std::move(mode), std::nullopt, Verdict::Pass, 0, ""};
  for (const RatVector& k : kernel_basis(equations)) {
    const RatVector res = image.apply(k);
    if (is_zero(res)) continue;
    if (c.failures++ == 0) {
      c.verdict = Verdict::Fail;
      c.witness = "solution " + sparse_text(k, [&](std::size_t i) { return cone2_name(i, g); }) + " gives " +
                  sparse_text(res, [&](std::size_t i) { return cone3_name(i + row_offset, g); });
    }
  }
  return c;
}

RatMatrix row_block(const RatMatrix& a, std::size_t begin, std::size_t end) {
  RatMatrix out(end - begin, a.cols());
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r - begin, c) = a(r, c);
  return out;
}

}  // namespace

bool AuditReport::passed() const {
  for (const AuditCheck& c : checks)
    if (c.verdict == Verdict::Fail) return false;
  return true;
}

const AuditCheck* AuditReport::find(const std::string& claim, const std::string& mode,
                                    std::optional<std::size_t> degree) const {
  for (const AuditCheck& c : checks)
    if (c.claim == claim && c.mode == mode && c.degree == degree) return &c;
  return nullptr;
}

std::string AuditReport::text() const {
  std::ostringstream out;
  for (const AuditCheck& c : checks) {
    std::string label = c.claim;
    if (!c.mode.empty()) label += " [" + c.mode + "]";
    if (c.degree) label += " n=" + std::to_string(*c.degree);
    out << label << ": " << to_string(c.verdict);
    if (c.verdict == Verdict::Fail) out << " (" << c.failures << " failing) " << c.witness;
    out << "\n";
  }
  std::size_t fails = 0, skips = 0;
  for (const AuditCheck& c : checks) {
    fails += c.verdict == Verdict::Fail;
    skips += c.verdict == Verdict::Skipped;
  }
  out << checks.size() << " checks, " << fails << " failed, " << skips << " skipped\n";
  return out.str();
}

std::string AuditReport::json() const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const AuditCheck& c : checks) {
    nlohmann::ordered_json j;
    j["claim"] = c.claim;
    j["mode"] = c.mode.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.mode);
    j["degree"] = c.degree ? nlohmann::ordered_json(*c.degree) : nlohmann::ordered_json(nullptr);
    j["verdict"] = c.verdict == Verdict::Skipped ? "skipped" : to_string(c.verdict);
    j["failures"] = c.failures;
    j["witness"] = c.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(c.witness);
    list.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["passed"] = passed();
  root["checks"] = std::move(list);
  return root.dump(2) + "\n";
}

AuditReport audit(const AuditInput& in) {
  const LeibnizAlgebra& a = in.algebra;
  const AveragingOperator& t = in.op;
  const std::size_t g = a.dim();
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  const Representation rep = in.rep ? *in.rep : self_representation(a, t);
  rep.check_shape();
  if (rep.gdim() != g) throw InvalidInput("representation is over an algebra of another dimension");
  if (!rep.theta_m) throw InvalidInput("audited representation needs theta_M");
  const std::size_t m = rep.mdim;

  AuditReport report;
  auto& checks = report.checks;

  checks.push_back(from_report("leibniz-left", "", validate_leibniz(a, Convention::Left)));
  checks.push_back(from_report("leibniz-right", "", validate_leibniz(a, Convention::Right)));
  checks.push_back(from_report("averaging", "", validate_averaging(a, t)));
  const bool base_ok = checks[0].verdict == Verdict::Pass && checks[2].verdict == Verdict::Pass;

  checks.push_back(from_report("lift-symmetry", "", check_lift_symmetry(a, t)));

  bool rep_ok = base_ok;
  if (base_ok) {
    checks.push_back(from_report("representation", "", validate_representation(rep)));
    checks.push_back(from_report("averaging-representation", "", validate_averaging_representation(rep, t)));
    rep_ok = checks[checks.size() - 2].verdict == Verdict::Pass && checks.back().verdict == Verdict::Pass;
  } else {
    checks.push_back(skipped("representation", ""));
    checks.push_back(skipped("averaging-representation", ""));
  }
  checks.push_back(rep_ok ? from_report("induced-action-sign", "", check_induced_action_sign(rep, t))
                          : skipped("induced-action-sign", ""));

  std::vector<InducedMode> modes;
  if (in.mode) {
    modes.push_back(*in.mode);
  } else {
    modes = {InducedMode::Strict, InducedMode::Sum};
  }

  // Deformation-side matrices depend only on (a, θ); build once.
  std::optional<RatMatrix> eq1, left_middle, left_right, merged;
  if (base_ok) {
    eq1 = first_order_matrix(a, t, FirstOrderEquation::Eq1);
    left_middle = first_order_matrix(a, t, FirstOrderEquation::LeftMiddle);
    left_right = first_order_matrix(a, t, FirstOrderEquation::LeftRight);
    merged = first_order_matrix(a, t, FirstOrderEquation::Merged);
  }
  const Representation self = self_representation(a, t);

  for (InducedMode mode : modes) {
    const std::string ms = to_string(mode);
    if (base_ok) {
      const LeibnizAlgebra induced = induced_algebra(a, t, mode);
      checks.push_back(from_report("induced-leibniz", ms, validate_leibniz(induced, Convention::Left)));
      checks.push_back(from_report("induced-averaging", ms, validate_averaging(induced, t)));
      checks.push_back(from_report("theta-morphism", ms, check_morphism(a, induced, t, t, t.matrix()).report));
    } else {
      for (const char* name : {"induced-leibniz", "induced-averaging", "theta-morphism"}) checks.push_back(skipped(name, ms));
    }

    if (rep_ok) {
      const Representation induced = induced_representation(rep, t, mode);
      checks.push_back(from_report("induced-rep-valid", ms, validate_representation(induced)));
      checks.push_back(from_report("induced-rep-averaging", ms, validate_averaging_representation(induced, t)));
      for (std::size_t n = 0; n <= kAuditMaxDegree; ++n) {
        checks.push_back(matrix_check("chain-map", ms, n, n + 1, matrix_of(CochainOperator::ChainMapResidual, n, rep, t, mode), g, m));
      }
      for (std::size_t n = 0; n <= kAuditMaxDegree; ++n) {
        const RatMatrix square = matrix_of(CochainOperator::PartialAvg, n + 1, rep, t, mode) *
                                 matrix_of(CochainOperator::PartialAvg, n, rep, t, mode);
        checks.push_back(matrix_check("operator-differential-squares-zero", ms, n, n + 2, square, g, m));
      }
    } else {
      checks.push_back(skipped("induced-rep-valid", ms));
      checks.push_back(skipped("induced-rep-averaging", ms));
      for (std::size_t n = 0; n <= kAuditMaxDegree; ++n) checks.push_back(skipped("chain-map", ms, n));
      for (std::size_t n = 0; n <= kAuditMaxDegree; ++n) checks.push_back(skipped("operator-differential-squares-zero", ms, n));
    }

    if (base_ok) {
      const RatMatrix d2 = matrix_of(CochainOperator::Cone, 2, self, t, mode);
      const std::size_t split = cochain_dim(3, g, g);
      const RatMatrix operator_part = row_block(d2, split, d2.rows());
      const RatMatrix all_equations = RatMatrix::vstack(RatMatrix::vstack(*eq1, *left_middle), *left_right);
      checks.push_back(implication_check("infinitesimal-cocycle", ms, all_equations, d2, 0, g));
      checks.push_back(implication_check("cocycle-reading-merged", ms, *merged, operator_part, split, g));
      checks.push_back(implication_check("cocycle-reading-left-middle", ms, *left_middle, operator_part, split, g));
      checks.push_back(implication_check("cocycle-reading-left-right", ms, *left_right, operator_part, split, g));
    } else {
      for (const char* name : {"infinitesimal-cocycle", "cocycle-reading-merged", "cocycle-reading-left-middle",
                               "cocycle-reading-left-right"}) {
        checks.push_back(skipped(name, ms));
      }
    }
  }
  return report;
}

}  // namespace avla
