#include "avla/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "avla/audit.hpp"
#include "avla/errors.hpp"
#include "avla/io.hpp"
#include "avla/linalg.hpp"
#include "avla/search.hpp"
#include "json.hpp"

namespace avla {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string algebra, op, rep, deformation, deformation2, isomorphism;
  std::string mode = "strict";
  std::string convention;
  std::string cochain_op = "delta";
  std::string complex = "la";
  std::string values;
  std::size_t matrix_deg = 0;
  std::size_t cohomology_deg = 2;
  bool json = false;
};

// Everything a command needs to write its report.
struct Io {
  std::ostream& out;
  bool json;
};

InducedMode parse_mode(const std::string& s) { return s == "sum" ? InducedMode::Sum : InducedMode::Strict; }

ojson tuple_json(std::span<const std::size_t> t) {
  ojson a = ojson::array();
  for (std::size_t i : t) a.push_back(i + 1);
  return a;
}

ojson vector_json(std::span<const Rational> v) {
  ojson a = ojson::array();
  for (const Rational& r : v) a.push_back(r.str());
  return a;
}

ojson matrix_ojson(const RatMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r)));
  return rows;
}

std::string tuple_text(std::span<const std::size_t> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
  return s + ")";
}

ojson report_json(const std::string& title, const ValidationReport& r) {
  ojson j;
  j["check"] = title;
  j["passed"] = r.passed();
  j["failures"] = r.failure_count;
  ojson ws = ojson::array();
  for (const Witness& w : r.witnesses) {
    ojson x;
    if (w.order >= 0) x["order"] = w.order;
    x["tuple"] = tuple_json(w.tuple);
    x["tag"] = w.tag;
    x["residual"] = vector_json(w.residual);
    ws.push_back(std::move(x));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

void report_text(std::ostream& out, const std::string& title, const ValidationReport& r) {
  if (r.passed()) {
    out << title << ": PASS\n";
    return;
  }
  out << title << ": FAIL (" << r.failure_count << " failing)\n";
  for (const Witness& w : r.witnesses) {
    out << "  witness ";
    if (w.order >= 0) out << "n=" << w.order << " ";
    out << tuple_text(w.tuple);
    if (!w.tag.empty()) out << " [" << w.tag << "]";
    out << " residual " << to_string(w.residual) << "\n";
  }
  if (r.failure_count > r.witnesses.size()) out << "  ... " << r.failure_count - r.witnesses.size() << " more\n";
}

// Writes one or more named reports; the exit code is 1 if any failed.
int emit_reports(const Io& io, const std::vector<std::pair<std::string, ValidationReport>>& reports) {
  bool passed = true;
  for (const auto& [title, r] : reports) passed = passed && r.passed();
  if (io.json) {
    ojson root;
    root["passed"] = passed;
    ojson list = ojson::array();
    for (const auto& [title, r] : reports) list.push_back(report_json(title, r));
    root["reports"] = std::move(list);
    io.out << root.dump(2) << "\n";
  } else {
    for (const auto& [title, r] : reports) report_text(io.out, title, r);
  }
  return passed ? kExitPass : kExitFail;
}

AlgebraFixture load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }
AveragingOperator load_operator(const std::string& path) { return parse_operator(read_file(path)); }

void require_dim(const AveragingOperator& t, const LeibnizAlgebra& a) {
  if (t.dim() != a.dim()) throw InvalidInput("operator dimension " + std::to_string(t.dim()) +
                                             " does not match algebra dimension " + std::to_string(a.dim()));
}

// Representation from --rep, or the self-representation with θ_M = θ.
Representation load_rep(const Options& o, const LeibnizAlgebra& a, const std::optional<AveragingOperator>& t) {
  if (!o.rep.empty()) return parse_representation(read_file(o.rep), a);
  return self_representation(a, t);
}

struct Base {
  LeibnizAlgebra algebra;
  AveragingOperator op;
};

Base load_base(const Options& o) {
  Base b{load_algebra(o.algebra).algebra, load_operator(o.op)};
  require_dim(b.op, b.algebra);
  return b;
}

TruncatedDeformation load_deformation(const std::string& path, const Base& b) {
  TruncatedDeformation d = parse_deformation(read_file(path));
  check_base(d, b.algebra, b.op);
  return d;
}

int cmd_validate(const Options& o, const Io& io) {
  const AlgebraFixture a = load_algebra(o.algebra);
  const Convention conv = o.convention.empty() ? a.convention
                                               : (o.convention == "right" ? Convention::Right : Convention::Left);
  return emit_reports(io, {{std::string("leibniz (") + to_string(conv) + ")", validate_leibniz(a.algebra, conv)}});
}

int cmd_validate_operator(const Options& o, const Io& io) {
  const Base b = load_base(o);
  return emit_reports(io, {{"averaging", validate_averaging(b.algebra, b.op)}});
}

int cmd_validate_rep(const Options& o, const Io& io) {
  const LeibnizAlgebra a = load_algebra(o.algebra).algebra;
  const Representation rep = parse_representation(read_file(o.rep), a);
  std::vector<std::pair<std::string, ValidationReport>> reports{{"representation", validate_representation(rep)}};
  if (!o.op.empty()) {
    const AveragingOperator t = load_operator(o.op);
    require_dim(t, a);
    reports.emplace_back("averaging-representation", validate_averaging_representation(rep, t));
  }
  return emit_reports(io, reports);
}

int cmd_induce(const Options& o, const Io& io) {
  const Base b = load_base(o);
  const InducedMode mode = parse_mode(o.mode);
  if (o.rep.empty()) {
    io.out << serialize(AlgebraFixture{induced_algebra(b.algebra, b.op, mode), Convention::Left});
  } else {
    const Representation rep = parse_representation(read_file(o.rep), b.algebra);
    io.out << serialize(induced_representation(rep, b.op, mode));
  }
  return kExitPass;
}

CochainOperator parse_cochain_op(const std::string& s) {
  if (s == "partial") return CochainOperator::PartialAvg;
  if (s == "phi") return CochainOperator::Phi;
  if (s == "cone") return CochainOperator::Cone;
  return CochainOperator::Delta;
}

int cmd_matrix(const Options& o, const Io& io) {
  const LeibnizAlgebra a = load_algebra(o.algebra).algebra;
  std::optional<AveragingOperator> t;
  if (!o.op.empty()) {
    t = load_operator(o.op);
    require_dim(*t, a);
  }
  const CochainOperator op = parse_cochain_op(o.cochain_op);
  if (op != CochainOperator::Delta && !t) throw InvalidInput(std::string("operator '") + to_string(op) + "' needs an operator file");
  const Representation rep = load_rep(o, a, t);
  const InducedMode mode = parse_mode(o.mode);
  const RatMatrix m = matrix_of(op, o.matrix_deg, rep, t, mode);
  if (io.json) {
    ojson j;
    j["operator"] = to_string(op);
    j["degree"] = o.matrix_deg;
    j["mode"] = to_string(mode);
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["matrix"] = matrix_ojson(m);
    io.out << j.dump(2) << "\n";
  } else {
    io.out << to_string(op) << " out of degree " << o.matrix_deg << " (" << to_string(mode) << "): " << m.rows() << " x "
           << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) io.out << to_string(m.row(r)) << "\n";
  }
  return kExitPass;
}

ComplexKind parse_complex(const std::string& s) {
  if (s == "alo") return ComplexKind::ALO;
  if (s == "al") return ComplexKind::AL;
  return ComplexKind::LA;
}

int cmd_cohomology(const Options& o, const Io& io) {
  const LeibnizAlgebra a = load_algebra(o.algebra).algebra;
  ComplexSpec spec;
  spec.kind = parse_complex(o.complex);
  spec.mode = parse_mode(o.mode);
  if (!o.op.empty()) {
    spec.op = load_operator(o.op);
    require_dim(*spec.op, a);
  }
  if (o.cohomology_deg + 1 > kMaxCochainDegree) {
    throw InvalidInput("--deg must be at most " + std::to_string(kMaxCochainDegree - 1));
  }
  spec.max_degree = o.cohomology_deg + 1;
  spec.rep = load_rep(o, a, spec.op);
  const CohomologyReport report = cohomology_report(spec);
  const DegreeRow& target = report.degrees.at(o.cohomology_deg);

  if (io.json) {
    ojson j;
    j["complex"] = to_string(spec.kind);
    j["mode"] = to_string(spec.mode);
    ojson rows = ojson::array();
    for (const DegreeRow& r : report.degrees) {
      ojson x;
      x["degree"] = r.degree;
      x["cochain_dim"] = r.cochain_dim;
      x["rank"] = r.rank;
      x["kernel_dim"] = r.kernel_dim;
      x["betti"] = r.betti ? ojson(*r.betti) : ojson(nullptr);
      rows.push_back(std::move(x));
    }
    j["degrees"] = std::move(rows);
    ojson validity = ojson::array();
    for (const DefectEntry& e : report.validity) {
      ojson x;
      x["degree"] = e.degree;
      x["is_zero"] = e.is_zero;
      x["defect_rank"] = e.defect_rank;
      validity.push_back(std::move(x));
    }
    j["validity"] = std::move(validity);
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "complex " << to_string(spec.kind) << " (" << to_string(spec.mode) << "), degrees 0.." << o.cohomology_deg << "\n";
    io.out << "n  dim C^n  rank d^n  dim ker d^n  dim H^n\n";
    for (const DegreeRow& r : report.degrees) {
      io.out << r.degree << "  " << r.cochain_dim << "  " << r.rank << "  " << r.kernel_dim << "  "
             << (r.betti ? std::to_string(*r.betti) : std::string("refused")) << "\n";
    }
    for (const DefectEntry& e : report.validity) {
      io.out << "d^" << e.degree + 1 << " d^" << e.degree << ": "
             << (e.is_zero ? std::string("zero") : "nonzero, rank " + std::to_string(e.defect_rank)) << "\n";
    }
    if (target.betti) {
      io.out << "dim H^" << o.cohomology_deg << " = " << *target.betti << "\n";
    } else {
      io.out << "dim H^" << o.cohomology_deg << " refused: the complex fails d^2 = 0 next to this degree\n";
    }
  }
  return target.betti ? kExitPass : kExitComplexInvalid;
}

int cmd_check_deformation(const Options& o, const Io& io) {
  const Base b = load_base(o);
  const TruncatedDeformation d = load_deformation(o.deformation, b);
  return emit_reports(io, {{"deformation order " + std::to_string(d.order), check_deformation_order(d)}});
}

int cmd_check_cocycle(const Options& o, const Io& io) {
  const Base b = load_base(o);
  const TruncatedDeformation d = load_deformation(o.deformation, b);
  if (d.order < 1) throw InvalidInput("check-cocycle needs a deformation of order at least 1");
  const CocycleReport r = check_cocycle(b.algebra, b.op, d.mu[1], d.theta[1], parse_mode(o.mode));
  return emit_reports(io, {{std::string("cocycle (") + o.mode + ")", r.report}});
}

int cmd_check_equivalence(const Options& o, const Io& io) {
  const Base b = load_base(o);
  const TruncatedDeformation d = load_deformation(o.deformation, b);
  const TruncatedDeformation d2 = load_deformation(o.deformation2, b);
  const FormalIsomorphism p = parse_isomorphism(read_file(o.isomorphism));
  return emit_reports(io, {{"equivalence", check_equivalence(d, d2, p)}});
}

int cmd_find_trivializer(const Options& o, const Io& io) {
  const Base b = load_base(o);
  const TruncatedDeformation d = load_deformation(o.deformation, b);
  if (d.order < 1) throw InvalidInput("find-trivializer needs a deformation of order at least 1");
  const auto x = find_trivializer(b.algebra, b.op, d.mu[1], d.theta[1], parse_mode(o.mode));
  if (io.json) {
    ojson j;
    j["coboundary"] = x.has_value();
    j["psi1"] = x ? matrix_ojson(x->psi1) : ojson(nullptr);
    j["u"] = x ? vector_json(x->u) : ojson(nullptr);
    io.out << j.dump(2) << "\n";
  } else if (x) {
    io.out << "coboundary: d^1(psi1, u) = (mu1, theta1)\npsi1 = " << x->psi1.str() << "\nu = " << to_string(x->u)
           << "\n";
  } else {
    io.out << "not a coboundary: (mu1, theta1) is outside the image of d^1\n";
  }
  return x ? kExitPass : kExitFail;
}

int cmd_rigidity(const Options& o, const Io& io) {
  const Base b = load_base(o);
  const InducedMode mode = parse_mode(o.mode);
  const RigidityVerdict v = rigidity_report(b.algebra, b.op, mode);
  if (io.json) {
    ojson j;
    j["mode"] = to_string(mode);
    j["verdict"] = to_string(v.kind);
    j["h2"] = v.kind == RigidityVerdict::Kind::ComplexInvalid ? ojson(nullptr) : ojson(v.h2);
    if (v.defect) j["defect"] = {{"degree", v.defect->degree}, {"defect_rank", v.defect->defect_rank}};
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "rigidity (" << to_string(mode) << "): " << to_string(v.kind);
    if (v.defect) {
      io.out << ", d^" << v.defect->degree + 1 << " d^" << v.defect->degree << " has rank " << v.defect->defect_rank;
    } else {
      io.out << ", dim H^2_AL = " << v.h2;
    }
    io.out << "\n";
  }
  switch (v.kind) {
    case RigidityVerdict::Kind::Rigid: return kExitPass;
    case RigidityVerdict::Kind::Inconclusive: return kExitFail;
    case RigidityVerdict::Kind::ComplexInvalid: return kExitComplexInvalid;
  }
  return kExitFail;
}

std::vector<Rational> parse_values(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw InvalidInput("--values: '" + item + "' is not a rational");
    }
  }
  return out;
}

int cmd_search(const Options& o, const Io& io) {
  const LeibnizAlgebra a = load_algebra(o.algebra).algebra;
  const std::vector<AveragingOperator> found = search_averaging_diagonal(a, parse_values(o.values));
  if (io.json) {
    ojson list = ojson::array();
    for (const AveragingOperator& t : found) {
      ojson diag = ojson::array();
      for (std::size_t i = 0; i < t.dim(); ++i) diag.push_back(t.matrix()(i, i).str());
      list.push_back(std::move(diag));
    }
    ojson j;
    j["count"] = found.size();
    j["diagonals"] = std::move(list);
    io.out << j.dump(2) << "\n";
  } else {
    for (const AveragingOperator& t : found) {
      io.out << "diag(";
      for (std::size_t i = 0; i < t.dim(); ++i) io.out << (i ? ", " : "") << t.matrix()(i, i);
      io.out << ")\n";
    }
    io.out << found.size() << " averaging diagonal operator(s)\n";
  }
  return kExitPass;
}

int cmd_audit(const Options& o, const Io& io) {
  AuditInput in;
  const Base b = load_base(o);
  in.algebra = b.algebra;
  in.op = b.op;
  if (!o.rep.empty()) in.rep = parse_representation(read_file(o.rep), in.algebra);
  if (!o.mode.empty()) in.mode = parse_mode(o.mode);
  const AuditReport report = audit(in);
  io.out << (io.json ? report.json() : report.text());
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for averaging Leibniz algebras", "avla"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, const Io&)> handler;

  const auto modes = CLI::IsMember({"strict", "sum"});
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, const Io&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_flag("--json", o.json, "Machine-readable report");
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };
  auto add_mode = [&](CLI::App* s) {
    return s->add_option("--mode", o.mode, "Induced structure: strict or sum")->check(modes)->capture_default_str();
  };

  CLI::App* s = sub("validate", "Check the Leibniz identity", cmd_validate);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("--convention", o.convention, "left or right (default: the file's, else left)")
      ->check(CLI::IsMember({"left", "right"}));

  s = sub("validate-operator", "Check the averaging identities", cmd_validate_operator);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("operator", o.op, "Operator file")->required();

  s = sub("validate-rep", "Check a representation, and its averaging compatibility when an operator is given",
          cmd_validate_rep);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("representation", o.rep, "Representation file")->required();
  s->add_option("operator", o.op, "Operator file");

  s = sub("induce", "Print the induced algebra, or the induced representation with --rep", cmd_induce);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("operator", o.op, "Operator file")->required();
  s->add_option("--rep", o.rep, "Representation file");
  add_mode(s);

  s = sub("matrix", "Print the coordinate matrix of a cochain operator", cmd_matrix);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("operator", o.op, "Operator file");
  s->add_option("--op", o.cochain_op, "delta, partial, phi or cone")
      ->check(CLI::IsMember({"delta", "partial", "phi", "cone"}))
      ->capture_default_str();
  s->add_option("--deg", o.matrix_deg, "Source degree")->check(CLI::Range(std::size_t{0}, kMaxCochainDegree))->capture_default_str();
  s->add_option("--rep", o.rep, "Representation file (default: self-representation)");
  add_mode(s);

  s = sub("cohomology", "Cohomology dimensions up to --deg", cmd_cohomology);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("operator", o.op, "Operator file");
  s->add_option("--complex", o.complex, "la, alo or al")->check(CLI::IsMember({"la", "alo", "al"}))->capture_default_str();
  s->add_option("--deg", o.cohomology_deg, "Highest degree reported")->capture_default_str();
  s->add_option("--rep", o.rep, "Representation file (default: self-representation)");
  add_mode(s);

  for (auto [name, help, fn] : std::initializer_list<std::tuple<const char*, const char*, int (*)(const Options&, const Io&)>>{
           {"check-cocycle", "Whether (mu1, theta1) of a deformation is a 2-cocycle", cmd_check_cocycle},
           {"check-deformation", "Check the deformation equations order by order", cmd_check_deformation},
           {"find-trivializer", "Solve d^1(psi1, u) = (mu1, theta1)", cmd_find_trivializer}}) {
    s = sub(name, help, fn);
    s->add_option("algebra", o.algebra, "Algebra file")->required();
    s->add_option("operator", o.op, "Operator file")->required();
    s->add_option("deformation", o.deformation, "Deformation file")->required();
    add_mode(s);
  }

  s = sub("check-equivalence", "Check that a formal isomorphism relates two deformations", cmd_check_equivalence);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("operator", o.op, "Operator file")->required();
  s->add_option("deformation", o.deformation, "Deformation file")->required();
  s->add_option("deformation2", o.deformation2, "Deformation file of the source side")->required();
  s->add_option("isomorphism", o.isomorphism, "Isomorphism file")->required();

  s = sub("rigidity", "Rigidity verdict from the cone complex", cmd_rigidity);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("operator", o.op, "Operator file")->required();
  add_mode(s);

  s = sub("search-averaging-diagonal", "Enumerate diagonal averaging operators", cmd_search);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("--values", o.values, "Comma-separated candidate entries, e.g. \"0,1/2,1\"")->required();

  s = sub("audit", "Re-examine every claim on the given inputs", cmd_audit);
  s->add_option("algebra", o.algebra, "Algebra file")->required();
  s->add_option("operator", o.op, "Operator file")->required();
  s->add_option("--rep", o.rep, "Representation file (default: self-representation)");
  CLI::Option* audit_mode = s->add_option("--mode", o.mode, "Run a single mode (default: both)")->check(modes);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }
  if (app.got_subcommand("audit") && audit_mode->count() == 0) o.mode.clear();

  try {
    return handler(o, Io{out, o.json});
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInvalidInput;
}

}  // namespace avla
