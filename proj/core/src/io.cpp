#include "avla/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "avla/errors.hpp"
#include "json.hpp"

namespace avla {

namespace {

using nlohmann::json;

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t index) { return path + "[" + std::to_string(index) + "]"; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number for the diagnostic.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line), "malformed JSON");
  }
}

void require_object(const json& j, const std::string& path, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw ParseError(at(path, k), "missing field");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw ParseError(at(path, item.key()), "unknown field");
  }
}

std::size_t read_count(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw ParseError(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_float()) throw ParseError(path, "floats are not accepted; write the value as a string such as \"1/3\"");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    return Rational::parse(std::to_string(v));
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError(path, "expected a rational string or integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(path, std::string("bad rational: ") + e.what());
  }
}

// 1-based index in 1..bound, returned 0-based.
std::size_t read_index(const json& j, const std::string& path, std::size_t bound) {
  const std::size_t v = read_count(j, path);
  if (v < 1 || v > bound) {
    throw ParseError(path, "index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  }
  return v - 1;
}

std::size_t read_dimension(const json& j, const std::string& path, std::size_t max) {
  const std::size_t v = read_count(j, path);
  if (v < 1 || v > max) throw ParseError(path, "dimension must lie in 1.." + std::to_string(max));
  return v;
}

RatMatrix read_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path, "expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.empty()) throw ParseError(at(path, r), "expected a non-empty row");
    if (r == 0) cols = row.size();
    if (row.size() != cols) throw ParseError(at(path, r), "rows have unequal lengths");
  }
  RatMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = read_rational(j[r][c], at(at(path, r), c));
  return out;
}

RatMatrix read_square(const json& j, const std::string& path, std::size_t dim) {
  RatMatrix m = read_matrix(j, path);
  if (m.rows() != dim || m.cols() != dim) {
    throw ParseError(path, "expected a " + std::to_string(dim) + " x " + std::to_string(dim) + " matrix");
  }
  return m;
}

struct Triple {
  std::size_t i, j, k;
  Rational c;
};

// Sparse triples; repeated (i, j, k) entries are summed.
std::vector<Triple> read_triples(const json& j, const std::string& path, std::size_t bi, std::size_t bj,
                                 std::size_t bk) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  std::vector<Triple> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const std::string p = at(path, n);
    require_object(j[n], p, {"i", "j", "k", "c"});
    out.push_back({read_index(j[n]["i"], at(p, "i"), bi), read_index(j[n]["j"], at(p, "j"), bj),
                   read_index(j[n]["k"], at(p, "k"), bk), read_rational(j[n]["c"], at(p, "c"))});
  }
  return out;
}

json rational_json(const Rational& r) { return r.str(); }

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json triple(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  json t = json::object();
  t["i"] = i + 1;
  t["j"] = j + 1;
  t["k"] = k + 1;
  t["c"] = rational_json(c);
  return t;
}

json bilinear_to_json(const MultilinearMap& mu) {
  const std::size_t g = mu.gdim;
  json out = json::array();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k)
        if (const Rational& c = mu.coeffs[(i * g + j) * g + k]; !c.is_zero()) out.push_back(triple(i, j, k, c));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

AlgebraFixture parse_algebra(std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "", {"dimension", "brackets"}, {"convention"});
  const std::size_t g = read_dimension(j["dimension"], "dimension", kMaxFileDimension);
  AlgebraFixture out;
  out.algebra = LeibnizAlgebra::zero(g);
  for (const Triple& t : read_triples(j["brackets"], "brackets", g, g, g)) out.algebra(t.i, t.j, t.k) += t.c;
  if (j.contains("convention")) {
    const json& c = j["convention"];
    if (c == "left") {
      out.convention = Convention::Left;
    } else if (c == "right") {
      out.convention = Convention::Right;
    } else {
      throw ParseError("convention", "expected \"left\" or \"right\"");
    }
  }
  return out;
}

AveragingOperator parse_operator(std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "", {"matrix"});
  RatMatrix m = read_matrix(j["matrix"], "matrix");
  if (!m.is_square()) throw ParseError("matrix", "operator matrix must be square");
  if (m.rows() > kMaxFileDimension) throw ParseError("matrix", "dimension must lie in 1.." + std::to_string(kMaxFileDimension));
  return AveragingOperator(std::move(m));
}

Representation parse_representation(std::string_view text, const LeibnizAlgebra& algebra) {
  const json j = parse_json(text);
  require_object(j, "", {"mdim", "l", "r"}, {"thetaM"});
  const std::size_t g = algebra.dim();
  const std::size_t m = read_dimension(j["mdim"], "mdim", kMaxModuleDimension);
  Representation rep;
  rep.algebra = algebra;
  rep.mdim = m;
  rep.left.assign(g, RatMatrix(m, m));
  rep.right.assign(g, RatMatrix(m, m));
  for (const Triple& t : read_triples(j["l"], "l", g, m, m)) rep.left[t.i](t.k, t.j) += t.c;
  for (const Triple& t : read_triples(j["r"], "r", m, g, m)) rep.right[t.j](t.k, t.i) += t.c;
  if (j.contains("thetaM")) rep.theta_m = read_square(j["thetaM"], "thetaM", m);
  return rep;
}

TruncatedDeformation parse_deformation(std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "", {"order", "mu", "theta"});
  TruncatedDeformation d;
  d.order = read_count(j["order"], "order");
  const json& mu = j["mu"];
  const json& theta = j["theta"];
  if (!theta.is_array() || theta.size() != d.order + 1) {
    throw ParseError("theta", "expected a list of order+1 = " + std::to_string(d.order + 1) + " matrices");
  }
  if (!mu.is_array() || mu.size() != d.order + 1) {
    throw ParseError("mu", "expected a list of order+1 = " + std::to_string(d.order + 1) + " bracket lists");
  }
  const RatMatrix first = read_matrix(theta[0], "theta[0]");
  const std::size_t g = first.rows();
  if (!first.is_square() || g > kMaxFileDimension) {
    throw ParseError("theta[0]", "expected a square matrix of size at most " + std::to_string(kMaxFileDimension));
  }
  for (std::size_t n = 0; n <= d.order; ++n) {
    d.theta.push_back(read_square(theta[n], at("theta", n), g));
    MultilinearMap coeff = MultilinearMap::zero(2, g, g);
    for (const Triple& t : read_triples(mu[n], at("mu", n), g, g, g)) coeff.coeffs[(t.i * g + t.j) * g + t.k] += t.c;
    d.mu.push_back(std::move(coeff));
  }
  return d;
}

FormalIsomorphism parse_isomorphism(std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "", {"order", "psi"});
  FormalIsomorphism p;
  p.order = read_count(j["order"], "order");
  const json& psi = j["psi"];
  if (!psi.is_array() || psi.size() != p.order + 1) {
    throw ParseError("psi", "expected a list of order+1 = " + std::to_string(p.order + 1) + " matrices");
  }
  const RatMatrix first = read_matrix(psi[0], "psi[0]");
  if (!first.is_square() || first.rows() > kMaxFileDimension) {
    throw ParseError("psi[0]", "expected a square matrix of size at most " + std::to_string(kMaxFileDimension));
  }
  for (std::size_t n = 0; n <= p.order; ++n) p.psi.push_back(read_square(psi[n], at("psi", n), first.rows()));
  if (p.psi[0] != RatMatrix::identity(first.rows())) throw ParseError("psi[0]", "must be the identity matrix");
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string serialize(const AlgebraFixture& a) {
  const std::size_t g = a.algebra.dim();
  json j = json::object();
  j["dimension"] = g;
  json brackets = json::array();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t jj = 0; jj < g; ++jj)
      for (std::size_t k = 0; k < g; ++k)
        if (const Rational& c = a.algebra(i, jj, k); !c.is_zero()) brackets.push_back(triple(i, jj, k, c));
  j["brackets"] = std::move(brackets);
  j["convention"] = to_string(a.convention);
  return dump(j);
}

std::string serialize(const AveragingOperator& t) {
  json j = json::object();
  j["matrix"] = matrix_to_json(t.matrix());
  return dump(j);
}

std::string serialize(const Representation& rep) {
  const std::size_t g = rep.gdim(), m = rep.mdim;
  json j = json::object();
  j["mdim"] = m;
  json l = json::array(), r = json::array();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t k = 0; k < m; ++k)
        if (const Rational& c = rep.left[i](k, a); !c.is_zero()) l.push_back(triple(i, a, k, c));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t k = 0; k < m; ++k)
        if (const Rational& c = rep.right[i](k, a); !c.is_zero()) r.push_back(triple(a, i, k, c));
  j["l"] = std::move(l);
  j["r"] = std::move(r);
  if (rep.theta_m) j["thetaM"] = matrix_to_json(*rep.theta_m);
  return dump(j);
}

std::string serialize(const TruncatedDeformation& d) {
  json j = json::object();
  j["order"] = d.order;
  json mu = json::array(), theta = json::array();
  for (const auto& m : d.mu) mu.push_back(bilinear_to_json(m));
  for (const auto& t : d.theta) theta.push_back(matrix_to_json(t));
  j["mu"] = std::move(mu);
  j["theta"] = std::move(theta);
  return dump(j);
}

std::string serialize(const FormalIsomorphism& p) {
  json j = json::object();
  j["order"] = p.order;
  json psi = json::array();
  for (const auto& m : p.psi) psi.push_back(matrix_to_json(m));
  j["psi"] = std::move(psi);
  return dump(j);
}

std::string matrix_json(const RatMatrix& m) { return matrix_to_json(m).dump(); }

}  // namespace avla
