#pragma once

#include <string>
#include <string_view>

#include "avla/deformation.hpp"

namespace avla {

/// Largest algebra dimension accepted from files.
inline constexpr std::size_t kMaxFileDimension = 6;
/// Largest module dimension accepted from representation files.
inline constexpr std::size_t kMaxModuleDimension = 64;

struct AlgebraFixture {
  LeibnizAlgebra algebra;
  Convention convention = Convention::Left;

  friend bool operator==(const AlgebraFixture&, const AlgebraFixture&) = default;
};

// Parsers accept the JSON text of a fixture and throw ParseError naming the
// offending field. Indices in files are 1-based; rationals are strings such
// as "-3/4" or JSON integers. Floats and unknown keys are rejected.

/// {"dimension": g, "brackets": [{"i","j","k","c"}...], "convention"?: "left"|"right"}
AlgebraFixture parse_algebra(std::string_view text);
/// {"matrix": [[...]...]}, square.
AveragingOperator parse_operator(std::string_view text);
/// {"mdim": m, "l": [...], "r": [...], "thetaM"?: [[...]...]}.
/// An l entry {i, j, k, c} means l(e_i, a_j) has coefficient c on a_k;
/// an r entry means r(a_i, e_j) has coefficient c on a_k.
Representation parse_representation(std::string_view text, const LeibnizAlgebra& algebra);
/// {"order": N, "mu": [[triples]...], "theta": [matrix...]}; the dimension
/// is read from the theta matrices.
TruncatedDeformation parse_deformation(std::string_view text);
/// {"order": N, "psi": [matrix...]}.
FormalIsomorphism parse_isomorphism(std::string_view text);

/// Whole file contents; throws ParseError when unreadable.
std::string read_file(const std::string& path);

std::string serialize(const AlgebraFixture& a);
std::string serialize(const AveragingOperator& t);
std::string serialize(const Representation& rep);
std::string serialize(const TruncatedDeformation& d);
std::string serialize(const FormalIsomorphism& p);

/// Nested JSON array of rational strings.
std::string matrix_json(const RatMatrix& m);

}  // namespace avla
