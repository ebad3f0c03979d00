#pragma once

#include <string>
#include <variant>

#include "univalg/lie.hpp"
#include "univalg/report.hpp"
#include "univalg/representations.hpp"

namespace univalg::io {

// All formats are JSON with rationals as strings "p/q" (integers are also
// accepted as JSON numbers). Indices in files are 1-based.
//
// Malformed text or a wrong field type throws ParseError; well-formed input
// with out-of-range or duplicate entries throws ValidationError. Mathematical
// axioms are not checked here.

/// {"name", "dim", "brackets": [{"i", "j", "terms": [[s, "c"], ...]}]}
/// meaning [b_i, b_j] = sum c b_s. A pair (j, i) that is not listed is filled
/// in as -[b_i, b_j].
LieAlgebraPtr parse_algebra(const std::string& text, const std::string& source = "<input>");
std::string render_algebra(const LieAlgebra& L);

/// {"kind": "lie", "over", "name", "dim", "action": [{"i", "j", "terms"}]}
/// with b_i . u_j = sum c u_s.
LieModule parse_lie_module(const std::string& text, const LieAlgebraPtr& over, const std::string& source = "<input>");
std::string render_lie_module(const LieModule& M);

/// {"kind": "assoc-matrix", "over": [h, g], "name", "dim",
///  "action": [{"var": [s, i], "j", "terms"}]} with x_si . v_j = sum c v_r.
MatrixARep parse_arep(const std::string& text, const UniversalAlgebraPtr& over, const std::string& source = "<input>");
std::string render_arep(const MatrixARep& X);

/// "lie" or "assoc-matrix".
std::string module_kind(const std::string& text, const std::string& source = "<input>");

/// {"rows", "cols", "entries": [[row...], ...]}
Matrix parse_matrix(const std::string& text, const std::string& source = "<input>");
std::string render_matrix(const Matrix& m);

/// {"title", "status", "items": [{"check", "location", "witness", "ok"}]}
Report parse_report(const std::string& text, const std::string& source = "<input>");
std::string render_report(const Report& r);

/// Reads a whole file; ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace univalg::io
