#include "univalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "univalg/errors.hpp"

namespace univalg::io {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

json load(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError(source + ":" + std::to_string(line) + ": " + e.what());
  }
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void syntax(const std::string& where, const std::string& what) const {
    throw ParseError(source_ + ": " + where + ": " + what);
  }
  [[noreturn]] void invalid(const std::string& where, const std::string& what) const {
    throw ValidationError(source_ + ": " + where + ": " + what);
  }

  const json& field(const json& j, const char* key, const std::string& where) const {
    if (!j.is_object()) syntax(where, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) syntax(where, std::string("missing field '") + key + "'");
    return *it;
  }
  const json& array(const json& j, const std::string& where) const {
    if (!j.is_array()) syntax(where, "expected an array");
    return j;
  }
  std::string string(const json& j, const std::string& where) const {
    if (!j.is_string()) syntax(where, "expected a string");
    return j.get<std::string>();
  }
  std::size_t count(const json& j, const std::string& where) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) syntax(where, "expected a non-negative integer");
    return j.get<std::size_t>();
  }
  // 1-based index in 1..bound, returned 0-based.
  std::size_t index(const json& j, std::size_t bound, const std::string& where) const {
    if (!j.is_number_integer()) syntax(where, "expected an integer index");
    const long long v = j.get<long long>();
    if (v < 1 || static_cast<unsigned long long>(v) > bound)
      invalid(where, "index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
    return static_cast<std::size_t>(v - 1);
  }
  Rational rational(const json& j, const std::string& where) const {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) syntax(where, "floating point values are not allowed");
    try {
      return Rational::parse(string(j, where));
    } catch (const ParseError& e) {
      syntax(where, e.what());
    }
  }
  // [[s, "c"], ...] into column `col` of m; rejects a repeated s. Returns the
  // indices listed.
  std::set<std::size_t> terms(const json& j, Matrix& m, std::size_t col, const std::string& where) const {
    std::set<std::size_t> seen;
    const json& arr = array(j, where);
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string at = where + "[" + std::to_string(k) + "]";
      if (!arr[k].is_array() || arr[k].size() != 2) syntax(at, "expected a pair [index, coefficient]");
      const std::size_t s = index(arr[k][0], m.rows(), at);
      if (!seen.insert(s).second) invalid(at, "duplicate coefficient for index " + std::to_string(s + 1));
      m(s, col) = rational(arr[k][1], at);
    }
    return seen;
  }
  std::string optional_string(const json& j, const char* key, const std::string& where) const {
    if (!j.contains(key)) return {};
    return string(j[key], where + "." + key);
  }

 private:
  std::string source_;
};

ojson render_terms(const Matrix& m, std::size_t col) {
  ojson out = ojson::array();
  for (std::size_t s = 0; s < m.rows(); ++s)
    if (!m(s, col).is_zero()) out.push_back(ojson::array({s + 1, m(s, col).to_string()}));
  return out;
}

bool column_zero(const Matrix& m, std::size_t col) {
  for (std::size_t s = 0; s < m.rows(); ++s)
    if (!m(s, col).is_zero()) return false;
  return true;
}

void check_kind(const Reader& rd, const json& j, const std::string& expected) {
  const std::string kind = rd.string(rd.field(j, "kind", "module"), "module.kind");
  if (kind != expected) rd.invalid("module.kind", "expected '" + expected + "', found '" + kind + "'");
}

}  // namespace

LieAlgebraPtr parse_algebra(const std::string& text, const std::string& source) {
  const Reader rd(source);
  const json j = load(text, source);
  const std::string name = rd.string(rd.field(j, "name", "algebra"), "algebra.name");
  const std::size_t dim = rd.count(rd.field(j, "dim", "algebra"), "algebra.dim");
  const json& brackets = rd.array(rd.field(j, "brackets", "algebra"), "algebra.brackets");
  // Column i*dim + j holds [b_i, b_j].
  Matrix table(dim, dim * dim);
  std::vector<bool> given(dim * dim, false);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> listed;
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    const std::string at = "brackets[" + std::to_string(k) + "]";
    const std::size_t i = rd.index(rd.field(brackets[k], "i", at), dim, at + ".i");
    const std::size_t jj = rd.index(rd.field(brackets[k], "j", at), dim, at + ".j");
    Matrix entry(dim, 1);
    const std::size_t col = i * dim + jj;
    for (const std::size_t s : rd.terms(rd.field(brackets[k], "terms", at), entry, 0, at + ".terms")) {
      if (!listed.insert({i, jj, s}).second)
        rd.invalid(at, "duplicate entry (" + std::to_string(i + 1) + ", " + std::to_string(jj + 1) + ", " +
                           std::to_string(s + 1) + ")");
      table(s, col) = entry(s, 0);
    }
    given[col] = true;
  }
  StructureTable c(dim, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t jj = 0; jj < dim; ++jj)
      for (std::size_t s = 0; s < dim; ++s)
        c.at(i, jj, s) = given[i * dim + jj] ? table(s, i * dim + jj) : -table(s, jj * dim + i);
  return std::make_shared<const LieAlgebra>(name, std::move(c));
}

std::string render_algebra(const LieAlgebra& L) {
  const std::size_t dim = L.dim();
  ojson out;
  out["name"] = L.name();
  out["dim"] = dim;
  out["brackets"] = ojson::array();
  auto emit = [&](std::size_t i, std::size_t j) {
    ojson terms = ojson::array();
    for (std::size_t s = 0; s < dim; ++s)
      if (!L.constant(i, j, s).is_zero()) terms.push_back(ojson::array({s + 1, L.constant(i, j, s).to_string()}));
    ojson e;
    e["i"] = i + 1;
    e["j"] = j + 1;
    e["terms"] = std::move(terms);
    out["brackets"].push_back(std::move(e));
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      bool upper = false, mirrored = true;
      for (std::size_t s = 0; s < dim; ++s) {
        upper = upper || !L.constant(i, j, s).is_zero() || !L.constant(j, i, s).is_zero();
        mirrored = mirrored && L.constant(j, i, s) == -L.constant(i, j, s);
      }
      if (upper) emit(i, j);
      if (i != j && !mirrored) emit(j, i);
    }
  return out.dump(2) + "\n";
}

LieModule parse_lie_module(const std::string& text, const LieAlgebraPtr& over, const std::string& source) {
  const Reader rd(source);
  const json j = load(text, source);
  check_kind(rd, j, "lie");
  const std::string alg = rd.string(rd.field(j, "over", "module"), "module.over");
  if (alg != over->name()) rd.invalid("module.over", "module is over '" + alg + "', not '" + over->name() + "'");
  const std::size_t dim = rd.count(rd.field(j, "dim", "module"), "module.dim");
  const json& action = rd.array(rd.field(j, "action", "module"), "module.action");
  std::vector<Matrix> mats(over->dim(), Matrix(dim, dim));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < action.size(); ++k) {
    const std::string at = "action[" + std::to_string(k) + "]";
    const std::size_t i = rd.index(rd.field(action[k], "i", at), over->dim(), at + ".i");
    const std::size_t jj = rd.index(rd.field(action[k], "j", at), dim, at + ".j");
    if (!seen.insert({i, jj}).second)
      rd.invalid(at, "duplicate entry (" + std::to_string(i + 1) + ", " + std::to_string(jj + 1) + ")");
    rd.terms(rd.field(action[k], "terms", at), mats[i], jj, at + ".terms");
  }
  return LieModule(over, std::move(mats), rd.optional_string(j, "name", "module"));
}

std::string render_lie_module(const LieModule& M) {
  ojson out;
  out["kind"] = "lie";
  out["over"] = M.algebra()->name();
  out["name"] = M.name();
  out["dim"] = M.dim();
  out["action"] = ojson::array();
  for (std::size_t i = 0; i < M.algebra()->dim(); ++i)
    for (std::size_t j = 0; j < M.dim(); ++j) {
      if (column_zero(M.action(i), j)) continue;
      ojson e;
      e["i"] = i + 1;
      e["j"] = j + 1;
      e["terms"] = render_terms(M.action(i), j);
      out["action"].push_back(std::move(e));
    }
  return out.dump(2) + "\n";
}

MatrixARep parse_arep(const std::string& text, const UniversalAlgebraPtr& over, const std::string& source) {
  const Reader rd(source);
  const json j = load(text, source);
  check_kind(rd, j, "assoc-matrix");
  const json& names = rd.array(rd.field(j, "over", "module"), "module.over");
  if (names.size() != 2) rd.syntax("module.over", "expected [h, g]");
  const std::string hn = rd.string(names[0], "module.over[0]"), gn = rd.string(names[1], "module.over[1]");
  if (hn != over->h()->name() || gn != over->g()->name())
    rd.invalid("module.over", "module is over A(" + hn + "," + gn + "), not A(" + over->h()->name() + "," +
                                  over->g()->name() + ")");
  const std::size_t dim = rd.count(rd.field(j, "dim", "module"), "module.dim");
  const json& action = rd.array(rd.field(j, "action", "module"), "module.action");
  std::vector<Matrix> mats(over->nvars(), Matrix(dim, dim));
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < action.size(); ++k) {
    const std::string at = "action[" + std::to_string(k) + "]";
    const json& var = rd.field(action[k], "var", at);
    if (!var.is_array() || var.size() != 2) rd.syntax(at + ".var", "expected [s, i]");
    const std::size_t s = rd.index(var[0], over->n(), at + ".var[0]");
    const std::size_t i = rd.index(var[1], over->d(), at + ".var[1]");
    const std::size_t jj = rd.index(rd.field(action[k], "j", at), dim, at + ".j");
    if (!seen.insert({s, i, jj}).second)
      rd.invalid(at, "duplicate entry (" + std::to_string(s + 1) + ", " + std::to_string(i + 1) + ", " +
                         std::to_string(jj + 1) + ")");
    rd.terms(rd.field(action[k], "terms", at), mats[over->var(s, i)], jj, at + ".terms");
  }
  return MatrixARep(over, std::move(mats), rd.optional_string(j, "name", "module"));
}

std::string render_arep(const MatrixARep& X) {
  const auto& A = *X.owner();
  ojson out;
  out["kind"] = "assoc-matrix";
  out["over"] = ojson::array({A.h()->name(), A.g()->name()});
  out["name"] = X.name();
  out["dim"] = X.dim();
  out["action"] = ojson::array();
  for (std::size_t s = 0; s < A.n(); ++s)
    for (std::size_t i = 0; i < A.d(); ++i)
      for (std::size_t j = 0; j < X.dim(); ++j) {
        if (column_zero(X.mat(s, i), j)) continue;
        ojson e;
        e["var"] = ojson::array({s + 1, i + 1});
        e["j"] = j + 1;
        e["terms"] = render_terms(X.mat(s, i), j);
        out["action"].push_back(std::move(e));
      }
  return out.dump(2) + "\n";
}

std::string module_kind(const std::string& text, const std::string& source) {
  const Reader rd(source);
  const json j = load(text, source);
  const std::string kind = rd.string(rd.field(j, "kind", "module"), "module.kind");
  if (kind != "lie" && kind != "assoc-matrix") rd.invalid("module.kind", "unknown kind '" + kind + "'");
  return kind;
}

Matrix parse_matrix(const std::string& text, const std::string& source) {
  const Reader rd(source);
  const json j = load(text, source);
  const std::size_t rows = rd.count(rd.field(j, "rows", "matrix"), "matrix.rows");
  const std::size_t cols = rd.count(rd.field(j, "cols", "matrix"), "matrix.cols");
  const json& entries = rd.array(rd.field(j, "entries", "matrix"), "matrix.entries");
  if (entries.size() != rows) rd.invalid("matrix.entries", "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = "entries[" + std::to_string(r) + "]";
    const json& row = rd.array(entries[r], at);
    if (row.size() != cols) rd.invalid(at, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rd.rational(row[c], at + "[" + std::to_string(c) + "]");
  }
  return m;
}

std::string render_matrix(const Matrix& m) {
  ojson out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out["entries"].push_back(std::move(row));
  }
  return out.dump(2) + "\n";
}

Report parse_report(const std::string& text, const std::string& source) {
  const Reader rd(source);
  const json j = load(text, source);
  Report out(rd.string(rd.field(j, "title", "report"), "report.title"));
  const json& items = rd.array(rd.field(j, "items", "report"), "report.items");
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string at = "items[" + std::to_string(k) + "]";
    ReportItem item;
    item.check = rd.string(rd.field(items[k], "check", at), at + ".check");
    for (const auto& loc : rd.array(rd.field(items[k], "location", at), at + ".location"))
      item.location.push_back(rd.count(loc, at + ".location"));
    item.witness = rd.string(rd.field(items[k], "witness", at), at + ".witness");
    const json& ok = rd.field(items[k], "ok", at);
    if (!ok.is_boolean()) rd.syntax(at + ".ok", "expected a boolean");
    item.ok = ok.get<bool>();
    out.add(std::move(item));
  }
  const std::string status = rd.string(rd.field(j, "status", "report"), "report.status");
  if (status != (out.passed() ? "pass" : "fail")) rd.invalid("report.status", "status disagrees with the items");
  return out;
}

std::string render_report(const Report& r) {
  ojson out;
  out["title"] = r.title();
  out["status"] = r.passed() ? "pass" : "fail";
  out["items"] = ojson::array();
  for (const auto& item : r.items()) {
    ojson e;
    e["check"] = item.check;
    e["location"] = item.location;
    e["witness"] = item.witness;
    e["ok"] = item.ok;
    out["items"].push_back(std::move(e));
  }
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace univalg::io
