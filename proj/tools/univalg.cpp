// Command-line front end: builds universal algebras and modules from JSON
// files, runs factorizations and verification checks, and prints reports.
//
// Exit status: 0 all checks pass, 1 semantic failure, 2 parse failure,
// 3 resource budget exhausted.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "univalg/catalog.hpp"
#include "univalg/coalgebra.hpp"
#include "univalg/errors.hpp"
#include "univalg/io.hpp"
#include "univalg/universal_modules.hpp"

using namespace univalg;

namespace {

constexpr int kOk = 0, kFailed = 1, kParse = 2, kBudget = 3;

struct Common {
  std::string order = "degrevlex";
  std::optional<std::size_t> budget;
  std::string out;

  GroebnerOptions options() const {
    GroebnerOptions o;
    if (budget) o.pair_budget = *budget;
    return o;
  }
  OrderKind order_kind() const { return parse_order_kind(order); }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--order", c.order, "Term order")->check(CLI::IsMember({"degrevlex", "lex"}));
  cmd->add_option("--budget", c.budget, "S-pair budget (overrides UNIVALG_BUDGET)");
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

void require_valid(const Report& r, const std::string& what) {
  if (r.passed()) return;
  for (const auto& item : r.items())
    if (!item.ok) {
      std::string loc;
      for (std::size_t k = 0; k < item.location.size(); ++k) loc += (k ? "," : "") + std::to_string(item.location[k]);
      throw ValidationError(what + ": " + item.check + " fails at (" + loc + "), witness " + item.witness);
    }
}

LieAlgebraPtr load_algebra(const std::string& path) {
  LieAlgebraPtr L = io::parse_algebra(io::read_file(path), path);
  require_valid(validate_lie_algebra(*L), path);
  return L;
}

LieModule load_lie_module(const std::string& path, const LieAlgebraPtr& over) {
  LieModule M = io::parse_lie_module(io::read_file(path), over, path);
  require_valid(validate_lie_module(M), path);
  return M;
}

MatrixARep load_arep(const std::string& path, const UniversalAlgebraPtr& A) {
  MatrixARep X = io::parse_arep(io::read_file(path), A, path);
  require_valid(validate_arep(X), path);
  return X;
}

Matrix load_matrix(const std::string& path) { return io::parse_matrix(io::read_file(path), path); }

std::string joined(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : " ") + n;
  return s;
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].to_string();
  return s + ")";
}

// Collects every report so the exit status reflects all of them.
class Output {
 public:
  explicit Output(std::ostream& os) : os_(os) {}
  std::ostream& text() { return os_; }
  void report(const Report& r) {
    write_report(os_, r);
    ok_ = ok_ && r.passed();
  }
  void flag(bool ok) { ok_ = ok_ && ok; }
  int status() const { return ok_ ? kOk : kFailed; }

 private:
  std::ostream& os_;
  bool ok_ = true;
};

// ---------------------------------------------------------------------------

int cmd_univalg(Output& out, const Common& c, const std::string& hf, const std::string& gf,
                std::optional<std::uint32_t> probe, bool golden) {
  const auto h = load_algebra(hf), g = load_algebra(gf);
  const auto A = build_universal_algebra(h, g, c.order_kind(), c.options());
  auto& os = out.text();
  const auto& names = A->variable_names();
  os << "# universal algebra A(" << h->name() << "," << g->name() << ")\n";
  os << "order: " << to_string(A->order()->kind()) << "\n";
  os << "variables (" << A->nvars() << "): " << joined(names) << "\n";
  os << "generators: " << A->jgens().size() << "\n";
  for (const auto& lp : A->jgens())
    os << "P(" << lp.a << "," << lp.i << "," << lp.j << ") = " << lp.poly.to_string(names) << "\n";
  os << "groebner basis: " << A->gb().generators().size() << "\n";
  for (std::size_t k = 0; k < A->gb().generators().size(); ++k)
    os << "G" << k + 1 << " = " << A->gb().generators()[k].to_string(names) << "\n";
  if (A->gb().is_unit()) os << "quotient: 0\n";
  else if (A->gb().generators().empty()) os << "quotient: free polynomial algebra on " << A->nvars() << " variables\n";
  else if (monomial_basis_up_to_degree(*A, 1).size() == 1) os << "quotient: k (every variable reduces to a constant)\n";
  else os << "quotient: k[X]/J\n";
  if (probe) {
    for (std::uint32_t d = 0; d <= *probe; ++d)
      os << "standard monomials of degree <= " << d << ": " << monomial_basis_up_to_degree(*A, d).size() << "\n";
  }
  Report report = verify_universal_relations(*A);
  if (golden) {
    const auto sl2 = catalog::sl2();
    if (!(*h == *sl2) || !(*g == *sl2)) {
      report.fail("golden-ideal", {}, "--golden needs h = g = sl2 in the standard basis");
    } else {
      const bool same =
          ideal_equal(A->generator_polynomials(), sl2_golden_polynomials(A->order()), A->order(), c.options());
      report.record("golden-ideal", {}, same ? "0" : "ideals differ");
    }
  }
  out.report(report);
  return out.status();
}


void print_presentation(std::ostream& os, const UniversalAModule& UM) {
  const auto& pres = UM.presentation();
  os << "rank: " << UM.rank() << (UM.rank() == 0 ? " (empty presentation)" : "") << "\n";
  os << "generators: " << joined(pres.generator_names) << "\n";
  os << "relations: " << UM.relgens().size() << "\n";
  for (const auto& lr : UM.relgens())
    os << "R(" << lr.s << "," << lr.i << "," << lr.j << ") = " << pres.render(lr.vec) << "\n";
  os << "module groebner basis: " << UM.mgb().generators().size() << "\n";
  for (std::size_t k = 0; k < UM.mgb().generators().size(); ++k)
    os << "G" << k + 1 << " = " << pres.render(UM.mgb().generators()[k]) << "\n";
  os << "collapsed: " << (UM.collapsed() ? "yes" : "no") << "\n";
  for (std::size_t r = 0; r < UM.Z().dim(); ++r) {
    Vector z(UM.Z().dim());
    z[r] = 1;
    os << "rho(z" << r + 1 << ") = " << UM.render(UM.rho(z)) << "\n";
  }
}

int cmd_univmod(Output& out, const Common& c, const std::vector<std::string>& files) {
  const auto h = load_algebra(files[0]), g = load_algebra(files[1]);
  const auto A = build_universal_algebra(h, g, c.order_kind(), c.options());
  const LieModule U = load_lie_module(files[2], h), Z = load_lie_module(files[3], g);
  const UniversalAModule UM(A, U, Z, c.options());
  out.text() << "# universal A-module U(" << U.name() << "," << Z.name() << ") over A(" << h->name() << ","
             << g->name() << ")\n";
  print_presentation(out.text(), UM);
  out.report(UM.relation_report());
  out.report(UM.equivariance_report());
  return out.status();
}

int cmd_univliemod(Output& out, const Common& c, const std::vector<std::string>& files) {
  const auto h = load_algebra(files[0]), g = load_algebra(files[1]);
  const auto A = build_universal_algebra(h, g, c.order_kind(), c.options());
  const MatrixARep V = load_arep(files[2], A);
  const LieModule W = load_lie_module(files[3], g);
  const UniversalLieHModule VM = build_universal_lie_hmodule(V, W);
  auto& os = out.text();
  const auto& names = VM.generator_names();
  os << "# universal Lie " << h->name() << "-module V(" << V.name() << "," << W.name() << ")\n";
  os << "rank: " << VM.rank() << (VM.rank() == 0 ? " (empty presentation)" : "") << "\n";
  os << "generators: " << joined(names) << "\n";
  os << "relations: " << VM.relgens().size() << "\n";
  for (const auto& [label, x] : VM.relgens())
    os << "R(" << label[0] << "," << label[1] << "," << label[2] << ") = " << x.to_string(names) << "\n";
  for (std::size_t r = 0; r < W.dim(); ++r) {
    os << "tau(w" << r + 1 << ") =";
    const auto t = VM.tau(r);
    bool any = false;
    for (std::size_t s = 0; s < t.size(); ++s)
      if (!t[s].is_zero()) {
        os << (any ? " + " : " ") << "(" << t[s].to_string(names) << ")(x)v" << s + 1;
        any = true;
      }
    os << (any ? "" : " 0") << "\n";
  }
  Report inputs("inputs");
  inputs.append(validate_arep(V));
  inputs.append(validate_lie_module(W));
  if (inputs.empty()) inputs.pass("inputs-valid", {});
  out.report(inputs);
  return out.status();
}

void print_factorization(Output& out, const FactorizationResult& res, const std::vector<std::string>& names) {
  auto& os = out.text();
  os << "generator images:\n";
  for (std::size_t p = 0; p < res.map.cols(); ++p) os << "  " << names[p] << " -> " << vector_text(res.map.column(p)) << "\n";
  os << "determination system: rank " << res.system_rank << " of " << res.unknowns << " unknowns ("
     << (res.unique() ? "unique" : "not unique") << ")\n";
  os << "diagram commutes: " << (res.commutes ? "yes" : "no") << "\n";
  out.report(res.witness);
  out.flag(res.unique() && res.commutes);
}

int cmd_factorize(Output& out, const Common& c, const std::string& kind, const std::vector<std::string>& files) {
  const auto h = load_algebra(files[0]), g = load_algebra(files[1]);
  const auto A = build_universal_algebra(h, g, c.order_kind(), c.options());
  const LinearMap f(load_matrix(files[5]));
  if (kind == "amodule") {
    const LieModule U = load_lie_module(files[2], h), Z = load_lie_module(files[3], g);
    const MatrixARep X = load_arep(files[4], A);
    const UniversalAModule UM(A, U, Z, c.options());
    out.text() << "# factorization through U(" << U.name() << "," << Z.name() << ") into " << X.name() << "\n";
    print_factorization(out, factorize_through_universal(UM, X, f), UM.presentation().generator_names);
  } else {
    const MatrixARep V = load_arep(files[2], A);
    const LieModule W = load_lie_module(files[3], g), Y = load_lie_module(files[4], h);
    const UniversalLieHModule VM = build_universal_lie_hmodule(V, W);
    out.text() << "# factorization through V(" << V.name() << "," << W.name() << ") into " << Y.name() << "\n";
    print_factorization(out, factorize_lie(VM, Y, f), VM.generator_names());
  }
  return out.status();
}

// Validators return violations only; an empty report is a pass.
void validator_report(Output& out, Report r, const std::string& check) {
  if (r.empty()) r.pass(check, {});
  out.report(r);
}

int cmd_check(Output& out, const Common& c, const std::string& kind, const std::vector<std::string>& files) {
  static const std::map<std::string, std::size_t> arity = {
      {"lie", 1},      {"module", 2},     {"arep", 3},        {"bialgebra", 1},
      {"coalgebra", 2}, {"comodule", 2},  {"adjunction", 6},  {"directsum", 5}};
  const auto it = arity.find(kind);
  if (it == arity.end()) throw ParseError("check: unknown kind '" + kind + "'");
  if (files.size() != it->second)
    throw ParseError("check " + kind + ": expected " + std::to_string(it->second) + " files");
  if (kind == "lie") {
    const auto L = io::parse_algebra(io::read_file(files[0]), files[0]);
    validator_report(out, validate_lie_algebra(*L), "lie-axioms");
    return out.status();
  }
  if (kind == "module") {
    const auto L = load_algebra(files[0]);
    validator_report(out, validate_lie_module(io::parse_lie_module(io::read_file(files[1]), L, files[1])), "module-axioms");
    return out.status();
  }
  const auto h = load_algebra(files[0]);
  if (kind == "bialgebra") {
    const auto B = build_universal_algebra(h, h, c.order_kind(), c.options());
    out.report(BialgebraStructure(B).report());
    return out.status();
  }
  if (kind == "coalgebra" || kind == "comodule") {
    const auto B = build_universal_algebra(h, h, c.order_kind(), c.options());
    const BialgebraStructure bi(B);
    const LieModule U = load_lie_module(files[1], h);
    const UniversalAModule UM(B, U, U, c.options());
    const CoalgebraOnU C(UM, bi);
    if (kind == "coalgebra") {
      out.report(bmodule_on_tensor_square(UM, bi));
      out.report(C.report());
      out.report(verify_bmodule_coalgebra(C));
    } else {
      out.report(verify_comodule(C));
    }
    return out.status();
  }
  const auto g = load_algebra(files[1]);
  const auto A = build_universal_algebra(h, g, c.order_kind(), c.options());
  if (kind == "arep") {
    validator_report(out, validate_arep(io::parse_arep(io::read_file(files[2]), A, files[2])), "representation-relations");
    return out.status();
  }
  const LieModule U = load_lie_module(files[2], h);
  if (kind == "directsum") {
    const LieModule W1 = load_lie_module(files[3], g), W2 = load_lie_module(files[4], g);
    out.report(direct_sum_check(A, U, W1, W2).report);
    return out.status();
  }
  // adjunction: Gamma and factorization are mutually inverse at f.
  const LieModule Z = load_lie_module(files[3], g);
  const MatrixARep X = load_arep(files[4], A);
  const LinearMap f(load_matrix(files[5]));
  const UniversalAModule UM(A, U, Z, c.options());
  const FactorizationResult res = factorize_through_universal(UM, X, f);
  const LinearMap back = gamma(UM, X, res.map);
  Report r("adjunction round trip");
  r.append(res.witness);
  r.record("gamma-after-factorize", {}, back == f ? "0" : (back.matrix() - f.matrix()).to_string());
  const FactorizationResult again = factorize_through_universal(UM, X, back);
  r.record("factorize-after-gamma", {}, again.map == res.map ? "0" : (again.map - res.map).to_string());
  r.record("unique", {}, res.unique() ? "0" : "determination system is not of full rank");
  out.report(r);
  return out.status();
}

int cmd_coalgebra(Output& out, const Common& c, const std::string& hf, const std::string& uf) {
  const auto h = load_algebra(hf);
  const auto B = build_universal_algebra(h, h, c.order_kind(), c.options());
  const BialgebraStructure bi(B);
  const LieModule U = load_lie_module(uf, h);
  const UniversalAModule UM(B, U, U, c.options());
  const CoalgebraOnU C(UM, bi);
  auto& os = out.text();
  const auto& pres = UM.presentation();
  os << "# coalgebra U(" << U.name() << ") over B = A(" << h->name() << "," << h->name() << ")\n";
  for (std::size_t l = 0; l < U.dim(); ++l)
    for (std::size_t t = 0; t < U.dim(); ++t) {
      const std::size_t pos = UM.position(l, t);
      os << "Delta(" << pres.generator_names[pos] << ") = " << C.square().render(C.delta(pres.generator(pos))) << "\n";
    }
  for (std::size_t p = 0; p < UM.rank(); ++p)
    os << "eps(" << pres.generator_names[p] << ") = " << C.epsilon_matrix()(0, p).to_string() << "\n";
  out.report(bi.report());
  out.report(C.report());
  out.report(verify_comodule(C));
  out.report(verify_bmodule_coalgebra(C));
  return out.status();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal algebras and modules for finite-dimensional Lie algebras"};
  app.require_subcommand(1);
  Common common;
  std::optional<std::uint32_t> probe;
  bool golden = false;
  std::string kind;
  std::vector<std::string> files;

  auto* univalg = app.add_subcommand("univalg", "Presentation of A(h,g)");
  add_common(univalg, common);
  univalg->add_option("--degree-probe", probe, "Count standard monomials up to this degree");
  univalg->add_flag("--golden", golden, "Assert equality with the known sl2 ideal");
  univalg->add_option("files", files, "h.json g.json")->required()->expected(2);

  auto* univmod = app.add_subcommand("univmod", "Presentation of U(U,Z)");
  add_common(univmod, common);
  univmod->add_option("files", files, "h.json g.json U.json Z.json")->required()->expected(4);

  auto* univliemod = app.add_subcommand("univliemod", "Presentation of V(V,W)");
  add_common(univliemod, common);
  univliemod->add_option("files", files, "h.json g.json V.json W.json")->required()->expected(4);

  auto* factorize = app.add_subcommand("factorize", "Factor a morphism through a universal module");
  add_common(factorize, common);
  factorize->add_option("kind", kind, "amodule | liemodule")->required()->check(CLI::IsMember({"amodule", "liemodule"}));
  factorize->add_option("files", files, "h g U Z X f (amodule) or h g V W Y f (liemodule)")->required()->expected(6);

  auto* check = app.add_subcommand("check", "Run a verification report");
  add_common(check, common);
  check->add_option("kind", kind, "lie module arep bialgebra coalgebra comodule adjunction directsum")->required();
  check->add_option("files", files, "Input files")->required()->expected(1, 6);

  auto* coalgebra = app.add_subcommand("coalgebra", "Coalgebra structure on U(U)");
  add_common(coalgebra, common);
  coalgebra->add_option("files", files, "h.json U.json")->required()->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  std::ostringstream buffer;
  Output out(buffer);
  int status = kOk;
  try {
    if (*univalg) status = cmd_univalg(out, common, files[0], files[1], probe, golden);
    else if (*univmod) status = cmd_univmod(out, common, files);
    else if (*univliemod) status = cmd_univliemod(out, common, files);
    else if (*factorize) status = cmd_factorize(out, common, kind, files);
    else if (*check) status = cmd_check(out, common, kind, files);
    else status = cmd_coalgebra(out, common, files[0], files[1]);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }

  if (common.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(common.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << common.out << "\n";
      return kFailed;
    }
    file << buffer.str();
  }
  return status;
}
