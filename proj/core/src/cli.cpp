#include "polyform/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <sstream>

#include "json_detail.hpp"
#include "polyform/basis.hpp"
#include "polyform/chart.hpp"
#include "polyform/checks.hpp"
#include "polyform/errors.hpp"
#include "polyform/integrate.hpp"
#include "polyform/io.hpp"

namespace polyform {

namespace {

using detail::ordered_json;

const char* space_name(Space s) {
  switch (s) {
    case Space::ambient: return "ambient";
    case Space::simplex: return "simplex";
    case Space::sphere: return "sphere";
  }
  return "?";
}

QuotientContext context_from_name(const std::string& name, int n) {
  if (name == "ambient") return QuotientContext::ambient(n);
  if (name == "simplex") return QuotientContext::simplex(n);
  if (name == "sphere") return QuotientContext::sphere(n);
  throw UsageError("unknown context: " + name);
}

CoordSystem coords_for(const QuotientContext& ctx) {
  return ctx.space() == Space::simplex ? CoordSystem::x : CoordSystem::u;
}

ordered_json doc_header(const char* command) {
  ordered_json doc;
  doc["schema_version"] = "1";
  doc["command"] = command;
  return doc;
}

void emit(const ordered_json& doc, std::ostream& out) {
  out << doc.dump(2) << "\n";
}

std::vector<std::string> flavor_choices() {
  return {"P",          "Pminus",      "ring_P",      "ring_Pminus",
          "ringring_P", "ringring_Pminus", "P_even",  "P_odd",
          "Pminus_even", "Pminus_odd"};
}

int cmd_dual(int n, const std::string& form_text, const std::string& flavor,
             bool inverse, bool json, std::ostream& out) {
  const FormExpression ex = parse_form(form_text, n);
  if (ex.coords && *ex.coords == CoordSystem::u)
    throw UsageError("dual: --form must use simplex x-coordinates");
  const Form result = duality_map(ex.form, inverse);
  if (json) {
    ordered_json doc = doc_header("dual");
    doc["parameters"] = {{"n", n},
                         {"form", form_text},
                         {"flavor", flavor},
                         {"inverse", inverse}};
    doc["result"] = detail::form_json(result);
    emit(doc, out);
  } else {
    out << format_form(result, CoordSystem::x) << "\n";
  }
  return 0;
}

int cmd_basis(int n, int r, int k, const std::string& flavor,
              const std::string& context, bool json, std::ostream& out) {
  const auto f = flavor_from_name(flavor);
  if (!f) throw UsageError("unknown flavor: " + flavor);
  const QuotientContext ctx = context_from_name(context, n);
  const SpaceBasis basis = make_basis(n, r, k, *f, ctx);
  const CoordSystem coords = coords_for(ctx);
  if (json) {
    ordered_json doc = doc_header("basis");
    doc["parameters"] = {{"n", n},
                         {"r", r},
                         {"k", k},
                         {"flavor", flavor},
                         {"context", context}};
    doc["dim"] = basis.dim();
    ordered_json elems = ordered_json::array();
    for (const auto& rep : basis.representatives)
      elems.push_back(detail::form_json(rep));
    doc["elements"] = std::move(elems);
    emit(doc, out);
  } else {
    out << "dim " << basis.dim() << "\n";
    for (const auto& rep : basis.representatives)
      out << format_form(rep, coords) << "\n";
  }
  return 0;
}

int cmd_dims(int n, int rmax, bool json, std::ostream& out) {
  const DimTable table = dim_table(n, rmax);
  const bool clean = dim_table_clean(table);
  long bad = 0;
  for (const auto& row : table)
    if (!row.clean()) ++bad;
  if (json) {
    ordered_json doc = doc_header("dims");
    doc["parameters"] = {{"n", n}, {"rmax", rmax}};
    ordered_json rows = ordered_json::array();
    for (const auto& row : table) {
      ordered_json j;
      j["flavor"] = flavor_name(row.flavor);
      j["context"] = space_name(row.context);
      j["r"] = row.r;
      j["k"] = row.k;
      j["dim"] = row.dim;
      if (row.formula_dim >= 0)
        j["formula"] = row.formula_dim;
      else
        j["formula"] = nullptr;
      j["oracle"] = row.oracle_dim;
      j["clean"] = row.clean();
      rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
    doc["clean"] = clean;
    emit(doc, out);
  } else {
    out << std::left << std::setw(16) << "flavor" << std::setw(9) << "context"
        << std::right << std::setw(3) << "r" << std::setw(3) << "k"
        << std::setw(5) << "dim" << std::setw(9) << "formula" << std::setw(8)
        << "oracle" << "\n";
    for (const auto& row : table) {
      out << std::left << std::setw(16) << flavor_name(row.flavor)
          << std::setw(9) << space_name(row.context) << std::right
          << std::setw(3) << row.r << std::setw(3) << row.k << std::setw(5)
          << row.dim << std::setw(9)
          << (row.formula_dim >= 0 ? std::to_string(row.formula_dim) : "-")
          << std::setw(8) << row.oracle_dim
          << (row.clean() ? "" : "  MISMATCH") << "\n";
    }
    out << "discrepancies: " << bad << "\n";
  }
  return clean ? 0 : 1;
}

int cmd_gram(int n, int r, int k, const std::string& flavor, bool json,
             std::ostream& out) {
  const auto f = flavor_from_name(flavor);
  if (!f) throw UsageError("unknown flavor: " + flavor);
  const SpaceBasis basis =
      make_basis(n, r, k, *f, QuotientContext::simplex(n));
  const GramMatrix gram = gram_matrix(basis);
  const bool pd = is_positive_definite(gram);
  if (json) {
    ordered_json doc = doc_header("gram");
    doc["parameters"] = {{"n", n}, {"r", r}, {"k", k}, {"flavor", flavor}};
    doc["dim"] = basis.dim();
    ordered_json entries = ordered_json::array();
    for (const auto& row : gram.entries) {
      ordered_json jr = ordered_json::array();
      for (const auto& v : row) jr.push_back(rational_to_string(v));
      entries.push_back(std::move(jr));
    }
    doc["entries"] = std::move(entries);
    doc["positive_definite"] = pd;
    emit(doc, out);
  } else {
    out << "dim " << basis.dim() << "\n";
    for (const auto& row : gram.entries) {
      std::string line;
      for (const auto& v : row) {
        if (!line.empty()) line += " ";
        line += rational_to_string(v);
      }
      out << line << "\n";
    }
    out << "positive_definite: " << (pd ? "true" : "false") << "\n";
  }
  return pd ? 0 : 1;
}

int cmd_verify(const std::string& suite, int n, bool json, std::ostream& out) {
  const auto reports = run_suite(suite, n);
  long failures = 0;
  for (const auto& rep : reports)
    if (!rep.pass) ++failures;
  if (json) {
    // Timing is deliberately left out: the document must be byte-identical
    // across runs for identical inputs.
    ordered_json doc = doc_header("verify");
    doc["parameters"] = {{"suite", suite}, {"n", n}};
    ordered_json rows = ordered_json::array();
    for (const auto& rep : reports) {
      ordered_json j;
      j["check"] = rep.check_name;
      j["parameters"] = rep.parameters;
      j["verdict"] = rep.verdict();
      if (!rep.pass) {
        ordered_json w;
        w["text"] = rep.witness_text;
        if (rep.witness_form) w["form"] = detail::form_json(*rep.witness_form);
        j["witness"] = std::move(w);
      }
      rows.push_back(std::move(j));
    }
    doc["reports"] = std::move(rows);
    doc["all_pass"] = failures == 0;
    emit(doc, out);
  } else {
    // Timing stays in the report struct only: the text surface carries no
    // floating point, and equal inputs print equal bytes.
    for (const auto& rep : reports) {
      out << (rep.pass ? "pass  " : "FAIL  ") << rep.check_name << "  "
          << rep.parameters;
      if (!rep.pass) out << "  [" << rep.witness_text << "]";
      out << "\n";
    }
    out << reports.size() << " checks, " << failures << " failures\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact polynomial differential forms on the simplex and the sphere"};
  app.name("polyform");
  app.require_subcommand(1);

  int n = 0, r = 0, k = 0, rmax = 3;
  std::string form_text, flavor = "P", context = "simplex", suite = "all";
  bool inverse = false, json = false;

  auto* dual = app.add_subcommand(
      "dual", "Duality image (or preimage) of a simplex form");
  dual->add_option("--n", n, "Manifold dimension")->required()
      ->check(CLI::Range(1, 8));
  dual->add_option("--form", form_text, "Form expression in x-coordinates")
      ->required();
  dual->add_option("--flavor", flavor, "Family the input is taken from")
      ->check(CLI::IsMember({"P", "Pminus"}));
  dual->add_flag("--inverse", inverse, "Apply the inverse duality map");
  dual->add_flag("--json", json, "Emit a versioned JSON document");

  auto* basis = app.add_subcommand("basis", "Basis of one polynomial form space");
  basis->add_option("--n", n, "Manifold dimension")->required()
      ->check(CLI::Range(1, 8));
  basis->add_option("--r", r, "Polynomial degree parameter")->required()
      ->check(CLI::Range(0, 64));
  basis->add_option("--k", k, "Form degree")->required()
      ->check(CLI::Range(0, 9));
  basis->add_option("--flavor", flavor, "Space family")->required()
      ->check(CLI::IsMember(flavor_choices()));
  basis->add_option("--context", context, "Where the space lives")->required()
      ->check(CLI::IsMember({"ambient", "simplex", "sphere"}));
  basis->add_flag("--json", json, "Emit a versioned JSON document");

  auto* dims = app.add_subcommand(
      "dims", "Dimension table with formula and evaluation-rank cross-checks");
  dims->add_option("--n", n, "Manifold dimension")->required()
      ->check(CLI::Range(1, 8));
  dims->add_option("--rmax", rmax, "Largest degree parameter")->required()
      ->check(CLI::Range(0, 16));
  dims->add_flag("--json", json, "Emit a versioned JSON document");

  auto* gram = app.add_subcommand(
      "gram", "Duality Gram matrix of a simplex basis and its PD verdict");
  gram->add_option("--n", n, "Manifold dimension")->required()
      ->check(CLI::Range(1, 8));
  gram->add_option("--r", r, "Polynomial degree parameter")->required()
      ->check(CLI::Range(0, 64));
  gram->add_option("--k", k, "Form degree")->required()
      ->check(CLI::Range(0, 9));
  gram->add_option("--flavor", flavor, "Space family")
      ->check(CLI::IsMember({"P", "Pminus"}));
  gram->add_flag("--json", json, "Emit a versioned JSON document");

  auto* verify = app.add_subcommand("verify", "Run executable check suites");
  std::vector<std::string> suite_choices = {"all"};
  for (const auto& name : suite_names()) suite_choices.push_back(name);
  verify->add_option("--suite", suite, "Which suite to run")
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--n", n, "Manifold dimension")->required()
      ->check(CLI::Range(1, 8));
  verify->add_flag("--json", json, "Emit a versioned JSON document");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dual->parsed()) return cmd_dual(n, form_text, flavor, inverse, json, out);
    if (basis->parsed()) return cmd_basis(n, r, k, flavor, context, json, out);
    if (dims->parsed()) return cmd_dims(n, rmax, json, out);
    if (gram->parsed()) return cmd_gram(n, r, k, flavor, json, out);
    if (verify->parsed()) return cmd_verify(suite, n, json, out);
  } catch (const ConsistencyError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace polyform
