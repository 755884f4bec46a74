// adorn: derived series, degrees of adorability, and Alexander polynomial
// verdicts for finite and finitely presented groups.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adorn/adorn.hpp"
#include "adorn/json_io.hpp"
#include "adorn/verify.hpp"

namespace {

using namespace adorn;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct CommonOptions {
  std::string format = "text";
  std::string catalog_name;
  std::string file_path;
  std::string inline_text;
  std::size_t max_depth = 8;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t max_order = kDefaultMaxOrder;
};

void add_format_option(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_budget_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--max-depth", opt.max_depth, "derived series depth budget")
      ->capture_default_str();
  cmd->add_option("--max-cosets", opt.max_cosets, "coset enumeration budget")
      ->capture_default_str();
  cmd->add_option("--max-order", opt.max_order, "finite enumeration budget")
      ->capture_default_str();
}

void add_input_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("presentation", opt.inline_text, "inline presentation text");
  cmd->add_option("--catalog", opt.catalog_name, "catalog entry name");
  cmd->add_option("--file", opt.file_path, "read the presentation from a file");
}

// Exactly one input source; returns its description for the report.
std::string check_single_input(const CommonOptions& opt) {
  int sources = !opt.inline_text.empty();
  sources += !opt.catalog_name.empty();
  sources += !opt.file_path.empty();
  if (sources != 1)
    throw std::invalid_argument("provide exactly one input: inline text, --catalog, or --file");
  if (!opt.catalog_name.empty()) return "catalog:" + opt.catalog_name;
  if (!opt.file_path.empty()) return "file:" + opt.file_path;
  return opt.inline_text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation input_presentation(const CommonOptions& opt) {
  if (!opt.catalog_name.empty()) {
    const CatalogEntry& e = Catalog::instance().get(opt.catalog_name);
    if (!e.presentation)
      throw std::invalid_argument("catalog entry '" + e.name + "' has no presentation");
    return *e.presentation;
  }
  if (!opt.file_path.empty()) return parse_presentation(read_file(opt.file_path));
  return parse_presentation(opt.inline_text);
}

json budgets_json(const CommonOptions& opt) {
  return json{{"max_depth", opt.max_depth},
              {"max_cosets", opt.max_cosets},
              {"max_order", opt.max_order}};
}

void emit(const CommonOptions& opt, const std::string& command, const std::string& input,
          const json& result, const std::string& text) {
  if (opt.format == "json") {
    json envelope{{"command", command},
                  {"input", input},
                  {"budgets", budgets_json(opt)},
                  {"result", result},
                  {"version", kVersion}};
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

EngineBudgets engine_budgets(const CommonOptions& opt) {
  EngineBudgets b;
  b.max_depth = opt.max_depth;
  b.max_cosets = opt.max_cosets;
  return b;
}

int exit_code_for(const Verdict& v) {
  return std::holds_alternative<Unknown>(v) ? 2 : 0;
}

std::string describe(const Verdict& v) {
  std::ostringstream out;
  if (const auto* a = std::get_if<Adorable>(&v)) {
    out << "adorable, doa = " << a->doa;
    if (!a->certificate.empty()) out << " (" << a->certificate << ")";
    out << "\n";
    for (const DerivedStep& s : a->trace)
      out << "  depth " << s.depth << ": quotient " << s.quotient.to_string() << ", index "
          << s.coset_index.str() << "\n";
  } else if (const auto* n = std::get_if<NotAdorable>(&v)) {
    out << "not adorable (" << reason_name(n->reason) << ": " << n->evidence << ")\n";
  } else if (const auto* u = std::get_if<Unknown>(&v)) {
    out << "unknown: stalled at depth " << u->depth_reached << " (" << stall_name(u->stall)
        << ")\n";
  }
  return out.str();
}

// --- doa -------------------------------------------------------------

int cmd_doa(const CommonOptions& opt) {
  std::string input = check_single_input(opt);

  // catalog entries with a concrete model run the exhaustive oracle unless
  // the entry prefers its presentation
  if (!opt.catalog_name.empty()) {
    const CatalogEntry& e = Catalog::instance().get(opt.catalog_name);
    if (e.has_model() && !e.prefer_presentation) {
      try {
        FiniteGroup g = build_model(e, opt.max_order);
        std::vector<FiniteGroup> series = derived_series(g, opt.max_order);
        DoaResult r = doa_finite(g, opt.max_order);
        json orders = json::array();
        std::ostringstream text;
        text << "adorable, doa = " << r.doa << " (finite enumeration; series orders:";
        for (const FiniteGroup& s : series) {
          orders.push_back(s.order());
          text << " " << s.order();
        }
        text << ")\n";
        json result{{"kind", "adorable"},
                    {"doa", r.doa},
                    {"route", "finite_enumeration"},
                    {"terminal", r.terminal == DoaResult::Terminal::perfect ? "perfect" : "trivial"},
                    {"series_orders", orders}};
        emit(opt, "doa", input, result, text.str());
        return 0;
      } catch (const BudgetError& e) {
        json result{{"kind", "unknown"}, {"stall", "size_budget"}, {"detail", e.what()}};
        emit(opt, "doa", input, result, std::string("unknown: ") + e.what() + "\n");
        return 2;
      }
    }
  }

  ExploreResult res = explore_derived_series(input_presentation(opt), engine_budgets(opt));
  json result = to_json(res.verdict);
  result["route"] = "derived_series_pipeline";
  emit(opt, "doa", input, result, describe(res.verdict));
  return exit_code_for(res.verdict);
}

// --- abelianize --------------------------------------------------------

int cmd_abelianize(const CommonOptions& opt) {
  std::string input = check_single_input(opt);
  Presentation p = input_presentation(opt);
  AbelianGroupData a = abelian_invariants(relation_matrix(p));
  emit(opt, "abelianize", input, to_json(a), a.to_string() + "\n");
  return 0;
}

// --- snf ---------------------------------------------------------------

int cmd_snf(const CommonOptions& opt, const std::string& matrix_text) {
  std::string text = matrix_text;
  if (!opt.file_path.empty()) text = read_file(opt.file_path);
  if (text.empty()) throw std::invalid_argument("snf: provide a matrix literal or --file");
  IntMatrix m = matrix_from_json(json::parse(text));
  SmithForm s = smith_normal_form(m);
  if (!(s.left * m * s.right == s.diagonal_matrix()))
    throw std::logic_error("snf: self-certification failed");

  std::ostringstream out;
  out << "diag [";
  for (std::size_t i = 0; i < s.diag.size(); ++i) out << (i ? ", " : "") << s.diag[i].str();
  out << "]\n";
  AbelianGroupData a = abelian_invariants(m);
  out << "cokernel " << a.to_string() << "\n";
  json result = to_json(s);
  result["cokernel"] = to_json(a);
  emit(opt, "snf", text, result, out.str());
  return 0;
}

// --- alexander -----------------------------------------------------------

int cmd_alexander(const CommonOptions& opt) {
  std::string input = check_single_input(opt);
  Presentation p = input_presentation(opt);
  AlexanderData data = alexander_polynomial(p);
  Verdict verdict = knot_adorability_verdict(p);

  std::ostringstream out;
  out << "alexander polynomial: " << data.polynomial.to_string() << " (degree " << data.degree
      << ")\n";
  out << describe(verdict);
  json result{{"polynomial", to_json(data.polynomial)},
              {"degree", data.degree},
              {"h1prime_rank", data.degree},
              {"verdict", to_json(verdict)}};
  emit(opt, "alexander", input, result, out.str());
  return exit_code_for(verdict);
}

// --- series ---------------------------------------------------------------

int cmd_series(const CommonOptions& opt) {
  std::string input = check_single_input(opt);
  if (!opt.catalog_name.empty()) {
    const CatalogEntry& e = Catalog::instance().get(opt.catalog_name);
    if (e.has_model() && !e.prefer_presentation) {
      FiniteGroup g = build_model(e, opt.max_order);
      std::vector<FiniteGroup> series = derived_series(g, opt.max_order);
      json orders = json::array();
      std::ostringstream text;
      text << "derived series orders:";
      for (const FiniteGroup& s : series) {
        orders.push_back(s.order());
        text << " " << s.order();
      }
      text << "\nstabilizes at depth " << series.size() - 1 << " ("
           << (series.back().order() == 1 ? "trivial" : "perfect") << ")\n";
      emit(opt, "series", input, json{{"series_orders", orders}}, text.str());
      return 0;
    }
  }
  ExploreResult res = explore_derived_series(input_presentation(opt), engine_budgets(opt));
  std::ostringstream text;
  for (const DerivedStep& s : res.trace)
    text << "depth " << s.depth << ": " << s.presentation.generator_count() << " generators, "
         << s.presentation.relators().size() << " relators, quotient "
         << s.quotient.to_string() << "\n";
  text << describe(res.verdict);
  json steps = json::array();
  for (const DerivedStep& s : res.trace) steps.push_back(to_json(s));
  emit(opt, "series", input, json{{"trace", steps}, {"verdict", to_json(res.verdict)}},
       text.str());
  return exit_code_for(res.verdict);
}

// --- explore -----------------------------------------------------------------

int cmd_explore(const CommonOptions& opt, const ProbeParams& params) {
  ProbeParams run = params;
  run.budgets = engine_budgets(opt);
  ProbeReport report = derived_series_probe(run);
  std::ostringstream text;
  text << "samples: " << report.samples << "\n";
  for (const auto& [key, count] : report.verdict_counts)
    text << "  " << key << ": " << count << "\n";
  text << "max finite quotient order: " << report.max_quotient_order.str() << "\n";
  emit(opt, "explore", "random(seed=" + std::to_string(report.seed) + ")", to_json(report),
       text.str());
  return 0;
}

// --- verify -------------------------------------------------------------------

int cmd_verify(const CommonOptions& opt) {
  std::vector<VerifyCheck> checks = run_verification_suite();
  bool all = true;
  std::ostringstream text;
  json results = json::array();
  for (const VerifyCheck& c : checks) {
    all = all && c.pass;
    text << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
    results.push_back(json{{"name", c.name},
                           {"statement", c.statement},
                           {"pass", c.pass},
                           {"detail", c.detail}});
  }
  text << (all ? "all checks passed\n" : "SOME CHECKS FAILED\n");
  emit(opt, "verify", "catalog", json{{"checks", results}, {"all_pass", all}}, text.str());
  return all ? 0 : 1;
}

// --- catalog --------------------------------------------------------------------

int cmd_catalog_list(const CommonOptions& opt) {
  std::ostringstream text;
  json entries = json::array();
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    text << e.name << "  -  " << e.description << "\n";
    entries.push_back(json{{"name", e.name},
                           {"description", e.description},
                           {"has_model", e.has_model()},
                           {"has_presentation", e.presentation.has_value()}});
  }
  emit(opt, "catalog_list", "", entries, text.str());
  return 0;
}

int cmd_catalog_show(const CommonOptions& opt, const std::string& name) {
  const CatalogEntry& e = Catalog::instance().get(name);
  std::ostringstream text;
  json result{{"name", e.name}, {"description", e.description}};
  text << e.name << ": " << e.description << "\n";
  if (!e.perm_generators.empty()) {
    json gens = json::array();
    text << "permutation generators:\n";
    for (const Permutation& p : e.perm_generators) {
      text << "  " << p.to_cycles() << "\n";
      gens.push_back(p.to_cycles());
    }
    result["permutation_generators"] = gens;
  }
  if (!e.matrix_generators.empty()) {
    json gens = json::array();
    text << "matrix generators:\n";
    for (const ModMatrix& m : e.matrix_generators) {
      text << "  " << m.to_string() << "\n";
      gens.push_back(m.to_string());
    }
    result["matrix_generators"] = gens;
  }
  if (e.presentation) {
    text << "presentation: " << to_text(*e.presentation) << "\n";
    result["presentation"] = to_text(*e.presentation);
  }
  json expected = json::object();
  if (e.expected.doa) {
    text << "expected doa: " << *e.expected.doa << "  [" << e.expected.doa_source << "]\n";
    expected["doa"] = json{{"value", *e.expected.doa}, {"source", e.expected.doa_source}};
  }
  if (e.expected.order) {
    text << "expected order: " << e.expected.order->str() << "  [" << e.expected.order_source
         << "]\n";
    expected["order"] =
        json{{"value", int_to_json(*e.expected.order)}, {"source", e.expected.order_source}};
  }
  if (e.expected.abelianization) {
    text << "expected abelianization: " << e.expected.abelianization->to_string() << "  ["
         << e.expected.abelianization_source << "]\n";
    expected["abelianization"] = json{{"value", to_json(*e.expected.abelianization)},
                                      {"source", e.expected.abelianization_source}};
  }
  result["expected"] = expected;
  emit(opt, "catalog_show", name, result, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adorn: derived series and adorability workbench"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string snf_matrix;
  std::string show_name;
  ProbeParams probe;
  std::uint64_t seed = 0;

  CLI::App* doa = app.add_subcommand("doa", "degree of adorability of a group");
  add_input_options(doa, opt);
  add_format_option(doa, opt);
  add_budget_options(doa, opt);

  CLI::App* abelianize = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  add_input_options(abelianize, opt);
  add_format_option(abelianize, opt);

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", snf_matrix, "JSON array-of-arrays of integers");
  snf->add_option("--file", opt.file_path, "read the matrix from a file");
  add_format_option(snf, opt);

  CLI::App* alexander = app.add_subcommand("alexander", "Alexander polynomial and knot verdict");
  add_input_options(alexander, opt);
  add_format_option(alexander, opt);

  CLI::App* series = app.add_subcommand("series", "derived series trace");
  add_input_options(series, opt);
  add_format_option(series, opt);
  add_budget_options(series, opt);

  CLI::App* explore = app.add_subcommand("explore", "randomized derived-series probe");
  explore->add_option("--gens", probe.n_gens, "generators per sample")->capture_default_str();
  explore->add_option("--rels", probe.n_rels, "relators per sample")->capture_default_str();
  explore->add_option("--max-len", probe.max_len, "maximum relator length")->capture_default_str();
  explore->add_option("--count", probe.count, "number of samples")->capture_default_str();
  explore->add_option("--seed", seed, "base seed")->capture_default_str();
  add_format_option(explore, opt);
  add_budget_options(explore, opt);

  CLI::App* verify = app.add_subcommand("verify", "re-check the structural fact suite");
  add_format_option(verify, opt);

  CLI::App* catalog = app.add_subcommand("catalog", "named groups");
  catalog->require_subcommand(1);
  CLI::App* catalog_list = catalog->add_subcommand("list", "list catalog entries");
  add_format_option(catalog_list, opt);
  CLI::App* catalog_show = catalog->add_subcommand("show", "show one catalog entry");
  catalog_show->add_option("name", show_name, "entry name")->required();
  add_format_option(catalog_show, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (doa->parsed()) return cmd_doa(opt);
    if (abelianize->parsed()) return cmd_abelianize(opt);
    if (snf->parsed()) return cmd_snf(opt, snf_matrix);
    if (alexander->parsed()) return cmd_alexander(opt);
    if (series->parsed()) return cmd_series(opt);
    if (explore->parsed()) {
      probe.seed = seed;
      return cmd_explore(opt, probe);
    }
    if (verify->parsed()) return cmd_verify(opt);
    if (catalog_list->parsed()) return cmd_catalog_list(opt);
    if (catalog_show->parsed()) return cmd_catalog_show(opt, show_name);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
