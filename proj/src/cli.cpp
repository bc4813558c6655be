#include "cyc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyc/catalog.hpp"
#include "cyc/error.hpp"
#include "cyc/expr.hpp"
#include "cyc/group.hpp"
#include "cyc/verifier.hpp"

namespace cyc::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;   // a verification/validation suite said no
constexpr int kExitUsageOrData = 2;   // bad flags, bad expressions, bad files

std::string profile_text(const std::map<std::size_t, std::size_t>& profile) {
  std::string out;
  for (const auto& [order, count] : profile) {
    if (!out.empty()) out += ";";
    out += std::to_string(order) + ":" + std::to_string(count);
  }
  return out;
}

nlohmann::json census_to_json(const Census& c) {
  nlohmann::json doc;
  doc["order"] = c.group_order;
  doc["cyclic_count"] = c.cyclic_count;
  doc["involution_count"] = c.involution_count;
  doc["exponent"] = c.exponent;
  doc["order_profile"] = nlohmann::json::array();
  for (const auto& [order, count] : c.order_profile) {
    doc["order_profile"].push_back({order, count});
  }
  doc["classes"] = nlohmann::json::array();
  for (const CensusClass& cls : c.classes) {
    doc["classes"].push_back({{"subgroup_order", cls.subgroup_order},
                              {"size", cls.size},
                              {"representative", cls.representative}});
  }
  return doc;
}

void print_census_text(std::ostream& out, const std::string& label, const Census& c) {
  out << "group: " << label << "\n";
  out << "order: " << c.group_order << "\n";
  out << "cyclic subgroups: " << c.cyclic_count << "\n";
  out << "involutions: " << c.involution_count << "\n";
  out << "exponent: " << c.exponent << "\n";
  out << "order profile: " << profile_text(c.order_profile) << "\n";
  out << "classes (subgroup order, size, representative):\n";
  for (const CensusClass& cls : c.classes) {
    out << "  (" << cls.subgroup_order << ", " << cls.size << ", " << cls.representative
        << ")\n";
  }
}

struct GlobalOptions {
  std::string catalog_path = "data/catalog.jsonl";
  std::string counts_path = "data/reference_counts.json";
  std::string format = "text";
  std::size_t order_cap = kDefaultOrderCap;
};

int cmd_census(const GlobalOptions& opts, const std::string& expr_text, std::ostream& out) {
  Group g = eval_expr(expr_text, opts.order_cap);
  Census c = census(g);
  if (opts.format == "json") {
    nlohmann::json doc = census_to_json(c);
    doc["label"] = g.label();
    out << doc.dump(2) << "\n";
  } else {
    print_census_text(out, g.label(), c);
  }
  return kExitOk;
}

struct SearchFlags {
  std::string c_eq, c_le, c_ge, o2;
  std::size_t exponent = 0, min_order = 0, max_order = 0;
  std::string parity;
};

int cmd_search(const GlobalOptions& opts, const SearchFlags& flags, std::ostream& out) {
  QueryPredicate pred;
  if (!flags.c_eq.empty()) pred.cyclic_count = {Relation::Eq, parse_linear_form(flags.c_eq)};
  if (!flags.c_le.empty()) pred.cyclic_count = {Relation::Le, parse_linear_form(flags.c_le)};
  if (!flags.c_ge.empty()) pred.cyclic_count = {Relation::Ge, parse_linear_form(flags.c_ge)};
  if (!flags.o2.empty()) pred.involution_count = parse_linear_form(flags.o2);
  if (flags.exponent != 0) pred.exponent = flags.exponent;
  if (flags.min_order != 0) pred.min_order = flags.min_order;
  if (flags.max_order != 0) pred.max_order = flags.max_order;
  if (flags.parity == "odd") pred.parity = Parity::Odd;
  if (flags.parity == "even") pred.parity = Parity::Even;

  Catalog catalog = load_catalog(opts.catalog_path, opts.order_cap);
  std::vector<const CatalogEntry*> matches = query(catalog, pred);

  if (opts.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const CatalogEntry* entry : matches) {
      nlohmann::json row;
      row["id"] = entry->id;
      row["expr"] = entry->expr_text;
      row["census"] = census_to_json(entry->census);
      doc.push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
  } else {
    out << matches.size() << " matching entries\n";
    for (const CatalogEntry* entry : matches) {
      out << entry->id << ": order=" << entry->order << ", C=" << entry->census.cyclic_count
          << ", O2=" << entry->census.involution_count << ", exp=" << entry->census.exponent
          << ", expr=" << entry->expr_text << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions& opts, const std::vector<std::string>& suites,
               std::ostream& out) {
  // Reject unknown suite ids before touching any data.
  const std::vector<std::string>& known = suite_ids();
  for (const std::string& suite : suites) {
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      throw Error(ErrorKind::UnknownTheoremId, "unknown suite \"" + suite + "\"");
    }
  }

  Catalog catalog = load_catalog(opts.catalog_path, opts.order_cap);
  VerifierConfig config;
  config.order_cap = opts.order_cap;

  std::vector<VerificationReport> reports;
  if (suites.empty()) {
    reports = run_all(catalog, config);
  } else {
    for (const std::string& suite : suites) {
      reports.push_back(run_suite(suite, catalog, config));
    }
  }

  std::size_t passed = 0;
  for (const VerificationReport& report : reports) passed += report.passed ? 1 : 0;

  if (opts.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const VerificationReport& report : reports) {
      doc.push_back(nlohmann::json::parse(report_to_json(report)));
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const VerificationReport& report : reports) {
      out << report_to_text(report);
      std::ostringstream ms;
      ms << report.runtime_ms;
      out << "  runtime: " << ms.str() << " ms\n";
    }
    out << "verification: " << (passed == reports.size() ? "PASS" : "FAIL") << " (" << passed
        << "/" << reports.size() << " suites passed)\n";
  }
  return passed == reports.size() ? kExitOk : kExitCheckFailed;
}

int cmd_catalog_validate(const GlobalOptions& opts, std::ostream& out) {
  Catalog catalog = load_catalog(opts.catalog_path, opts.order_cap);
  ReferenceCounts counts = load_reference_counts(opts.counts_path);
  CompletenessReport report = validate_completeness(catalog, counts, counts.bound);

  if (opts.format == "json") {
    nlohmann::json doc;
    doc["bound"] = report.bound;
    doc["passed"] = report.passed;
    doc["orders"] = nlohmann::json::array();
    for (const OrderCompleteness& oc : report.orders) {
      nlohmann::json row;
      row["order"] = oc.order;
      row["found"] = oc.found_classes;
      row["expected"] = oc.expected_classes;
      row["passed"] = oc.passed;
      row["duplicates"] = nlohmann::json::array();
      for (const auto& [a, b] : oc.duplicate_pairs) row["duplicates"].push_back({a, b});
      doc["orders"].push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const OrderCompleteness& oc : report.orders) {
      out << "order " << oc.order << ": " << oc.found_classes << "/" << oc.expected_classes;
      if (!oc.duplicate_pairs.empty()) {
        out << " (duplicates:";
        for (const auto& [a, b] : oc.duplicate_pairs) out << " " << a << "~" << b;
        out << ")";
      }
      out << (oc.passed ? "" : "  MISMATCH") << "\n";
    }
    out << "catalog validate: " << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}

int cmd_catalog_list(const GlobalOptions& opts, std::ostream& out) {
  Catalog catalog = load_catalog(opts.catalog_path, opts.order_cap);
  if (opts.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const CatalogEntry& entry : catalog) {
      doc.push_back({{"id", entry.id},
                     {"order", entry.order},
                     {"expr", entry.expr_text},
                     {"tags", entry.tags}});
    }
    out << doc.dump(2) << "\n";
  } else {
    for (const CatalogEntry& entry : catalog) {
      out << entry.id << ": order=" << entry.order << ", C=" << entry.census.cyclic_count
          << ", O2=" << entry.census.involution_count << ", exp=" << entry.census.exponent
          << ", expr=" << entry.expr_text << "\n";
    }
    out << catalog.size() << " entries\n";
  }
  return kExitOk;
}

int cmd_catalog_export(const GlobalOptions& opts, std::ostream& out) {
  Catalog catalog = load_catalog(opts.catalog_path, opts.order_cap);
  if (opts.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const CatalogEntry& entry : catalog) {
      nlohmann::json row;
      row["id"] = entry.id;
      row["order"] = entry.order;
      row["expr"] = entry.expr_text;
      row["tags"] = entry.tags;
      row["census"] = census_to_json(entry.census);
      doc.push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
  } else {
    // CSV (the default "text" rendering of an export is the CSV table).
    out << "id,order,C,O2,exponent,order_profile\n";
    for (const CatalogEntry& entry : catalog) {
      out << entry.id << "," << entry.order << "," << entry.census.cyclic_count << ","
          << entry.census.involution_count << "," << entry.census.exponent << ","
          << profile_text(entry.census.order_profile) << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cyclic subgroup census toolkit"};
  app.name("cyclic-census");
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--catalog", opts.catalog_path, "catalog JSONL path")
      ->envname("CYCLIC_CENSUS_CATALOG");
  app.add_option("--counts", opts.counts_path, "reference counts JSON path")
      ->envname("CYCLIC_CENSUS_COUNTS");
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--order-cap", opts.order_cap, "largest group order to materialize")
      ->check(CLI::PositiveNumber);

  std::string census_expr;
  CLI::App* census_cmd = app.add_subcommand("census", "census of one group expression");
  census_cmd->fallthrough();
  census_cmd->add_option("expr", census_expr, "group expression")->required();

  SearchFlags search_flags;
  CLI::App* search_cmd = app.add_subcommand("search", "query the catalog");
  search_cmd->fallthrough();
  CLI::Option* c_eq = search_cmd->add_option("--c-eq", search_flags.c_eq,
                                             "cyclic-subgroup count equals this form of |G|");
  CLI::Option* c_le = search_cmd->add_option("--c-le", search_flags.c_le,
                                             "cyclic-subgroup count at most this form");
  CLI::Option* c_ge = search_cmd->add_option("--c-ge", search_flags.c_ge,
                                             "cyclic-subgroup count at least this form");
  c_eq->excludes(c_le)->excludes(c_ge);
  c_le->excludes(c_ge);
  search_cmd->add_option("--o2", search_flags.o2, "involution count equals this form");
  search_cmd->add_option("--exp", search_flags.exponent, "exponent equals");
  search_cmd->add_option("--min-order", search_flags.min_order, "order at least");
  search_cmd->add_option("--max-order", search_flags.max_order, "order at most");
  search_cmd->add_option("--parity", search_flags.parity, "order parity")
      ->check(CLI::IsMember({"odd", "even"}));

  std::vector<std::string> verify_suites;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", verify_suites, "suite id (repeatable; default: all)");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog maintenance");
  catalog_cmd->fallthrough();
  catalog_cmd->require_subcommand(1);
  CLI::App* validate_cmd =
      catalog_cmd->add_subcommand("validate", "check per-order completeness");
  validate_cmd->fallthrough();
  CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
  list_cmd->fallthrough();
  CLI::App* export_cmd = catalog_cmd->add_subcommand("export", "export censuses (csv or json)");
  export_cmd->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("cyclic-census");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageOrData;
  }

  bool exporting = export_cmd->parsed();
  if (opts.format == "csv" && !exporting) {
    err << "error: --format csv is only available for `catalog export`\n";
    return kExitUsageOrData;
  }
  if (exporting && opts.format == "csv") opts.format = "text";  // text == CSV for export

  try {
    if (census_cmd->parsed()) return cmd_census(opts, census_expr, out);
    if (search_cmd->parsed()) return cmd_search(opts, search_flags, out);
    if (verify_cmd->parsed()) return cmd_verify(opts, verify_suites, out);
    if (catalog_cmd->parsed()) {
      if (validate_cmd->parsed()) return cmd_catalog_validate(opts, out);
      if (list_cmd->parsed()) return cmd_catalog_list(opts, out);
      if (export_cmd->parsed()) return cmd_catalog_export(opts, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrData;
  }
  err << "error: no command selected\n";
  return kExitUsageOrData;
}

}  // namespace cyc::cli
