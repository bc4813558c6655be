#include "cyc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cyc/error.hpp"
#include "cyc/isomorphism.hpp"
#include "cyc/parallel.hpp"

namespace cyc {

namespace {

using nlohmann::json;

std::string line_tag(std::size_t line_number) {
  return "line " + std::to_string(line_number);
}

}  // namespace

bool CatalogEntry::has_tag(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

Catalog load_catalog(const std::string& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open catalog file " + path);
  }

  Catalog catalog;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (blank) continue;

    json row;
    try {
      row = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::ParseError, line_tag(line_number) + ": " + e.what());
    }
    if (!row.is_object() || !row.contains("id") || !row["id"].is_string() ||
        !row.contains("order") || !row["order"].is_number_unsigned() ||
        !row.contains("expr") || !row["expr"].is_string()) {
      throw Error(ErrorKind::ParseError,
                  line_tag(line_number) + ": entry needs string id, integer order, string expr");
    }

    CatalogEntry entry;
    entry.id = row["id"].get<std::string>();
    entry.order = row["order"].get<std::size_t>();
    entry.expr_text = row["expr"].get<std::string>();
    if (row.contains("expected") && !row["expected"].is_null()) {
      const json& expected = row["expected"];
      if (!expected.is_array() || expected.size() != 3 || !expected[0].is_number_unsigned() ||
          !expected[1].is_number_unsigned() || !expected[2].is_number_unsigned()) {
        throw Error(ErrorKind::ParseError,
                    line_tag(line_number) + ": expected must be [cyclic, involutions, exponent]");
      }
      entry.expected = {{expected[0].get<std::size_t>(), expected[1].get<std::size_t>(),
                         expected[2].get<std::size_t>()}};
    }
    if (row.contains("tags")) {
      if (!row["tags"].is_array()) {
        throw Error(ErrorKind::ParseError, line_tag(line_number) + ": tags must be an array");
      }
      for (const json& tag : row["tags"]) {
        if (!tag.is_string()) {
          throw Error(ErrorKind::ParseError, line_tag(line_number) + ": tags must be strings");
        }
        entry.tags.push_back(tag.get<std::string>());
      }
    }
    for (const CatalogEntry& earlier : catalog) {
      if (earlier.id == entry.id) {
        throw Error(ErrorKind::ParseError,
                    line_tag(line_number) + ": duplicate id \"" + entry.id + "\"");
      }
    }
    catalog.push_back(std::move(entry));
  }

  // Entries are independent: evaluate and check them concurrently. Results
  // land in per-index slots; parallel_for rethrows the lowest-index error.
  parallel_for(catalog.size(), [&](std::size_t i) {
    CatalogEntry& entry = catalog[i];
    GroupExpr expr;
    try {
      expr = parse_expr(entry.expr_text);
    } catch (const Error& e) {
      throw Error(ErrorKind::EvalError, "entry " + entry.id + ": " + e.what());
    }
    if (expr.is_raw() && !entry.has_tag("raw-justified")) {
      throw Error(ErrorKind::EvalError,
                  "entry " + entry.id + ": raw tables require the \"raw-justified\" tag");
    }
    try {
      entry.group = eval_expr(expr, order_cap);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::EvalError) throw;
      throw Error(ErrorKind::EvalError, "entry " + entry.id + ": " + e.what());
    }
    entry.census = census(entry.group);

    if (entry.group.order() != entry.order) {
      throw Error(ErrorKind::ExpectedMismatch,
                  "entry " + entry.id + ": order: got " + std::to_string(entry.group.order()) +
                      ", want " + std::to_string(entry.order));
    }
    if (entry.expected.has_value()) {
      const auto& want = *entry.expected;
      const char* names[3] = {"cyclic_count", "involution_count", "exponent"};
      std::size_t got[3] = {entry.census.cyclic_count, entry.census.involution_count,
                            entry.census.exponent};
      for (int f = 0; f < 3; ++f) {
        if (got[f] != want[f]) {
          throw Error(ErrorKind::ExpectedMismatch,
                      "entry " + entry.id + ": " + names[f] + ": got " + std::to_string(got[f]) +
                          ", want " + std::to_string(want[f]));
        }
      }
    }
  });

  return catalog;
}

ReferenceCounts load_reference_counts(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open reference counts file " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("bound") || !doc["bound"].is_number_unsigned() ||
      !doc.contains("counts") || !doc["counts"].is_object()) {
    throw Error(ErrorKind::ParseError, path + ": needs integer bound and counts object");
  }
  ReferenceCounts counts;
  counts.bound = doc["bound"].get<std::size_t>();
  if (doc.contains("source") && doc["source"].is_string()) {
    counts.source = doc["source"].get<std::string>();
  }
  for (const auto& [key, value] : doc["counts"].items()) {
    std::size_t order = 0;
    try {
      order = static_cast<std::size_t>(std::stoull(key));
    } catch (...) {
      throw Error(ErrorKind::ParseError, path + ": counts key \"" + key + "\" is not an order");
    }
    if (!value.is_number_unsigned() || value.get<std::size_t>() == 0) {
      throw Error(ErrorKind::ParseError,
                  path + ": count for order " + key + " must be a positive integer");
    }
    counts.counts[order] = value.get<std::size_t>();
  }
  for (std::size_t n = 1; n <= counts.bound; ++n) {
    if (!counts.counts.count(n)) {
      throw Error(ErrorKind::ParseError,
                  path + ": no class count for order " + std::to_string(n));
    }
  }
  return counts;
}

CompletenessReport validate_completeness(const Catalog& catalog, const ReferenceCounts& counts,
                                         std::size_t bound) {
  if (bound > counts.bound) {
    throw Error(ErrorKind::BadParameter,
                "completeness bound " + std::to_string(bound) +
                    " exceeds the reference table bound " + std::to_string(counts.bound));
  }

  CompletenessReport report;
  report.bound = bound;
  report.orders.resize(bound);
  // Orders are independent; the deduplication per order <= 24 is the pricey
  // part (isomorphism tests), so fan out across orders.
  parallel_for(bound, [&](std::size_t idx) {
    std::size_t n = idx + 1;
    OrderCompleteness oc;
    oc.order = n;
    auto expected_it = counts.counts.find(n);
    oc.expected_classes = expected_it == counts.counts.end() ? 0 : expected_it->second;

    std::vector<const CatalogEntry*> reps;
    bool complete_range_duplicate = false;
    for (const CatalogEntry& entry : catalog) {
      if (entry.order != n) continue;
      const CatalogEntry* duplicate_of = nullptr;
      for (const CatalogEntry* rep : reps) {
        if (are_isomorphic(entry.group, rep->group).isomorphic) {
          duplicate_of = rep;
          break;
        }
      }
      if (duplicate_of != nullptr) {
        oc.duplicate_pairs.emplace_back(duplicate_of->id, entry.id);
        if (entry.has_tag("complete-range") && duplicate_of->has_tag("complete-range")) {
          complete_range_duplicate = true;
        }
      } else {
        reps.push_back(&entry);
      }
    }
    oc.found_classes = reps.size();
    oc.passed = oc.found_classes == oc.expected_classes && !complete_range_duplicate;
    report.orders[idx] = std::move(oc);
  });

  report.passed = std::all_of(report.orders.begin(), report.orders.end(),
                              [](const OrderCompleteness& oc) { return oc.passed; });
  return report;
}

bool LinearForm::matches(std::size_t value, std::size_t group_order) const {
  std::int64_t lhs = static_cast<std::int64_t>(value) * divisor;
  std::int64_t rhs = coeff * static_cast<std::int64_t>(group_order) + offset;
  return lhs == rhs;
}

LinearForm parse_linear_form(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& message) -> void {
    throw Error(ErrorKind::MalformedPredicate, "\"" + text + "\": " + message);
  };
  auto at = [&]() -> char {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  };
  auto integer = [&]() -> std::int64_t {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return v;
  };

  LinearForm form;
  std::int64_t inner_offset = 0;
  bool has_g = false;

  char c = at();
  if (c == 'G') {
    ++pos;
    has_g = true;
  } else if (c == '(') {
    ++pos;
    if (at() != 'G') fail("expected G after '('");
    ++pos;
    char sign = at();
    if (sign != '+' && sign != '-') fail("expected + or - inside parentheses");
    ++pos;
    std::int64_t k = integer();
    inner_offset = sign == '+' ? k : -k;
    if (at() != ')') fail("expected ')'");
    ++pos;
    has_g = true;
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    inner_offset = integer();
  } else {
    fail("expected G, (G±c), or a number");
  }

  form.coeff = has_g ? 1 : 0;
  form.divisor = 1;
  if (has_g && at() == '/') {
    ++pos;
    form.divisor = integer();
    if (form.divisor == 0) fail("division by zero");
  }

  form.offset = inner_offset;
  char tail = at();
  if (tail == '+' || tail == '-') {
    ++pos;
    std::int64_t k = integer();
    form.offset += (tail == '+' ? k : -k) * form.divisor;
  }
  skip_ws();
  if (pos != text.size()) fail("trailing input");
  return form;
}

std::vector<const CatalogEntry*> query(const Catalog& catalog, const QueryPredicate& predicate) {
  std::vector<const CatalogEntry*> result;
  for (const CatalogEntry& entry : catalog) {
    std::size_t n = entry.order;
    if (predicate.min_order && n < *predicate.min_order) continue;
    if (predicate.max_order && n > *predicate.max_order) continue;
    if (predicate.parity == Parity::Odd && n % 2 == 0) continue;
    if (predicate.parity == Parity::Even && n % 2 != 0) continue;
    if (predicate.exponent && entry.census.exponent != *predicate.exponent) continue;
    if (predicate.involution_count &&
        !predicate.involution_count->matches(entry.census.involution_count, n)) {
      continue;
    }
    if (predicate.cyclic_count) {
      const auto& [relation, form] = *predicate.cyclic_count;
      std::int64_t lhs = static_cast<std::int64_t>(entry.census.cyclic_count) * form.divisor;
      std::int64_t rhs = form.coeff * static_cast<std::int64_t>(n) + form.offset;
      bool ok = relation == Relation::Eq ? lhs == rhs
                : relation == Relation::Le ? lhs <= rhs
                                           : lhs >= rhs;
      if (!ok) continue;
    }
    result.push_back(&entry);
  }
  std::sort(result.begin(), result.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
    if (a->order != b->order) return a->order < b->order;
    return a->id < b->id;
  });
  return result;
}

}  // namespace cyc
