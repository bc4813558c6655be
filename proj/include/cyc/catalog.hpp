#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyc/expr.hpp"
#include "cyc/group.hpp"

namespace cyc {

// One catalog row, fully evaluated: the group is built from `expr` at load
// time and its census computed fresh (expected triples in the file are
// assertions, never caches).
struct CatalogEntry {
  std::string id;
  std::size_t order = 0;
  std::string expr_text;
  std::optional<std::array<std::size_t, 3>> expected;  // [cyclic_count, involution_count, exponent]
  std::vector<std::string> tags;

  Group group;
  Census census;

  bool has_tag(const std::string& tag) const;
};

using Catalog = std::vector<CatalogEntry>;

// Isomorphism-class counts per order, loaded from an external data file.
struct ReferenceCounts {
  std::size_t bound = 0;
  std::map<std::size_t, std::size_t> counts;  // order -> class count
  std::string source;
};

// Loads a JSONL catalog ({"id","order","expr","expected"?,"tags"} per line).
// Entries evaluate concurrently; results are deterministic. Errors:
// ParseError (with line number; also duplicate ids), EvalError (with entry
// id; also raw tables lacking the "raw-justified" tag), ExpectedMismatch
// (entry id, field, got/want) when the file's order or expected triple
// disagrees with the evaluated group.
Catalog load_catalog(const std::string& path, std::size_t order_cap = kDefaultOrderCap);

ReferenceCounts load_reference_counts(const std::string& path);

// Per-order outcome of completeness validation.
struct OrderCompleteness {
  std::size_t order = 0;
  std::size_t found_classes = 0;
  std::size_t expected_classes = 0;
  // Ids of entries that duplicate an earlier entry of the same order.
  std::vector<std::pair<std::string, std::string>> duplicate_pairs;
  bool passed = false;
};

struct CompletenessReport {
  std::size_t bound = 0;
  std::vector<OrderCompleteness> orders;  // ascending order
  bool passed = false;
};

// Deduplicates catalog entries of each order <= bound by are_isomorphic and
// compares class counts against the reference table. Passes iff every order
// matches exactly and no two "complete-range" entries are isomorphic.
CompletenessReport validate_completeness(const Catalog& catalog,
                                         const ReferenceCounts& counts,
                                         std::size_t bound);

// a*|G|/b + c as the normalized predicate value*b = a*n + offset, compared
// exactly by cross-multiplication (no division, no rounding).
struct LinearForm {
  std::int64_t coeff = 0;   // a
  std::int64_t offset = 0;  // combined constant, already scaled by b
  std::int64_t divisor = 1; // b > 0

  bool matches(std::size_t value, std::size_t group_order) const;
};

// Parses the CLI form grammar: PRIMARY (('+'|'-') INT)? with
// PRIMARY := ('G' | '(' G ('+'|'-') INT ')') ('/' INT)? | INT.
// Examples: "G/2", "G", "(G-1)/2", "G/2+1", "G-2", "7".
// Throws MalformedPredicate.
LinearForm parse_linear_form(const std::string& text);

enum class Parity { Any, Odd, Even };
enum class Relation { Eq, Le, Ge };

struct QueryPredicate {
  std::optional<std::pair<Relation, LinearForm>> cyclic_count;
  std::optional<LinearForm> involution_count;
  std::optional<std::size_t> exponent;
  std::optional<std::size_t> min_order;
  std::optional<std::size_t> max_order;
  Parity parity = Parity::Any;
};

// Entries satisfying every given clause, ordered by (order, id).
std::vector<const CatalogEntry*> query(const Catalog& catalog,
                                       const QueryPredicate& predicate);

}  // namespace cyc
