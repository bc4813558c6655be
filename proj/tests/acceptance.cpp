// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria. Criteria quantify over the shipped catalog and the
// reference counts, with wall-clock budgets on the heavy sweeps.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "cyc/catalog.hpp"
#include "cyc/error.hpp"
#include "cyc/construct.hpp"
#include "cyc/expr.hpp"
#include "cyc/group.hpp"
#include "cyc/isomorphism.hpp"
#include "cyc/verifier.hpp"

using namespace cyc;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void criterion(int number, const std::string& description, bool ok, double elapsed_ms,
               double budget_ms) {
  bool within = budget_ms <= 0 || elapsed_ms < budget_ms;
  bool pass = ok && within;
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << ": criterion " << number << " — " << description
            << " (" << static_cast<long>(elapsed_ms) << " ms";
  if (budget_ms > 0) std::cout << " of " << static_cast<long>(budget_ms) << " allowed";
  if (!within) std::cout << ", over budget";
  std::cout << ")\n";
}

const CatalogEntry* find_entry(const Catalog& catalog, const std::string& id) {
  for (const CatalogEntry& entry : catalog) {
    if (entry.id == id) return &entry;
  }
  return nullptr;
}

}  // namespace

int main() {
  const std::string data_dir = CYC_DATA_DIR;
  Catalog catalog;
  try {
    catalog = load_catalog(data_dir + "/catalog.jsonl");
  } catch (const Error& e) {
    std::cout << "FAIL: could not load the catalog: " << e.what() << "\n";
    return 1;
  }
  VerifierConfig config;

  // 1. Totient identity across the whole catalog, exact arithmetic.
  {
    auto start = Clock::now();
    VerificationReport report = verify_phi_identity(catalog);
    double elapsed = ms_since(start);
    bool ok = report.passed && catalog.size() >= 92;
    criterion(1,
              "totient identity on all " + std::to_string(catalog.size()) +
                  " catalog groups (need >= 92)",
              ok, elapsed, 5000);
  }

  // 2. The fourteen published (|C|, O2) pairs.
  {
    auto start = Clock::now();
    VerificationReport report = verify_census_table(catalog);
    criterion(2, "the 14 published census pairs reproduce exactly", report.passed,
              ms_since(start), 0);
  }

  // 3. Doubling law plus the general product-census formula.
  {
    auto start = Clock::now();
    VerificationReport doubling = verify_doubling(catalog, config.primes, config.order_cap);
    VerificationReport formula =
        verify_product_formula(catalog, config.primes, config.order_cap);
    double elapsed = ms_since(start);
    bool ok = doubling.passed && formula.passed && doubling.checks.size() >= 296 &&
              formula.checks.size() >= 296;  // 74 complete-range entries x 4 primes
    criterion(3, "doubling law and correction-term formula across catalog x {2,3,5,7}", ok,
              elapsed, 60000);
  }

  // 4. Two-sided count bounds from the involution count.
  {
    auto start = Clock::now();
    VerificationReport report = verify_bounds(catalog);
    criterion(4, "count bounds |G|-(r-2) <= |C| <= |G|-(r-1)/2 on " +
                     std::to_string(report.checks.size()) + " groups",
              report.passed, ms_since(start), 0);
  }

  // 5. Every classification suite, both directions, catalog-bounded.
  {
    auto start = Clock::now();
    const std::vector<std::string> suites = {
        "thm3.1", "thm3.2", "thm3.3", "thm3.4", "thm4.1", "thm4.2", "thm4.3", "thm5.1",
        "thm5.2", "thm5.3", "thm5.4", "thm5.5", "thm7.0", "thm7.1", "thm7.3",
        "o2-classification"};
    bool ok = true;
    for (const std::string& id : suites) {
      VerificationReport report = run_suite(id, catalog, config);
      if (!report.passed) {
        ok = false;
        std::cout << "  failing suite: " << id << "\n";
      }
    }
    criterion(5, "all 16 classification suites (if and only-if directions)", ok,
              ms_since(start), 0);
  }

  // 6. Family prefixes up to order 216.
  {
    auto start = Clock::now();
    VerificationReport report = verify_families(config);
    criterion(6, "family prefix censuses (" + std::to_string(report.checks.size()) +
                     " members, largest order 216)",
              report.passed, ms_since(start), 120000);
  }

  // 7. Per-order completeness against the reference counts.
  {
    auto start = Clock::now();
    bool ok = false;
    std::string note;
    try {
      ReferenceCounts counts = load_reference_counts(data_dir + "/reference_counts.json");
      CompletenessReport report = validate_completeness(catalog, counts, counts.bound);
      bool order16 = false, order24 = false;
      for (const OrderCompleteness& oc : report.orders) {
        if (oc.order == 16) order16 = oc.found_classes == 14 && oc.passed;
        if (oc.order == 24) order24 = oc.found_classes == 15 && oc.passed;
      }
      ok = report.passed && order16 && order24;
    } catch (const Error& e) {
      note = e.what();
    }
    criterion(7, "catalog completeness per order <= 24 (16 -> 14, 24 -> 15)", ok,
              ms_since(start), 120000);
    if (!note.empty()) std::cout << "  " << note << "\n";
  }

  // 8. Prime-divisor restrictions under the count/involution hypotheses.
  {
    auto start = Clock::now();
    VerificationReport report = verify_prime_divisor_lemma(catalog);
    criterion(8, "prime-divisor restrictions ({2,3} and {2,3}/{2,5} cases, " +
                     std::to_string(report.checks.size()) + " instances)",
              report.passed, ms_since(start), 0);
  }

  // 9. Normality of unique-order cyclic subgroups plus isomorphism sanity.
  {
    auto start = Clock::now();
    VerificationReport normal = verify_normality(catalog);

    bool reflexive = true;
    for (const CatalogEntry& entry : catalog) {
      if (!are_isomorphic(entry.group, entry.group).isomorphic) {
        reflexive = false;
        std::cout << "  not reflexive on " << entry.id << "\n";
      }
    }

    bool symmetric = true;
    const CatalogEntry* dic24 = find_entry(catalog, "24.05");
    const CatalogEntry* z8z2 = find_entry(catalog, "16.02");
    const CatalogEntry* m16 = find_entry(catalog, "16.06");
    if (dic24 == nullptr || z8z2 == nullptr || m16 == nullptr) {
      symmetric = false;
    } else {
      Group rebuilt = dicyclic(24);
      symmetric = are_isomorphic(dic24->group, rebuilt).isomorphic &&
                  are_isomorphic(rebuilt, dic24->group).isomorphic &&
                  !are_isomorphic(z8z2->group, m16->group).isomorphic &&
                  !are_isomorphic(m16->group, z8z2->group).isomorphic;
    }

    // Fingerprints must agree whenever the table search certifies a match.
    bool sound = true;
    for (const CatalogEntry& entry : catalog) {
      if (entry.order != 16) continue;
      Group rebuilt = eval_expr(entry.expr_text);
      if (!are_isomorphic(entry.group, rebuilt).isomorphic ||
          !(fingerprint(entry.group) == fingerprint(rebuilt))) {
        sound = false;
        std::cout << "  fingerprint/search disagreement on " << entry.id << "\n";
      }
    }

    criterion(9, "unique cyclic subgroups normal; isomorphism reflexive, symmetric, "
                 "fingerprint-sound",
              normal.passed && reflexive && symmetric && sound, ms_since(start), 0);
  }

  std::cout << (failures == 0 ? "acceptance: all 9 criteria passed"
                              : "acceptance: " + std::to_string(failures) +
                                    " criteria failed")
            << "\n";
  return failures;
}
