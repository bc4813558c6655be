#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyc/catalog.hpp"

namespace cyc {

// One quantified check instance inside a suite. `expected` and `actual` are
// printable values; a failing check always carries both sides.
struct CheckResult {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::string scope;  // what was quantified over (orders, primes, depths)
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool passed = false;  // conjunction of checks
  double runtime_ms = 0.0;
};

struct VerifierConfig {
  std::size_t order_cap = kDefaultOrderCap;
  std::vector<std::size_t> primes = {2, 3, 5, 7};       // doubling / product formula
  std::size_t family_depth_n = 3;                        // M(16) x Z2^n prefix
  std::size_t family_depth_k = 2;                        // B x Z2^(k+1) prefix
  std::vector<std::size_t> family_primes = {3, 5, 7};    // M(16) x Zp
};

// Identity |C(G)| = sum 1/phi(|x|), class sizes, and class-size totals, for
// every catalog entry.
VerificationReport verify_phi_identity(const Catalog& catalog);

// The fixed table of (cyclic_count, involution_count) values for the groups
// the classification theorems name (14 rows).
VerificationReport verify_census_table(const Catalog& catalog);

// |C(G x Zp)| = 2|C(G)| whenever p = 2 or p does not divide |G|.
VerificationReport verify_doubling(const Catalog& catalog,
                                   const std::vector<std::size_t>& primes,
                                   std::size_t order_cap = kDefaultOrderCap);

// |C(G x Zp)| = 2|C(G)| + (p-2) * sum over {x : p divides |x|} of
// 1/phi(|x|), in exact fractions, for every pair including p | |G|.
VerificationReport verify_product_formula(const Catalog& catalog,
                                          const std::vector<std::size_t>& primes,
                                          std::size_t order_cap = kDefaultOrderCap);

// |G| - (r-2) <= |C(G)| <= |G| - (r-1)/2 for entries with
// involution_count = |G| - r, 1 < r < |G|.
VerificationReport verify_bounds(const Catalog& catalog);

// One classification suite by id (thm3.1 .. thm7.3); see suite_ids().
// Throws UnknownTheoremId for anything not in the table.
VerificationReport verify_classification(const Catalog& catalog,
                                         const std::string& theorem_id);

// Groups with involution_count = |G| - r for r in {1,3,5,7} match the
// classified lists exactly; r = 1 is checked as a biconditional with
// exponent <= 2.
VerificationReport verify_o2_classification(const Catalog& catalog);

// Family prefixes: |C(M16 x Z2^n)| = |G|/2; |C(M16 x Zp)| = |G|/p;
// |C(B x Z2^(k+1))| = |G|/2 + 2^k for B in {Z3, EA(3,2), Heis(3)}.
VerificationReport verify_families(const VerifierConfig& config);

// Divisor restrictions for groups of order 2m with |C| = m + r, r >= 1:
// involution_count = 2r-1 (r <= m) forces prime divisors within {2,3};
// involution_count = 2r+1 (r <= m-3) forces them within {2,3} or {2,5}.
VerificationReport verify_prime_divisor_lemma(const Catalog& catalog);

// Every cyclic subgroup that is the unique cyclic subgroup of its order in
// its group is normal.
VerificationReport verify_normality(const Catalog& catalog);

// All suite ids in the fixed run order.
const std::vector<std::string>& suite_ids();

// Runs one suite by id (any id from suite_ids()); UnknownTheoremId otherwise.
VerificationReport run_suite(const std::string& suite_id, const Catalog& catalog,
                             const VerifierConfig& config);

// Every suite, in suite_ids() order.
std::vector<VerificationReport> run_all(const Catalog& catalog,
                                        const VerifierConfig& config);

// Stable serializations (runtime_ms excluded from the text form's
// determinism contract; JSON includes it as a separate field).
std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace cyc
