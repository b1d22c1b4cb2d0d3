#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hcnlab/big_value.hpp"
#include "hcnlab/hcn_list.hpp"
#include "hcnlab/prime_table.hpp"
#include "hcnlab/report.hpp"

namespace hcnlab {

/// An (n, d(n)) pair of record entries: second.value must equal first.dcount.
using EntryPair = std::pair<RecordEntry, RecordEntry>;

/// For each prime 5 <= p_r <= prime_limit, with p_j the smallest prime
/// >= (p_r+1)/2, computes K = p_{r+1} p_{r+2} / (p_j p_{j-1} p_{j-2}) as an
/// exact rational and emits the rows with K >= 1 (K displayed to 5
/// decimals). Passes iff the emitted p_r set is exactly {7, 11, 13, 17, 19}.
VerificationReport lemma1_factor_table(const PrimeTable& table, std::uint64_t prime_limit = 512);

/// Window condition: every prime p_j of an entry lying in
/// [(p_r+1)/2, p_r+1] must have exponent 1. Entries above 50400 must all
/// satisfy it; among entries <= 50400 with largest prime 7 the violators
/// must be exactly {25200, 50400}.
VerificationReport verify_lemma1(const HcnList& list);

/// Last exponent is 1 for every entry except the values {1, 4, 36}.
VerificationReport verify_last_exponent(const HcnList& list);

/// For entries above 50400: the exponent of 2 in d(n) is at least
/// pi(p_r+1) - pi((p_r+1)/2).
VerificationReport verify_beta1_lower_bound(const HcnList& list, const PrimeTable& table);

/// For every entry h >= 12: writing h = 2^b1 * ... * q_s^bs, checks
/// 2^b1 < 8*q_s^2 exactly. Entries with no odd prime factor are skipped
/// and counted.
VerificationReport verify_lemma2(const HcnList& list);

/// For pairs (n, d(n)) with both record-setters and p_r >= 13: the largest
/// prime of d(n) is below the largest prime of n.
VerificationReport verify_lemma3(const std::vector<EntryPair>& pairs);

/// Integer scan of pi(x) - pi(x/2) > (x/6 - 3*sqrt(x)) / ln(x) over
/// (300, x_limit]. Floating fast path with a 1e-6 relative guard band;
/// near-ties are settled by exact comparison against certified enclosures
/// of sqrt and ln.
VerificationReport verify_lemma4(const PrimeTable& table, std::uint64_t x_limit,
                                 int threads = 0);

/// Exact big-integer scan of 2^(pi(p+1) - pi((p+1)/2)) >= 8p^2 over primes
/// p <= prime_limit. Emits the failing primes; passes iff every failing
/// prime is below 181.
VerificationReport threshold_search(const PrimeTable& table, std::uint64_t prime_limit = 2200);

/// Scan of 2^((x+1)/6 - 3*sqrt(x+1))/ln(x+1)) > 8x^2 over [x_min, x_limit],
/// with the same guard-band/enclosure discipline as verify_lemma4. Also
/// reports the smallest x0 <= 2164 from which the inequality holds through
/// x_limit. x_min defaults to the proven threshold 2164.
VerificationReport main_inequality_threshold(std::uint64_t x_limit, std::uint64_t x_min = 2164,
                                             int threads = 0);

/// value < p_r^pi(p_r) in exact arithmetic for every entry with r >= 1.
/// Known small-scale exceptions are configurable; with no explicit list the
/// frozen built-in set is used. Passes iff every violation is excepted.
VerificationReport erdos_bound_check(const HcnList& list, const PrimeTable& table,
                                     const std::optional<std::vector<BigValue>>& exceptions =
                                         std::nullopt);

/// The built-in exception set for erdos_bound_check (empirical, covers the
/// canonical record lists up to 181^42).
std::vector<BigValue> erdos_builtin_exceptions();

/// Generates records to `bound`, generates a second list covering every
/// divisor count seen, and emits each n (restricted to largest prime
/// <= max_prime) whose divisor count is itself a record-setter. Passes iff
/// the emitted pairs match the known joint table restricted to the bound.
VerificationReport joint_table(const BigValue& bound, std::uint64_t max_prime = 181,
                               const GenerateOptions& opts = {});

/// The 18 known (n, d(n)) joint record pairs, as decimal strings.
const std::vector<std::pair<std::string, std::string>>& joint_table_expected();

/// Builds the (n, d(n)) entry pairs of joint_table for verify_lemma3.
std::vector<EntryPair> make_joint_pairs(const HcnList& n_list, const HcnList& d_list,
                                        std::uint64_t max_prime);

}  // namespace hcnlab
