#pragma once

#include <cstdint>
#include <vector>

#include "hcnlab/report.hpp"

namespace hcnlab {

/// Sorted table of all primes up to an inclusive limit. Immutable after
/// construction; safe for any number of concurrent readers.
///
/// All counting is exact integer arithmetic. Queries past the limit are hard
/// out_of_range_error, never silent truncation or implicit regrowth.
class PrimeTable {
public:
    /// Sieves all primes <= limit. limit must be >= 2 and <= 2*10^8.
    static PrimeTable build(std::uint64_t limit);

    /// Wraps an externally supplied prime list (interop and cross-check
    /// input). Validates ordering and spot-checks primality by trial
    /// division; completeness of the list is trusted, not verified.
    static PrimeTable from_primes(std::vector<std::uint64_t> primes, std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
    std::uint64_t count() const noexcept { return primes_.size(); }

    /// pi(x): number of primes <= x. Requires x <= limit().
    std::uint64_t prime_pi(std::uint64_t x) const;

    /// pi(x) - pi(floor(x/2)). Requires x <= limit().
    std::uint64_t pi_gap(std::uint64_t x) const;

    /// Smallest prime strictly greater than x. Errors if the answer would
    /// exceed limit().
    std::uint64_t next_prime(std::uint64_t x) const;

    bool contains(std::uint64_t p) const;

private:
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

/// Checks p_{k+1} < 2*p_k over every consecutive pair in the table.
/// Violating pairs are listed as witnesses (expected: none).
VerificationReport bertrand_check(const PrimeTable& table);

/// Smallest m such that pi_gap(x) >= k for every integer x in [m, limit].
/// Certification heuristic: requires pi_gap(limit) >= k + 2, otherwise
/// throws insufficient_table_error.
std::uint64_t ramanujan_prime(const PrimeTable& table, std::uint64_t k);

}  // namespace hcnlab
