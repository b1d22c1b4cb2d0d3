#include "hcnlab/prime_table.hpp"

#include <algorithm>
#include <string>

#include "hcnlab/errors.hpp"

namespace hcnlab {

namespace {

constexpr std::uint64_t kMaxSieveLimit = 200'000'000;  // sieving beyond ~10^8 is out of scope

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

PrimeTable PrimeTable::build(std::uint64_t limit) {
    if (limit < 2) throw usage_error("sieve limit must be >= 2, got " + std::to_string(limit));
    if (limit > kMaxSieveLimit) {
        throw usage_error("sieve limit " + std::to_string(limit) + " exceeds the supported 2*10^8");
    }

    // Plain bit sieve of Eratosthenes.
    std::vector<std::uint64_t> bits((limit + 1 + 63) / 64, ~std::uint64_t{0});
    auto clear = [&bits](std::uint64_t i) { bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); };
    auto test = [&bits](std::uint64_t i) { return (bits[i >> 6] >> (i & 63)) & 1; };
    clear(0);
    clear(1);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!test(p)) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) clear(m);
    }

    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (test(i)) primes.push_back(i);
    }
    return PrimeTable(limit, std::move(primes));
}

PrimeTable PrimeTable::from_primes(std::vector<std::uint64_t> primes, std::uint64_t limit) {
    if (limit < 2) throw usage_error("table limit must be >= 2");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i > 0 && primes[i] <= primes[i - 1]) {
            throw integrity_error("prime list is not strictly increasing at position " +
                                  std::to_string(i));
        }
        if (primes[i] > limit) {
            throw integrity_error("prime " + std::to_string(primes[i]) + " exceeds table limit");
        }
        // Spot-check primality: cheap elements fully, the rest sampled.
        if (primes[i] < 10'000 || i % 101 == 0 || i + 1 == primes.size()) {
            if (!is_prime_trial(primes[i])) {
                throw integrity_error(std::to_string(primes[i]) + " is not prime");
            }
        }
    }
    return PrimeTable(limit, std::move(primes));
}

std::uint64_t PrimeTable::prime_pi(std::uint64_t x) const {
    if (x > limit_) {
        throw out_of_range_error("pi(" + std::to_string(x) + ") exceeds table limit " +
                                 std::to_string(limit_));
    }
    return std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin();
}

std::uint64_t PrimeTable::pi_gap(std::uint64_t x) const {
    return prime_pi(x) - prime_pi(x / 2);
}

std::uint64_t PrimeTable::next_prime(std::uint64_t x) const {
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    if (it == primes_.end()) {
        throw out_of_range_error("next prime after " + std::to_string(x) +
                                 " exceeds table limit " + std::to_string(limit_));
    }
    return *it;
}

bool PrimeTable::contains(std::uint64_t p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

VerificationReport bertrand_check(const PrimeTable& table) {
    VerificationReport report;
    report.check = "bertrand";
    report.param("limit", table.limit());
    report.columns = {"p_k", "p_k1"};
    const auto& primes = table.primes();
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        ++pairs;
        if (primes[i + 1] >= 2 * primes[i]) {
            report.rows.push_back({std::to_string(primes[i]), std::to_string(primes[i + 1])});
        }
    }
    report.param("pairs_checked", pairs);
    report.passed = report.rows.empty();
    return report;
}

std::uint64_t ramanujan_prime(const PrimeTable& table, std::uint64_t k) {
    if (k < 1) throw usage_error("Ramanujan prime index must be >= 1");
    if (table.pi_gap(table.limit()) < k + 2) {
        throw insufficient_table_error(
            "table limit " + std::to_string(table.limit()) +
            " gives pi_gap " + std::to_string(table.pi_gap(table.limit())) +
            " < k+2 = " + std::to_string(k + 2) + "; result would be uncertified");
    }
    std::uint64_t worst = 1;  // pi_gap(1) = 0 < k always
    for (std::uint64_t x = 2; x <= table.limit(); ++x) {
        if (table.pi_gap(x) < k) worst = x;
    }
    return worst + 1;
}

}  // namespace hcnlab
