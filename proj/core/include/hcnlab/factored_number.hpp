#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcnlab/big_value.hpp"

namespace hcnlab {

/// Exponent vector over the first r primes (2, 3, 5, ...). All exponents are
/// >= 1; the empty vector represents n = 1. Candidate / record form
/// additionally has non-increasing exponents, which the generator enforces.
struct FactoredNumber {
    std::vector<std::uint32_t> exponents;

    bool operator==(const FactoredNumber&) const = default;
};

/// General prime -> exponent map with strictly increasing primes and
/// positive exponents. Carries the factorization of d(n), so beta1 (the
/// exponent of 2) and q_s (the largest prime factor) live here.
struct Factorization {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;

    bool operator==(const Factorization&) const = default;
};

/// The first `count` primes, by trial division. Pure and thread-safe.
std::vector<std::uint64_t> first_primes(std::size_t count);

bool non_increasing(const FactoredNumber& f);

/// Exact product of p_j^alpha_j over the first r primes.
BigValue value(const FactoredNumber& f);

/// Exact product of (alpha_j + 1); d(n) for n = value(f).
BigValue divisor_count(const FactoredNumber& f);

/// Prime factorization of divisor_count(f), derived by factoring each
/// (alpha_j + 1) with trial division and merging. Never factors the big
/// product directly.
Factorization divisor_count_factorization(const FactoredNumber& f);

/// Exact ordering of value(a) vs value(b).
std::strong_ordering compare(const FactoredNumber& a, const FactoredNumber& b);

/// Trial-division factorization of a machine word.
Factorization factor_uint64(std::uint64_t n);

BigValue reconstruct(const Factorization& f);
std::uint32_t exponent_of(const Factorization& f, std::uint64_t prime);
std::uint32_t beta1(const Factorization& f);
std::optional<std::uint64_t> largest_prime(const Factorization& f);
std::optional<std::uint64_t> largest_odd_prime(const Factorization& f);

/// Canonical factorization string: space-separated `p^e` terms with `^1`
/// omitted, e.g. `2^5 3^2 5^2 7`. The empty product renders as `1`.
std::string format_factorization(const Factorization& f);

/// Accepts both `7` and `7^1` forms. Throws parse_error (line 0) on syntax
/// problems and integrity_error on non-increasing primes or zero exponents.
Factorization parse_factorization(std::string_view text);

/// Requires support exactly on the first r primes (2, 3, 5, ... with no
/// gaps); throws integrity_error otherwise.
FactoredNumber to_factored_number(const Factorization& f);

Factorization to_factorization(const FactoredNumber& f);

}  // namespace hcnlab
