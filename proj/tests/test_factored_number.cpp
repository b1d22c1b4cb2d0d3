#include <doctest.h>

#include <cstdint>
#include <random>

#include "hcnlab/errors.hpp"
#include "hcnlab/factored_number.hpp"

using namespace hcnlab;

namespace {

// Independent oracle: count divisors of n by full enumeration.
std::uint64_t oracle_divisor_count(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

FactoredNumber fn(std::vector<std::uint32_t> exps) { return FactoredNumber{std::move(exps)}; }

}  // namespace

TEST_CASE("value of a factored number") {
    CHECK(value(fn({})) == 1);
    CHECK(value(fn({2, 1})) == 12);
    CHECK(value(fn({4, 2, 1, 1})) == 5040);  // 16*9*5*7
    CHECK(value(fn({5, 2, 2, 1})) == 50400);
}

TEST_CASE("divisor_count matches divisor enumeration") {
    CHECK(divisor_count(fn({2, 1})) == 6);
    CHECK(divisor_count(fn({})) == 1);
    CHECK(divisor_count(fn({5, 2, 2, 1})) == oracle_divisor_count(50400));
    CHECK(divisor_count(fn({5, 2, 2, 1})) == 108);

    SUBCASE("random exponent vectors with value <= 10^7") {
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<int> len(0, 5), exp(1, 6);
        int tested = 0;
        while (tested < 200) {
            std::vector<std::uint32_t> exps;
            const int n = len(rng);
            for (int i = 0; i < n; ++i) exps.push_back(exp(rng));
            const BigValue v = value(fn(exps));
            if (v > 10'000'000) continue;
            ++tested;
            CHECK(divisor_count(fn(exps)) == oracle_divisor_count(v.get_ui()));
        }
    }
}

TEST_CASE("divisor_count_factorization") {
    SUBCASE("d = 60 = 2^2 * 3 * 5") {
        const Factorization f = divisor_count_factorization(fn({4, 2, 1, 1}));
        CHECK(f.factors ==
              std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 1}, {5, 1}});
        CHECK(beta1(f) == 2);
        CHECK(largest_prime(f) == 5);
    }
    SUBCASE("d = 2") {
        const Factorization f = divisor_count_factorization(fn({1}));
        CHECK(f.factors == std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 1}});
        CHECK(beta1(f) == 1);
        CHECK(largest_prime(f) == 2);
    }
    SUBCASE("d = 1200 = 2^4 * 3 * 5^2") {
        const Factorization f = divisor_count_factorization(fn({9, 4, 2, 1, 1}));
        CHECK(f.factors ==
              std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {3, 1}, {5, 2}});
        CHECK(beta1(f) == 4);
        CHECK(largest_prime(f) == 5);
    }
    SUBCASE("odd d has beta1 = 0 and q_s is odd") {
        const Factorization f = divisor_count_factorization(fn({2, 2}));  // d = 9
        CHECK(beta1(f) == 0);
        CHECK(largest_odd_prime(f) == 3);
    }
    SUBCASE("d = 1 has no largest prime") {
        const Factorization f = divisor_count_factorization(fn({}));
        CHECK(!largest_prime(f).has_value());
        CHECK(!largest_odd_prime(f).has_value());
    }
    SUBCASE("reconstruction identity on random vectors") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> len(0, 8), exp(1, 40);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<std::uint32_t> exps;
            const int n = len(rng);
            for (int i = 0; i < n; ++i) exps.push_back(exp(rng));
            const FactoredNumber f = fn(exps);
            CHECK(reconstruct(divisor_count_factorization(f)) == divisor_count(f));
        }
    }
}

TEST_CASE("compare orders by exact value") {
    CHECK(compare(fn({1}), fn({2})) == std::strong_ordering::less);
    CHECK(compare(fn({2, 1}), fn({1, 1, 1})) == std::strong_ordering::less);  // 12 < 30
    CHECK(compare(fn({5, 2, 2, 1}), fn({4, 2, 2, 1, 1})) == std::strong_ordering::less);
    CHECK(compare(fn({2, 1}), fn({2, 1})) == std::strong_ordering::equal);

    SUBCASE("antisymmetric and transitive on random triples") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> len(0, 6), exp(1, 10);
        auto random_fn = [&] {
            std::vector<std::uint32_t> exps;
            const int n = len(rng);
            for (int i = 0; i < n; ++i) exps.push_back(exp(rng));
            return fn(exps);
        };
        for (int trial = 0; trial < 200; ++trial) {
            const FactoredNumber a = random_fn(), b = random_fn(), c = random_fn();
            const auto ab = compare(a, b), ba = compare(b, a);
            if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
            if (ab == std::strong_ordering::greater) CHECK(ba == std::strong_ordering::less);
            if (ab == std::strong_ordering::equal) CHECK(ba == std::strong_ordering::equal);
            if (compare(a, b) != std::strong_ordering::greater &&
                compare(b, c) != std::strong_ordering::greater) {
                CHECK(compare(a, c) != std::strong_ordering::greater);
            }
        }
    }
}

TEST_CASE("divisor count is multiplicative across a coprime split") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> len(2, 8), exp(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint32_t> exps;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) exps.push_back(exp(rng));
        std::uniform_int_distribution<int> cut_at(1, n - 1);
        const int cut = cut_at(rng);
        const FactoredNumber whole = fn(exps);
        const FactoredNumber head =
            fn(std::vector<std::uint32_t>(exps.begin(), exps.begin() + cut));
        // The tail alone is not supported on the first primes, but its
        // divisor count only depends on the exponents.
        const FactoredNumber tail_as_head =
            fn(std::vector<std::uint32_t>(exps.begin() + cut, exps.end()));
        CHECK(divisor_count(whole) == divisor_count(head) * divisor_count(tail_as_head));
    }
}

TEST_CASE("factorization string round trip") {
    const Factorization f = parse_factorization("2^5 3^2 5^2 7");
    CHECK(format_factorization(f) == "2^5 3^2 5^2 7");
    CHECK(reconstruct(f) == 50400);

    CHECK(parse_factorization("7") == parse_factorization("7^1"));
    CHECK(format_factorization(parse_factorization("1")) == "1");
    CHECK(reconstruct(parse_factorization("1")) == 1);

    CHECK_THROWS_AS(parse_factorization(""), parse_error);
    CHECK_THROWS_AS(parse_factorization("2^"), parse_error);
    CHECK_THROWS_AS(parse_factorization("x"), parse_error);
    CHECK_THROWS_AS(parse_factorization("3 2"), integrity_error);
    CHECK_THROWS_AS(parse_factorization("2^0"), integrity_error);

    SUBCASE("round trip on random factored numbers") {
        std::mt19937 rng(31337);
        std::uniform_int_distribution<int> len(0, 7), exp(1, 30);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint32_t> exps;
            const int n = len(rng);
            for (int i = 0; i < n; ++i) exps.push_back(exp(rng));
            const Factorization f2 = to_factorization(fn(exps));
            CHECK(parse_factorization(format_factorization(f2)) == f2);
            CHECK(to_factored_number(f2).exponents == exps);
        }
    }
}

TEST_CASE("to_factored_number requires first-prime support") {
    CHECK_THROWS_AS(to_factored_number(parse_factorization("13")), integrity_error);
    CHECK_THROWS_AS(to_factored_number(parse_factorization("2 5")), integrity_error);
    CHECK(to_factored_number(parse_factorization("2^4 3^2 5^2 7")).exponents ==
          std::vector<std::uint32_t>{4, 2, 2, 1});
}

TEST_CASE("factor_uint64 by trial division") {
    CHECK(factor_uint64(60).factors ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 1}, {5, 1}});
    CHECK(factor_uint64(1).factors.empty());
    CHECK(factor_uint64(9973).factors ==
          std::vector<std::pair<std::uint64_t, std::uint32_t>>{{9973, 1}});
}
