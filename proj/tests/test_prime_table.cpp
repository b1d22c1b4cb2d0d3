#include <doctest.h>

#include <cstdint>
#include <vector>

#include "hcnlab/errors.hpp"
#include "hcnlab/prime_table.hpp"

using namespace hcnlab;

namespace {

// Independent oracle: trial division.
bool oracle_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t oracle_pi(std::uint64_t x) {
    std::uint64_t count = 0;
    for (std::uint64_t n = 2; n <= x; ++n) {
        if (oracle_is_prime(n)) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("build_table produces exactly the primes up to the limit") {
    CHECK(PrimeTable::build(10).primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(PrimeTable::build(2).primes() == std::vector<std::uint64_t>{2});

    const PrimeTable t600 = PrimeTable::build(600);
    CHECK(t600.primes().back() == 599);  // oracle: 599 is prime, 600 is not
    CHECK(oracle_is_prime(599));

    CHECK_THROWS_AS(PrimeTable::build(1), usage_error);
    CHECK_THROWS_AS(PrimeTable::build(0), usage_error);
}

TEST_CASE("sieve cross-checks against trial division up to 10^5") {
    const PrimeTable table = PrimeTable::build(100'000);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 2; n <= 100'000; ++n) {
        if (oracle_is_prime(n)) expected.push_back(n);
    }
    REQUIRE(table.primes() == expected);
}

TEST_CASE("prime_pi") {
    const PrimeTable table = PrimeTable::build(1000);
    CHECK(table.prime_pi(10) == 4);
    CHECK(table.prime_pi(1) == 0);
    CHECK(table.prime_pi(0) == 0);
    CHECK(table.prime_pi(181) == oracle_pi(181));
    CHECK(table.prime_pi(181) == 42);
    CHECK_THROWS_AS(table.prime_pi(1001), out_of_range_error);

    SUBCASE("pi steps by one exactly at primes") {
        for (std::uint64_t x = 2; x <= 1000; ++x) {
            const std::uint64_t step = table.prime_pi(x) - table.prime_pi(x - 1);
            CHECK(step == (oracle_is_prime(x) ? 1u : 0u));
        }
    }
}

TEST_CASE("pi_gap uses floor(x/2)") {
    const PrimeTable table = PrimeTable::build(1000);
    CHECK(table.pi_gap(182) == oracle_pi(182) - oracle_pi(91));
    CHECK(table.pi_gap(182) == 18);
    CHECK(table.pi_gap(2) == 1);
    CHECK(table.pi_gap(12) == 2);  // pi(12)=5, pi(6)=3
    CHECK_THROWS_AS(table.pi_gap(2000), out_of_range_error);

    SUBCASE("Bertrand restated: pi_gap(x) >= 1 for all x >= 2") {
        const PrimeTable big = PrimeTable::build(100'000);
        for (std::uint64_t x = 2; x <= big.limit(); ++x) {
            if (big.pi_gap(x) < 1) {
                CAPTURE(x);
                REQUIRE(big.pi_gap(x) >= 1);
            }
        }
    }
}

TEST_CASE("next_prime") {
    const PrimeTable table = PrimeTable::build(1000);
    CHECK(table.next_prime(7) == 11);
    CHECK(table.next_prime(1) == 2);
    CHECK(table.next_prime(181) == 191);  // oracle: 182..190 all composite
    for (std::uint64_t n = 182; n < 191; ++n) CHECK(!oracle_is_prime(n));
    CHECK_THROWS_AS(table.next_prime(999), out_of_range_error);
}

TEST_CASE("bertrand_check") {
    SUBCASE("exhaustive to 10^6") {
        const auto report = bertrand_check(PrimeTable::build(1'000'000));
        CHECK(report.passed);
        CHECK(report.rows.empty());
    }
    SUBCASE("tiny tables") {
        CHECK(bertrand_check(PrimeTable::build(3)).passed);  // pair (2,3): 3 < 4
        CHECK(bertrand_check(PrimeTable::build(100)).passed);
    }
    SUBCASE("next_prime(p) < 2p over the full table") {
        const PrimeTable table = PrimeTable::build(100'000);
        const auto& primes = table.primes();
        for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
            REQUIRE(primes[i + 1] < 2 * primes[i]);
        }
    }
    SUBCASE("doctored table is flagged") {
        // 2, 5 is prime-only and increasing but violates p_{k+1} < 2 p_k.
        const PrimeTable doctored = PrimeTable::from_primes({2, 5}, 6);
        const auto report = bertrand_check(doctored);
        CHECK(!report.passed);
        REQUIRE(report.rows.size() == 1);
        CHECK(report.rows[0][0] == "2");
    }
}

TEST_CASE("ramanujan_prime") {
    const PrimeTable table = PrimeTable::build(100'000);

    SUBCASE("R_2 = 11") { CHECK(ramanujan_prime(table, 2) == 11); }

    SUBCASE("exhaustive-scan oracle for small k") {
        // Oracle: directly find the smallest m with pi_gap >= k on [m, limit].
        for (std::uint64_t k = 1; k <= 3; ++k) {
            std::uint64_t worst = 1;
            for (std::uint64_t x = 2; x <= table.limit(); ++x) {
                if (table.pi_gap(x) < k) worst = x;
            }
            CHECK(ramanujan_prime(table, k) == worst + 1);
        }
        CHECK(ramanujan_prime(table, 1) == 2);
        CHECK(ramanujan_prime(table, 3) == 17);
    }

    SUBCASE("monotone nondecreasing in k, and the result is prime") {
        std::uint64_t prev = 0;
        for (std::uint64_t k = 1; k <= 8; ++k) {
            const std::uint64_t rk = ramanujan_prime(table, k);
            CHECK(rk >= prev);
            CHECK(oracle_is_prime(rk));
            prev = rk;
        }
    }

    SUBCASE("uncertifiable table is an error") {
        const PrimeTable tiny = PrimeTable::build(20);
        CHECK_THROWS_AS(ramanujan_prime(tiny, 4), insufficient_table_error);
    }
}

TEST_CASE("from_primes validates its input") {
    CHECK_THROWS_AS(PrimeTable::from_primes({3, 2}, 10), integrity_error);
    CHECK_THROWS_AS(PrimeTable::from_primes({2, 3, 9}, 10), integrity_error);
    CHECK_THROWS_AS(PrimeTable::from_primes({2, 11}, 10), integrity_error);
    const PrimeTable ok = PrimeTable::from_primes({2, 3, 5, 7}, 10);
    CHECK(ok.prime_pi(10) == 4);
}
