#include "hcnlab/factored_number.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hcnlab/errors.hpp"

namespace hcnlab {

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> primes;
    primes.reserve(count);
    for (std::uint64_t n = 2; primes.size() < count; ++n) {
        bool prime = true;
        for (std::uint64_t p : primes) {
            if (p * p > n) break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(n);
    }
    return primes;
}

bool non_increasing(const FactoredNumber& f) {
    for (std::size_t i = 1; i < f.exponents.size(); ++i) {
        if (f.exponents[i] > f.exponents[i - 1]) return false;
    }
    return true;
}

BigValue value(const FactoredNumber& f) {
    const auto primes = first_primes(f.exponents.size());
    BigValue out = 1;
    BigValue pw;
    for (std::size_t i = 0; i < f.exponents.size(); ++i) {
        if (f.exponents[i] == 0) throw integrity_error("exponent 0 in factored number");
        mpz_ui_pow_ui(pw.get_mpz_t(), primes[i], f.exponents[i]);
        out *= pw;
    }
    return out;
}

BigValue divisor_count(const FactoredNumber& f) {
    BigValue out = 1;
    for (std::uint32_t a : f.exponents) {
        mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), a + 1ul);
    }
    return out;
}

Factorization divisor_count_factorization(const FactoredNumber& f) {
    std::map<std::uint64_t, std::uint32_t> merged;
    for (std::uint32_t a : f.exponents) {
        for (const auto& [p, e] : factor_uint64(a + 1ull).factors) {
            merged[p] += e;
        }
    }
    Factorization out;
    out.factors.assign(merged.begin(), merged.end());
    return out;
}

std::strong_ordering compare(const FactoredNumber& a, const FactoredNumber& b) {
    const int c = mpz_cmp(value(a).get_mpz_t(), value(b).get_mpz_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Factorization factor_uint64(std::uint64_t n) {
    Factorization out;
    if (n == 0) throw usage_error("cannot factor 0");
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.emplace_back(p, e);
    }
    if (n > 1) out.factors.emplace_back(n, 1);
    return out;
}

BigValue reconstruct(const Factorization& f) {
    BigValue out = 1;
    BigValue pw;
    for (const auto& [p, e] : f.factors) {
        mpz_ui_pow_ui(pw.get_mpz_t(), p, e);
        out *= pw;
    }
    return out;
}

std::uint32_t exponent_of(const Factorization& f, std::uint64_t prime) {
    for (const auto& [p, e] : f.factors) {
        if (p == prime) return e;
        if (p > prime) break;
    }
    return 0;
}

std::uint32_t beta1(const Factorization& f) {
    return exponent_of(f, 2);
}

std::optional<std::uint64_t> largest_prime(const Factorization& f) {
    if (f.factors.empty()) return std::nullopt;
    return f.factors.back().first;
}

std::optional<std::uint64_t> largest_odd_prime(const Factorization& f) {
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
        if (it->first % 2 == 1) return it->first;
    }
    return std::nullopt;
}

std::string format_factorization(const Factorization& f) {
    if (f.factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) os << ' ';
        os << f.factors[i].first;
        if (f.factors[i].second != 1) os << '^' << f.factors[i].second;
    }
    return os.str();
}

namespace {

std::uint64_t parse_u64(std::string_view s) {
    if (s.empty() || s.size() > 19) throw parse_error("bad integer '" + std::string(s) + "'", 0);
    std::uint64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw parse_error("bad integer '" + std::string(s) + "'", 0);
        }
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

}  // namespace

Factorization parse_factorization(std::string_view text) {
    Factorization out;
    std::istringstream is{std::string(text)};
    std::string token;
    bool any = false;
    while (is >> token) {
        any = true;
        if (token == "1" && out.factors.empty()) {
            // `1` stands for the empty product; nothing may follow.
            std::string rest;
            if (is >> rest) throw parse_error("unexpected token after '1'", 0);
            return out;
        }
        std::uint64_t p;
        std::uint64_t e = 1;
        const auto caret = token.find('^');
        if (caret == std::string::npos) {
            p = parse_u64(token);
        } else {
            p = parse_u64(std::string_view(token).substr(0, caret));
            e = parse_u64(std::string_view(token).substr(caret + 1));
        }
        if (e == 0) throw integrity_error("zero exponent for prime " + std::to_string(p));
        if (e > 0xFFFFFFFFull) throw parse_error("exponent too large", 0);
        if (!out.factors.empty() && p <= out.factors.back().first) {
            throw integrity_error("primes not strictly increasing in factorization");
        }
        out.factors.emplace_back(p, static_cast<std::uint32_t>(e));
    }
    if (!any) throw parse_error("empty factorization field", 0);
    return out;
}

FactoredNumber to_factored_number(const Factorization& f) {
    const auto primes = first_primes(f.factors.size());
    FactoredNumber out;
    out.exponents.reserve(f.factors.size());
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (f.factors[i].first != primes[i]) {
            throw integrity_error("support is not the first primes: expected " +
                                  std::to_string(primes[i]) + ", got " +
                                  std::to_string(f.factors[i].first));
        }
        out.exponents.push_back(f.factors[i].second);
    }
    return out;
}

Factorization to_factorization(const FactoredNumber& f) {
    const auto primes = first_primes(f.exponents.size());
    Factorization out;
    for (std::size_t i = 0; i < f.exponents.size(); ++i) {
        out.factors.emplace_back(primes[i], f.exponents[i]);
    }
    return out;
}

}  // namespace hcnlab
