#include "hcnlab/hcn_list.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hcnlab/errors.hpp"

namespace hcnlab {

namespace {

constexpr std::uint64_t kBruteForceCap = 10'000'000;

FactoredNumber factor_by_trial_division(std::uint64_t n) {
    FactoredNumber f;
    std::uint64_t p = 2;
    std::size_t index = 0;
    const auto primes = first_primes(32);  // 2*3*...*131 > 10^7, plenty for the cap
    while (n > 1) {
        p = primes.at(index++);
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        // Records use the first primes with no gaps; anything else would be
        // a bug in the caller.
        if (e == 0) throw integrity_error("record value has gapped prime support");
        f.exponents.push_back(e);
    }
    return f;
}

}  // namespace

HcnList brute_force_hcn(std::uint64_t limit) {
    if (limit < 1) throw usage_error("brute force limit must be >= 1");
    if (limit > kBruteForceCap) {
        throw usage_error("brute force limit " + std::to_string(limit) +
                          " exceeds the oracle-scale cap 10^7");
    }

    HcnList list;
    list.bound = static_cast<unsigned long>(limit);

    // Blocked divisor-count-by-enumeration: for each block every d <= hi
    // bumps its multiples, so counts[n] ends up as d(n) literally by
    // enumerating divisors.
    constexpr std::uint64_t kBlock = 1u << 20;
    std::vector<std::uint32_t> counts(std::min<std::uint64_t>(kBlock, limit) + 1);
    std::uint32_t best = 0;
    for (std::uint64_t lo = 1; lo <= limit; lo += kBlock) {
        const std::uint64_t hi = std::min(lo + kBlock - 1, limit);
        std::fill(counts.begin(), counts.begin() + (hi - lo + 1), 0u);
        for (std::uint64_t d = 1; d <= hi; ++d) {
            for (std::uint64_t m = ((lo + d - 1) / d) * d; m <= hi; m += d) {
                ++counts[m - lo];
            }
        }
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const std::uint32_t dn = counts[n - lo];
            if (dn > best) {
                best = dn;
                RecordEntry entry;
                entry.value = static_cast<unsigned long>(n);
                entry.dcount = static_cast<unsigned long>(dn);
                entry.exponents = factor_by_trial_division(n);
                if (divisor_count(entry.exponents) != entry.dcount) {
                    throw integrity_error("divisor enumeration and product formula disagree at " +
                                          std::to_string(n));
                }
                list.entries.push_back(std::move(entry));
            }
        }
    }
    return list;
}

bool is_highly_composite(const BigValue& v, const HcnList& list) {
    if (v > list.bound) {
        throw out_of_range_error("membership query " + to_decimal(v) +
                                 " exceeds list bound " + to_decimal(list.bound));
    }
    return std::binary_search(
        list.entries.begin(), list.entries.end(), v,
        [](const auto& a, const auto& b) {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, RecordEntry>) {
                return a.value < b;
            } else {
                return a < b.value;
            }
        });
}

void validate_list(const HcnList& list) {
    const BigValue* prev_value = nullptr;
    const BigValue* prev_dcount = nullptr;
    for (const auto& entry : list.entries) {
        if (!non_increasing(entry.exponents)) {
            throw integrity_error("entry " + to_decimal(entry.value) +
                                  " has increasing exponents");
        }
        if (value(entry.exponents) != entry.value) {
            throw integrity_error("entry " + to_decimal(entry.value) +
                                  " does not match its factorization");
        }
        if (divisor_count(entry.exponents) != entry.dcount) {
            throw integrity_error("entry " + to_decimal(entry.value) +
                                  " has inconsistent divisor count");
        }
        if (entry.value > list.bound) {
            throw integrity_error("entry " + to_decimal(entry.value) + " exceeds list bound");
        }
        if (prev_value && !(*prev_value < entry.value)) {
            throw integrity_error("values not strictly increasing at " + to_decimal(entry.value));
        }
        if (prev_dcount && !(*prev_dcount < entry.dcount)) {
            throw integrity_error("entry " + to_decimal(entry.value) +
                                  " is not a divisor-count record (d=" +
                                  to_decimal(entry.dcount) + " does not exceed " +
                                  to_decimal(*prev_dcount) + ")");
        }
        prev_value = &entry.value;
        prev_dcount = &entry.dcount;
    }
}

void write_list(const HcnList& list, std::ostream& os) {
    os << "# hcnlab v1 bound=" << to_decimal(list.bound) << "\n";
    std::size_t index = 0;
    for (const auto& entry : list.entries) {
        os << ++index << '\t' << to_decimal(entry.value) << '\t' << to_decimal(entry.dcount)
           << '\t' << format_factorization(to_factorization(entry.exponents)) << '\n';
    }
}

HcnList read_list(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(is, line)) throw parse_error("empty list file", 1);
    ++lineno;
    constexpr std::string_view kHeader = "# hcnlab v1 bound=";
    if (line.rfind(kHeader, 0) != 0) {
        throw parse_error("missing '# hcnlab v1 bound=' header", lineno);
    }
    HcnList list;
    try {
        list.bound = parse_magnitude(line.substr(kHeader.size()));
    } catch (const usage_error& e) {
        throw parse_error(e.what(), lineno);
    }

    std::size_t expected_index = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string index_s, value_s, dcount_s, factor_s;
        if (!std::getline(fields, index_s, '\t') || !std::getline(fields, value_s, '\t') ||
            !std::getline(fields, dcount_s, '\t') || !std::getline(fields, factor_s)) {
            throw parse_error("expected 4 tab-separated fields", lineno);
        }
        RecordEntry entry;
        Factorization fact;
        try {
            ++expected_index;
            if (parse_magnitude(index_s) != BigValue(static_cast<unsigned long>(expected_index))) {
                throw integrity_error("index out of sequence, expected " +
                                      std::to_string(expected_index));
            }
            entry.value = parse_magnitude(value_s);
            entry.dcount = parse_magnitude(dcount_s);
            fact = parse_factorization(factor_s);
        } catch (const usage_error& e) {
            throw parse_error(e.what(), lineno);
        } catch (const parse_error& e) {
            throw parse_error(e.what(), lineno);
        }
        entry.exponents = to_factored_number(fact);
        list.entries.push_back(std::move(entry));
    }
    validate_list(list);
    return list;
}

HcnList import_external(std::istream& is, std::string_view format) {
    if (format != "flammenkamp") {
        throw usage_error("unknown import format '" + std::string(format) + "'");
    }
    HcnList list;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string tok;
        // Three leading fields, then `p^e` factor fields.
        for (int i = 0; i < 3; ++i) {
            if (!(fields >> tok)) throw parse_error("expected 3 leading fields", lineno);
        }
        std::string factor_text;
        std::getline(fields, factor_text);
        Factorization fact;
        if (factor_text.find_first_not_of(" \t\r") == std::string::npos) {
            fact = Factorization{};  // no factor fields: the entry n = 1
        } else {
            try {
                fact = parse_factorization(factor_text);
            } catch (const parse_error& e) {
                throw parse_error(e.what(), lineno);
            }
        }
        RecordEntry entry;
        entry.exponents = to_factored_number(fact);
        entry.value = value(entry.exponents);
        entry.dcount = divisor_count(entry.exponents);
        list.entries.push_back(std::move(entry));
    }
    if (list.entries.empty()) throw parse_error("no entries", lineno ? lineno : 1);
    list.bound = list.entries.back().value;
    validate_list(list);
    return list;
}

std::uint64_t entry_largest_prime(const RecordEntry& entry) {
    if (entry.exponents.exponents.empty()) return 0;
    return first_primes(entry.exponents.exponents.size()).back();
}

}  // namespace hcnlab
