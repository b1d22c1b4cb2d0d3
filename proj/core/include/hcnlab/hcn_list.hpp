#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "hcnlab/big_value.hpp"
#include "hcnlab/factored_number.hpp"

namespace hcnlab {

/// One divisor-count record-setter: value = value(exponents) and
/// dcount = divisor_count(exponents), with non-increasing exponents.
struct RecordEntry {
    BigValue value;
    BigValue dcount;
    FactoredNumber exponents;
};

/// Ordered list of record-setters up to `bound`. Both the value column and
/// the dcount column are strictly increasing (the defining record property).
struct HcnList {
    BigValue bound;
    std::vector<RecordEntry> entries;
};

struct GenerateOptions {
    /// Post-hoc restriction: keep only entries whose largest prime factor
    /// is <= max_prime. The search itself is never restricted.
    std::optional<std::uint64_t> max_prime;
    /// Clean failure with a diagnostic once the search structures exceed
    /// this estimate.
    std::size_t mem_cap_bytes = std::size_t{4} << 30;
    int threads = 0;  // 0 = all hardware threads
};

struct GenerateStats {
    std::uint64_t popped = 0;
    std::uint64_t finalized = 0;
    std::uint64_t generated = 0;
    std::uint64_t exact_tie_compares = 0;
    std::uint64_t sweep_passes = 0;
    std::uint64_t sweep_nodes = 0;
    std::uint64_t repaired_records = 0;
    std::size_t peak_mem_estimate = 0;
};

/// Direct transcription of the record definition: scans every integer in
/// [1, limit], counting divisors by enumeration, and keeps the strict
/// record-setters. This is the oracle the search is checked against.
/// limit must be <= 10^7.
HcnList brute_force_hcn(std::uint64_t limit);

/// Exact record search over non-increasing exponent vectors (states
/// reachable by multiplying by primorials), expanded in strictly increasing
/// exact value order with dominance pruning, then certified by an exhaustive
/// pruned sweep that repairs anything the frontier search missed. The result
/// is provably the full record set: the sweep exits clean. Agrees with
/// brute_force_hcn on every bound <= 10^7; deterministic for a given bound.
HcnList generate_hcn(const BigValue& bound, const GenerateOptions& opts = {},
                     GenerateStats* stats = nullptr);

/// Membership test against a generated list. Requires v <= list.bound.
bool is_highly_composite(const BigValue& v, const HcnList& list);

/// Structural validation: consistency of each entry and the strict record
/// property across the list. Throws integrity_error.
void validate_list(const HcnList& list);

/// Exhaustive completeness audit of a record list: proves no non-increasing
/// exponent vector with value <= list.bound has more divisors than the
/// record in force at its value. A filtered (max-prime restricted) list is
/// genuinely incomplete and will fail. Returns the number of sweep nodes
/// visited; throws integrity_error with the offending candidates otherwise.
std::uint64_t audit_records(const HcnList& list, int threads = 0);

/// Canonical TSV: header `# hcnlab v1 bound=<decimal>`, then one entry per
/// line: `index<TAB>value<TAB>dcount<TAB>factorization`.
void write_list(const HcnList& list, std::ostream& os);
HcnList read_list(std::istream& is);

/// Parses a third-party list whose lines carry `p^e` factor fields after
/// three leading fields. Values are reconstructed exactly from the
/// factorizations and the record property is validated across entries.
/// The only supported format name is "flammenkamp".
HcnList import_external(std::istream& is, std::string_view format);

/// Largest prime factor of an entry (0 for the entry n = 1).
std::uint64_t entry_largest_prime(const RecordEntry& entry);

}  // namespace hcnlab
