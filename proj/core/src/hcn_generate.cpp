#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "hcnlab/errors.hpp"
#include "hcnlab/hcn_list.hpp"

namespace hcnlab {

namespace {

using u128 = unsigned __int128;

mpz_class u128_to_mpz(u128 v) {
    mpz_class out = static_cast<unsigned long>(v >> 64);
    out <<= 64;
    out += static_cast<unsigned long>(v & ~0ull);
    return out;
}

u128 mpz_to_u128(const mpz_class& v) {
    u128 hi = mpz_getlimbn(v.get_mpz_t(), 1);
    return (hi << 64) | mpz_getlimbn(v.get_mpz_t(), 0);
}

bool fits_u128(const mpz_class& v) {
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 128;
}

double log_u128(u128 v) {
    const auto hi = static_cast<double>(static_cast<std::uint64_t>(v >> 64));
    const auto lo = static_cast<double>(static_cast<std::uint64_t>(v & ~0ull));
    return std::log(hi * 18446744073709551616.0 + lo);
}

double log_mpz(const mpz_class& v) {
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * 0.6931471805599453;
}

u128 checked_mul(u128 a, std::uint64_t b) {
    if (a > std::numeric_limits<u128>::max() / b) {
        throw resource_error(
            "divisor counts exceed the internal 128-bit width; bounds this large "
            "(beyond roughly 10^380) are unsupported");
    }
    return a * b;
}

// Working form of a record or candidate during generation.
struct WorkRecord {
    mpz_class value;
    u128 dcount = 0;
    std::vector<std::uint16_t> exps;
};

std::vector<std::uint64_t> primes_covering(const mpz_class& bound, std::size_t extra) {
    mpz_class primorial = 1;
    std::size_t count = 0;
    for (auto primes = first_primes(16);; primes = first_primes(primes.size() * 2)) {
        while (count < primes.size()) {
            primorial *= static_cast<unsigned long>(primes[count]);
            if (primorial > bound) return first_primes(count + extra);
            ++count;
        }
    }
}

struct VecHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (std::uint16_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct QueuedState {
    std::vector<std::uint16_t> exps;
    double logv;
};

struct LogOrder {
    bool operator()(const QueuedState& a, const QueuedState& b) const { return a.logv > b.logv; }
};

// Double log keys decide ordering and bound checks only outside this window;
// anything closer is re-compared exactly.
constexpr double kTieWindow = 1e-9;

// Best-first expansion over non-increasing exponent vectors in increasing
// exact value order, with dominance pruning: a popped state whose divisor
// count falls below the running record is dropped, record-setters and ties
// stay on the largely-composite frontier and expand by primorial
// multiplication. This seeds the certified sweep below; on its own it can
// miss records whose ancestors are all dominated.
class RecordSearch {
public:
    RecordSearch(const BigValue& bound, const GenerateOptions& opts, GenerateStats& stats)
        : bound_(bound), opts_(opts), stats_(stats) {
        primes_ = primes_covering(bound, 2);
        mpz_class primorial = 1;
        for (std::uint64_t p : primes_) {
            primorial *= static_cast<unsigned long>(p);
            if (primorial > bound_) break;
            primorials_.push_back(primorial);
        }
        log_primorials_.reserve(primorials_.size());
        for (const auto& q : primorials_) log_primorials_.push_back(log_mpz(q));
        log_bound_ = log_mpz(bound_);
        logp_.reserve(primes_.size());
        for (auto p : primes_) logp_.push_back(std::log(static_cast<double>(p)));
    }

    std::vector<WorkRecord> run() {
        std::vector<WorkRecord> records;
        push(QueuedState{{}, 0.0});
        u128 running_max = 0;

        std::vector<QueuedState> window;
        std::vector<mpz_class> window_values;
        while (!queue_.empty()) {
            pop_window(window, window_values);
            for (std::size_t i = 0; i < window.size(); ++i) {
                QueuedState& state = window[i];
                ++stats_.popped;
                u128 d = 1;
                for (std::uint16_t a : state.exps) d = checked_mul(d, a + 1ull);
                if (d < running_max) continue;  // dominated
                // Exact values are only materialized for frontier states.
                mpz_class value =
                    window_values.empty() ? exact_value(state.exps) : std::move(window_values[i]);
                if (d > running_max) {
                    running_max = d;
                    records.push_back(WorkRecord{value, d, state.exps});
                }
                ++stats_.finalized;
                expand(state, value);
            }
        }
        return records;
    }

private:
    void push(QueuedState state) {
        mem_estimate_ += 176 + 4 * state.exps.size();
        if (mem_estimate_ > opts_.mem_cap_bytes) {
            throw resource_error(
                "search frontier estimate " + std::to_string(mem_estimate_) +
                " bytes exceeds the memory cap " + std::to_string(opts_.mem_cap_bytes) +
                " after " + std::to_string(stats_.generated) + " generated states");
        }
        stats_.peak_mem_estimate = std::max(stats_.peak_mem_estimate, mem_estimate_);
        queue_.push(std::move(state));
    }

    // Pops the exact-minimum state. States whose log keys land within the tie
    // window come out together and are ordered by exact value comparison
    // (window_values is filled exactly in that case, and only then).
    void pop_window(std::vector<QueuedState>& window, std::vector<mpz_class>& window_values) {
        window.clear();
        window_values.clear();
        window.push_back(queue_.top());
        queue_.pop();
        const double lim = window.front().logv + kTieWindow;
        while (!queue_.empty() && queue_.top().logv <= lim) {
            window.push_back(queue_.top());
            queue_.pop();
        }
        for (const auto& state : window) mem_estimate_ -= 96 + 2 * state.exps.size();
        if (window.size() > 1) {
            stats_.exact_tie_compares += window.size() - 1;
            window_values.resize(window.size());
            std::vector<std::size_t> order(window.size());
            for (std::size_t i = 0; i < window.size(); ++i) {
                order[i] = i;
                window_values[i] = exact_value(window[i].exps);
            }
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return window_values[a] < window_values[b];
            });
            std::vector<QueuedState> sorted_states;
            std::vector<mpz_class> sorted_values;
            sorted_states.reserve(window.size());
            sorted_values.reserve(window.size());
            for (std::size_t idx : order) {
                sorted_states.push_back(std::move(window[idx]));
                sorted_values.push_back(std::move(window_values[idx]));
            }
            window = std::move(sorted_states);
            window_values = std::move(sorted_values);
        }
    }

    mpz_class exact_value(const std::vector<std::uint16_t>& exps) const {
        mpz_class out = 1, pw;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            mpz_ui_pow_ui(pw.get_mpz_t(), primes_[i], exps[i]);
            out *= pw;
        }
        return out;
    }

    void expand(const QueuedState& state, const mpz_class& val) {
        for (std::size_t k = 0; k < primorials_.size(); ++k) {
            const double succ_log = state.logv + log_primorials_[k];
            if (succ_log > log_bound_ + kTieWindow) break;  // certainly over the bound
            if (succ_log > log_bound_ - kTieWindow) {
                // Within the guard band: settle exactly.
                if (val * primorials_[k] > bound_) break;
            }
            std::vector<std::uint16_t> succ(state.exps);
            if (succ.size() < k + 1) succ.resize(k + 1, 0);
            for (std::size_t i = 0; i <= k; ++i) ++succ[i];
            if (!seen_.insert(succ).second) continue;
            ++stats_.generated;
            double logv = 0;
            for (std::size_t i = 0; i < succ.size(); ++i) logv += succ[i] * logp_[i];
            push(QueuedState{std::move(succ), logv});
        }
    }

    const BigValue& bound_;
    const GenerateOptions& opts_;
    GenerateStats& stats_;
    std::vector<mpz_class> primorials_;
    std::vector<double> log_primorials_;
    double log_bound_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<double> logp_;
    std::priority_queue<QueuedState, std::vector<QueuedState>, LogOrder> queue_;
    std::unordered_set<std::vector<std::uint16_t>, VecHash> seen_;
    std::size_t mem_estimate_ = 0;
};

// Exhaustive sweep: depth-first enumeration of every non-increasing exponent
// vector with value <= bound, pruned only where a proved upper bound on the
// reachable divisor counts cannot beat the record already in force. Every
// candidate beating its in-force record comes back as a violator; an empty
// result certifies the record list as exactly the record-setters.
//
// The workhorse bound is a budget-grid table: max_ext[j][b] bounds the
// divisor-count factor of any non-increasing extension over primes
// p_j, p_{j+1}, ... whose value is at most exp(b*h). Budgets round up to the
// grid, exponent costs round down, so the table never under-estimates.
class RecordSweep {
public:
    RecordSweep(const std::vector<WorkRecord>& records, const mpz_class& bound)
        : bound_(bound) {
        primes_ = primes_covering(bound, 2);
        logp_.reserve(primes_.size());
        for (auto p : primes_) logp_.push_back(std::log(static_cast<double>(p)));
        log_bound_ = log_mpz(bound_);

        rec_values_.reserve(records.size());
        for (const auto& r : records) {
            rec_values_.push_back(r.value);
            rec_logv_.push_back(log_mpz(r.value));
            rec_dcounts_.push_back(r.dcount);
        }
        scratch_.resize(primes_.size() + 1);
        path_.reserve(primes_.size());
        build_extension_table();
    }

    std::vector<WorkRecord> run(std::uint64_t& nodes) {
        if (bound_ >= 1) {
            const long idx = record_index(mpz_class(1), 0.0);
            const u128 in_force = idx < 0 ? 0 : rec_dcounts_[idx];
            if (1 > in_force) violators_.push_back(WorkRecord{mpz_class(1), 1, {}});
        }
        if (!primes_.empty()) {
            visit(0, mpz_class(1), 0.0, 1, std::numeric_limits<std::uint32_t>::max());
        }
        nodes += nodes_;
        return std::move(violators_);
    }

private:
    static constexpr double kGridStep = 1.0 / 64.0;
    static constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;

    void build_extension_table() {
        grid_cells_ = static_cast<std::size_t>(std::ceil(log_bound_ / kGridStep)) + 2;
        const std::size_t rows = primes_.size() + 1;
        max_ext_.assign(rows, std::vector<std::uint64_t>(grid_cells_, 1));
        for (std::size_t j = primes_.size(); j-- > 0;) {
            const double lp = logp_[j];
            for (std::size_t b = 0; b < grid_cells_; ++b) {
                const double budget = static_cast<double>(b) * kGridStep;
                std::uint64_t best = max_ext_[j + 1][b];  // skip this prime
                for (std::uint64_t delta = 1;; ++delta) {
                    const double cost = static_cast<double>(delta) * lp;
                    if (cost > budget + 1e-12) break;
                    long rem = static_cast<long>(b) -
                               static_cast<long>(std::floor(cost / kGridStep - 1e-9));
                    if (rem < 0) rem = 0;
                    if (rem > static_cast<long>(b)) rem = static_cast<long>(b);
                    const std::uint64_t tail = max_ext_[j + 1][static_cast<std::size_t>(rem)];
                    std::uint64_t cand;
                    if (tail > kSaturated / (delta + 1)) {
                        cand = kSaturated;
                    } else {
                        cand = (delta + 1) * tail;
                    }
                    best = std::max(best, cand);
                }
                max_ext_[j][b] = best;
            }
        }
    }

    std::uint64_t extension_cap(std::size_t jn, double budget) const {
        if (budget <= 0) return 1;
        auto cell = static_cast<long>(std::ceil(budget / kGridStep + 1e-9));
        if (cell < 0) cell = 0;
        if (cell >= static_cast<long>(grid_cells_)) cell = static_cast<long>(grid_cells_) - 1;
        return max_ext_[jn][static_cast<std::size_t>(cell)];
    }

    // Index of the record in force at value v; log comparisons with exact
    // re-checks inside the guard band.
    long record_index(const mpz_class& v, double logv) const {
        std::size_t lo = 0, hi = rec_values_.size();
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            bool greater;
            if (rec_logv_[mid] > logv + kTieWindow) {
                greater = true;
            } else if (rec_logv_[mid] < logv - kTieWindow) {
                greater = false;
            } else {
                greater = rec_values_[mid] > v;
            }
            if (greater) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return static_cast<long>(lo) - 1;
    }

    bool may_skip_subtree(std::size_t jn, double log_value, u128 d, u128 in_force) const {
        if (jn >= primes_.size()) return true;
        const double budget = log_bound_ - log_value;
        if (logp_[jn] - budget > kTieWindow) return true;  // certainly no room left
        const u128 q = in_force / d;
        if (q == 0) return false;
        return extension_cap(jn, budget) <= q;
    }

    void visit(std::size_t j, const mpz_class& parent_value, double parent_log, u128 parent_d,
               std::uint32_t cap) {
        mpz_class& v = scratch_[j];
        v = parent_value;
        double logv = parent_log;
        path_.push_back(0);
        for (std::uint32_t alpha = 1; alpha <= cap; ++alpha) {
            mpz_mul_ui(v.get_mpz_t(), v.get_mpz_t(), primes_[j]);
            logv += logp_[j];
            if (logv > log_bound_ + kTieWindow) break;  // certainly over
            if (logv > log_bound_ - kTieWindow && v > bound_) break;  // band: exact
            ++nodes_;
            path_.back() = static_cast<std::uint16_t>(alpha);
            const u128 d = checked_mul(parent_d, alpha + 1ull);
            const long idx = record_index(v, logv);
            const u128 in_force = idx < 0 ? 0 : rec_dcounts_[idx];
            if (d > in_force) {
                violators_.push_back(WorkRecord{v, d, path_});
            }
            if (!may_skip_subtree(j + 1, logv, d, in_force)) {
                visit(j + 1, v, logv, d, alpha);
            }
        }
        path_.pop_back();
    }

    mpz_class bound_;
    double log_bound_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<double> logp_;
    std::vector<mpz_class> rec_values_;
    std::vector<double> rec_logv_;
    std::vector<u128> rec_dcounts_;
    std::vector<std::vector<std::uint64_t>> max_ext_;
    std::size_t grid_cells_ = 0;
    std::vector<mpz_class> scratch_;
    std::vector<std::uint16_t> path_;
    std::vector<WorkRecord> violators_;
    std::uint64_t nodes_ = 0;
};

std::vector<WorkRecord> strict_records(std::vector<WorkRecord> pool) {
    std::sort(pool.begin(), pool.end(),
              [](const WorkRecord& a, const WorkRecord& b) { return a.value < b.value; });
    std::vector<WorkRecord> out;
    u128 best = 0;
    for (auto& w : pool) {
        if (w.dcount > best) {
            best = w.dcount;
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<WorkRecord> to_work_records(const HcnList& list) {
    std::vector<WorkRecord> out;
    out.reserve(list.entries.size());
    for (const auto& e : list.entries) {
        if (!fits_u128(e.dcount)) {
            throw resource_error("record divisor count " + to_decimal(e.dcount) +
                                 " exceeds the sweep's 128-bit width");
        }
        WorkRecord w;
        w.value = e.value;
        w.dcount = mpz_to_u128(e.dcount);
        w.exps.assign(e.exponents.exponents.begin(), e.exponents.exponents.end());
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

HcnList generate_hcn(const BigValue& bound, const GenerateOptions& opts, GenerateStats* stats) {
    if (bound < 1) throw usage_error("generation bound must be >= 1");
    GenerateStats local;
    GenerateStats& st = stats ? *stats : local;
    st = GenerateStats{};

    std::vector<WorkRecord> records;
    {
        RecordSearch search(bound, opts, st);
        records = search.run();
    }

    // Certified fixpoint: sweep for candidates beating the seeded records,
    // merge them in, repeat. A sweep collects every missing record-setter in
    // one pass, so the second pass at the latest comes back empty and
    // certifies the list. The exit is always a clean sweep.
    for (int pass = 1;; ++pass) {
        ++st.sweep_passes;
        std::vector<WorkRecord> violators = RecordSweep(records, bound).run(st.sweep_nodes);
        if (violators.empty()) break;
        if (pass > 4) {
            throw integrity_error("record sweep failed to converge after 4 passes");
        }
        st.repaired_records += violators.size();
        for (auto& v : violators) records.push_back(std::move(v));
        records = strict_records(std::move(records));
    }

    HcnList list;
    list.bound = bound;
    list.entries.reserve(records.size());
    for (const auto& w : records) {
        if (opts.max_prime &&
            !w.exps.empty() &&
            first_primes(w.exps.size()).back() > *opts.max_prime) {
            continue;  // the restriction is post hoc, the search above is never narrowed
        }
        RecordEntry entry;
        entry.value = w.value;
        entry.dcount = u128_to_mpz(w.dcount);
        entry.exponents.exponents.assign(w.exps.begin(), w.exps.end());
        list.entries.push_back(std::move(entry));
    }
    validate_list(list);
    return list;
}

std::uint64_t audit_records(const HcnList& list, int /*threads*/) {
    std::uint64_t nodes = 0;
    std::vector<WorkRecord> violators =
        RecordSweep(to_work_records(list), list.bound).run(nodes);
    if (!violators.empty()) {
        std::string msg = "record list is incomplete or wrong; " +
                          std::to_string(violators.size()) +
                          " candidates beat it, first:";
        for (std::size_t i = 0; i < violators.size() && i < 8; ++i) {
            msg += " " + to_decimal(violators[i].value);
        }
        throw integrity_error(msg);
    }
    return nodes;
}

}  // namespace hcnlab
