#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcnlab/big_value.hpp"
#include "hcnlab/errors.hpp"
#include "hcnlab/factored_number.hpp"
#include "hcnlab/hcn_list.hpp"
#include "hcnlab/prime_table.hpp"
#include "hcnlab/verify.hpp"

namespace {

using namespace hcnlab;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    int threads = 0;
    std::size_t mem_cap = std::size_t{4} << 30;
    std::string format = "summary";
    std::string out_path;
};

std::size_t parse_byte_size(const std::string& text) {
    if (text.empty()) throw usage_error("empty memory size");
    std::size_t suffix_at = text.size();
    std::size_t unit = 1;
    switch (text.back()) {
        case 'K': case 'k': unit = std::size_t{1} << 10; --suffix_at; break;
        case 'M': case 'm': unit = std::size_t{1} << 20; --suffix_at; break;
        case 'G': case 'g': unit = std::size_t{1} << 30; --suffix_at; break;
        case 'T': case 't': unit = std::size_t{1} << 40; --suffix_at; break;
        default: break;
    }
    const std::string digits = text.substr(0, suffix_at);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw usage_error("malformed memory size '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoull(digits)) * unit;
}

std::uint64_t parse_u64_magnitude(const std::string& text, const char* what) {
    const BigValue v = parse_magnitude(text);
    if (!v.fits_ulong_p()) {
        throw usage_error(std::string(what) + " '" + text + "' does not fit a machine word");
    }
    return v.get_ui();
}

class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw usage_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit_report(const VerificationReport& report, const GlobalOptions& global,
                 std::ostream& os) {
    os << (global.format == "tsv" ? report.to_tsv() : report.to_summary());
}

HcnList load_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read list file '" + path + "'");
    return read_list(in);
}

PrimeTable load_primes_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read primes file '" + path + "'");
    std::vector<std::uint64_t> primes;
    std::uint64_t p;
    while (in >> p) primes.push_back(p);
    if (primes.empty()) throw usage_error("primes file '" + path + "' is empty");
    return PrimeTable::from_primes(std::move(primes), primes.back());
}

std::vector<BigValue> load_exceptions_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot read exceptions file '" + path + "'");
    std::vector<BigValue> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_magnitude(tok));
    return out;
}

struct VerifyArgs {
    std::string check;
    std::uint64_t limit = 1'000'000;
    std::string bound_expr = "10^15";
    std::string list_path;
    std::string primes_path;
    std::uint64_t lemma1_prime_limit = 512;
    std::uint64_t threshold_prime_limit = 2200;
    std::uint64_t x_min = 2164;
    std::string exceptions_path;
};

// Shared state so `verify all` builds each input once.
class VerifyContext {
public:
    VerifyContext(const VerifyArgs& args, const GlobalOptions& global)
        : args_(args), global_(global) {}

    const HcnList& list() {
        if (!list_) {
            if (!args_.list_path.empty()) {
                list_ = load_list_file(args_.list_path);
            } else {
                GenerateOptions opts = generate_options();
                list_ = generate_hcn(BigValue(static_cast<unsigned long>(args_.limit)), opts);
            }
        }
        return *list_;
    }

    const PrimeTable& scan_table() {
        if (!scan_table_) scan_table_ = build_table(std::max<std::uint64_t>(args_.limit, 3));
        return *scan_table_;
    }

    const PrimeTable& small_table() {
        if (!small_table_) {
            std::uint64_t max_pr = 2;
            for (const auto& e : list().entries) {
                max_pr = std::max(max_pr, entry_largest_prime(e));
            }
            small_table_ = build_table(max_pr + 64);
        }
        return *small_table_;
    }

    GenerateOptions generate_options() const {
        GenerateOptions opts;
        opts.mem_cap_bytes = global_.mem_cap;
        opts.threads = global_.threads;
        return opts;
    }

    PrimeTable build_table(std::uint64_t limit) const {
        if (!args_.primes_path.empty()) return load_primes_file(args_.primes_path);
        return PrimeTable::build(limit);
    }

    std::vector<EntryPair> joint_pairs() {
        GenerateOptions opts = generate_options();
        const HcnList n_list = generate_hcn(parse_magnitude(args_.bound_expr), opts);
        const HcnList d_list = generate_hcn(n_list.entries.back().dcount, opts);
        return make_joint_pairs(n_list, d_list, ~std::uint64_t{0});
    }

private:
    const VerifyArgs& args_;
    const GlobalOptions& global_;
    std::optional<HcnList> list_;
    std::optional<PrimeTable> scan_table_;
    std::optional<PrimeTable> small_table_;
};

VerificationReport run_one_check(const std::string& name, VerifyContext& ctx,
                                 const VerifyArgs& args, const GlobalOptions& global) {
    if (name == "lemma1") return verify_lemma1(ctx.list());
    if (name == "lemma1-table") {
        const std::uint64_t table_limit =
            args.lemma1_prime_limit == 512 ? 600 : 4 * args.lemma1_prime_limit;
        return lemma1_factor_table(ctx.build_table(table_limit), args.lemma1_prime_limit);
    }
    if (name == "last-exponent") return verify_last_exponent(ctx.list());
    if (name == "beta1") return verify_beta1_lower_bound(ctx.list(), ctx.small_table());
    if (name == "lemma2") return verify_lemma2(ctx.list());
    if (name == "lemma3") return verify_lemma3(ctx.joint_pairs());
    if (name == "lemma4") return verify_lemma4(ctx.scan_table(), args.limit, global.threads);
    if (name == "threshold") {
        return threshold_search(ctx.build_table(args.threshold_prime_limit + 1),
                                args.threshold_prime_limit);
    }
    if (name == "main-ineq") {
        return main_inequality_threshold(args.limit, args.x_min, global.threads);
    }
    if (name == "erdos") {
        std::optional<std::vector<BigValue>> exceptions;
        if (!args.exceptions_path.empty()) {
            exceptions = load_exceptions_file(args.exceptions_path);
        }
        return erdos_bound_check(ctx.list(), ctx.small_table(), exceptions);
    }
    throw usage_error("unknown check '" + name + "'");
}

int cmd_verify(const VerifyArgs& args, const GlobalOptions& global) {
    static const std::vector<std::string> kAll = {
        "lemma1", "lemma1-table", "last-exponent", "beta1", "lemma2",
        "lemma3", "lemma4",       "threshold",     "main-ineq", "erdos",
    };
    std::vector<std::string> selected;
    if (args.check == "all") {
        selected = kAll;
    } else {
        selected.push_back(args.check);
    }

    OutputSink sink(global.out_path);
    VerifyContext ctx(args, global);
    bool all_passed = true;
    for (const auto& name : selected) {
        const VerificationReport report = run_one_check(name, ctx, args, global);
        emit_report(report, global, sink.stream());
        all_passed = all_passed && report.passed;
    }
    return all_passed ? kExitPass : kExitViolation;
}

int cmd_sieve(std::uint64_t limit, const GlobalOptions& global) {
    OutputSink sink(global.out_path);
    const PrimeTable table = PrimeTable::build(limit);
    sink.stream() << "count=" << table.count() << "\n";
    return kExitPass;
}

int cmd_pi(std::uint64_t x, std::uint64_t limit, const GlobalOptions& global) {
    OutputSink sink(global.out_path);
    const PrimeTable table = PrimeTable::build(limit);
    sink.stream() << table.prime_pi(x) << "\n";
    return kExitPass;
}

int cmd_rp(std::uint64_t k, std::uint64_t limit, const GlobalOptions& global) {
    OutputSink sink(global.out_path);
    const PrimeTable table = PrimeTable::build(limit);
    sink.stream() << ramanujan_prime(table, k) << "\n";
    return kExitPass;
}

int cmd_generate(const std::string& bound_expr, const std::string& max_prime_expr,
                 bool brute_force, bool print_stats, const GlobalOptions& global) {
    OutputSink sink(global.out_path);
    HcnList list;
    if (brute_force) {
        list = brute_force_hcn(parse_u64_magnitude(bound_expr, "brute force bound"));
    } else {
        GenerateOptions opts;
        opts.mem_cap_bytes = global.mem_cap;
        opts.threads = global.threads;
        if (!max_prime_expr.empty()) {
            opts.max_prime = parse_u64_magnitude(max_prime_expr, "max prime");
        }
        GenerateStats stats;
        list = generate_hcn(parse_magnitude(bound_expr), opts, &stats);
        if (print_stats) {
            std::cerr << "popped=" << stats.popped << " finalized=" << stats.finalized
                      << " generated=" << stats.generated
                      << " tie_compares=" << stats.exact_tie_compares
                      << " sweep_passes=" << stats.sweep_passes
                      << " sweep_nodes=" << stats.sweep_nodes
                      << " repaired=" << stats.repaired_records
                      << " peak_mem=" << stats.peak_mem_estimate << "\n";
        }
    }
    write_list(list, sink.stream());
    return kExitPass;
}

int cmd_table1(const std::string& bound_expr, std::uint64_t max_prime,
               const GlobalOptions& global) {
    OutputSink sink(global.out_path);
    GenerateOptions opts;
    opts.mem_cap_bytes = global.mem_cap;
    opts.threads = global.threads;
    const VerificationReport report = joint_table(parse_magnitude(bound_expr), max_prime, opts);
    for (const auto& row : report.rows) {
        sink.stream() << row[0] << "\t" << row[1] << "\n";
    }
    return report.passed ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact highly composite number lab: record generation and "
                 "mechanical inequality verification"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    if (const char* env = std::getenv("HCNLAB_MEM_CAP")) {
        try {
            global.mem_cap = parse_byte_size(env);
        } catch (const usage_error& e) {
            std::cerr << "hcnlab: bad HCNLAB_MEM_CAP: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    std::string mem_cap_text;
    app.add_option("--threads", global.threads, "worker thread cap (0 = all cores)");
    app.add_option("--mem-cap", mem_cap_text, "memory cap, bytes with optional K/M/G/T suffix");
    app.add_option("--format", global.format, "report format")
        ->check(CLI::IsMember({"tsv", "summary"}));
    app.add_option("--out", global.out_path, "write primary output to a file");

    auto* sieve = app.add_subcommand("sieve", "sieve primes and print the count");
    sieve->fallthrough();
    std::uint64_t sieve_limit = 0;
    sieve->add_option("--limit", sieve_limit, "inclusive sieve bound")->required();

    auto* pi = app.add_subcommand("pi", "prime counting function");
    pi->fallthrough();
    std::string pi_x;
    std::uint64_t pi_limit = 1'000'000;
    pi->add_option("x", pi_x, "argument")->required();
    pi->add_option("--limit", pi_limit, "sieve bound");

    auto* rp = app.add_subcommand("rp", "Ramanujan prime R_k");
    rp->fallthrough();
    std::uint64_t rp_k = 0;
    std::uint64_t rp_limit = 1'000'000;
    rp->add_option("k", rp_k, "index")->required();
    rp->add_option("--limit", rp_limit, "sieve bound");

    auto* hcn = app.add_subcommand("hcn", "record list operations");
    hcn->fallthrough();
    hcn->require_subcommand(1);
    auto* gen = hcn->add_subcommand("generate", "generate the record list up to a bound");
    gen->fallthrough();
    std::string gen_bound;
    std::string gen_max_prime;
    bool gen_brute = false;
    bool gen_stats = false;
    gen->add_option("--bound", gen_bound, "decimal or a^b bound expression")->required();
    gen->add_option("--max-prime", gen_max_prime, "keep entries with largest prime <= P");
    gen->add_flag("--brute-force", gen_brute, "use the divisor-enumeration oracle (<= 10^7)");
    gen->add_flag("--stats", gen_stats, "print search statistics to stderr");

    auto* verify = app.add_subcommand("verify", "run one named check or all of them");
    verify->fallthrough();
    VerifyArgs vargs;
    verify->add_option("check", vargs.check, "check name or 'all'")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma1-table", "last-exponent", "beta1", "lemma2",
                               "lemma3", "lemma4", "threshold", "main-ineq", "erdos", "all"}));
    verify->add_option("--limit", vargs.limit, "scan limit / generated list bound");
    verify->add_option("--bound", vargs.bound_expr, "joint-pair bound for lemma3");
    verify->add_option("--list", vargs.list_path, "use a record list file");
    verify->add_option("--primes", vargs.primes_path, "use a prime list file (cross-check input)");
    std::uint64_t verify_prime_limit = 0;
    verify->add_option("--prime-limit", verify_prime_limit,
                       "prime bound (lemma1-table: 512, threshold: 2200)");
    verify->add_option("--x-min", vargs.x_min, "main-ineq scan start");
    verify->add_option("--exceptions", vargs.exceptions_path, "erdos exception list file");

    auto* table1 = app.add_subcommand("table1", "joint records where n and d(n) both set records");
    table1->fallthrough();
    std::string t1_bound = "10^15";
    std::uint64_t t1_max_prime = 181;
    table1->add_option("--bound", t1_bound, "decimal or a^b bound expression");
    table1->add_option("--max-prime", t1_max_prime, "largest prime restriction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (!mem_cap_text.empty()) global.mem_cap = parse_byte_size(mem_cap_text);

        if (sieve->parsed()) return cmd_sieve(sieve_limit, global);
        if (pi->parsed()) {
            return cmd_pi(parse_u64_magnitude(pi_x, "pi argument"), pi_limit, global);
        }
        if (rp->parsed()) return cmd_rp(rp_k, rp_limit, global);
        if (hcn->parsed()) {
            return cmd_generate(gen_bound, gen_max_prime, gen_brute, gen_stats, global);
        }
        if (verify->parsed()) {
            if (verify_prime_limit != 0) {
                vargs.lemma1_prime_limit = verify_prime_limit;
                vargs.threshold_prime_limit = verify_prime_limit;
            }
            return cmd_verify(vargs, global);
        }
        if (table1->parsed()) return cmd_table1(t1_bound, t1_max_prime, global);
    } catch (const usage_error& e) {
        std::cerr << "hcnlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const out_of_range_error& e) {
        std::cerr << "hcnlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const insufficient_table_error& e) {
        std::cerr << "hcnlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const parse_error& e) {
        std::cerr << "hcnlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const integrity_error& e) {
        std::cerr << "hcnlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "hcnlab: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
