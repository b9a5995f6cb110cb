// socialist: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 I/O or input
// format error, 3 a surviving candidate (or socialist prime) was found,
// 4 internal error or failed identity.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "socialist/socialist.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitSurvivor = 3;
constexpr int kExitInternal = 4;

int exit_code_for(sp_status status) {
    switch (status) {
        case SP_OK: return kExitOk;
        case SP_ERR_INVALID_ARGUMENT:
        case SP_ERR_CHECKPOINT_MISMATCH: return kExitUsage;
        case SP_ERR_IO:
        case SP_ERR_FORMAT:
        case SP_ERR_CHECKPOINT_CORRUPT: return kExitIo;
        default: return kExitInternal;
    }
}

// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
    int code;
};

void check(sp_status status) {
    if (status == SP_OK) return;
    std::fprintf(stderr, "error (%s): %s\n", sp_status_name(status), sp_last_error());
    throw Exit{exit_code_for(status)};
}

void print_owned(char* json) {
    std::printf("%s\n", json);
    sp_string_free(json);
}

std::vector<uint64_t> parse_list(const std::string& text) {
    std::vector<uint64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(item, &used);
            if (used != item.size() || item.empty() || item[0] == '-') throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            std::fprintf(stderr, "error: \"%s\" is not a non-negative integer\n", item.c_str());
            throw Exit{kExitUsage};
        }
        pos = comma + 1;
    }
    return out;
}

struct PrimeIter {
    sp_prime_iter* it = nullptr;
    PrimeIter(uint64_t lo, uint64_t hi) { check(sp_prime_iter_create(lo, hi, 0, &it)); }
    ~PrimeIter() { sp_prime_iter_destroy(it); }
    PrimeIter(const PrimeIter&) = delete;
    PrimeIter& operator=(const PrimeIter&) = delete;
    bool next(uint64_t& p) { return sp_prime_iter_next(it, &p) == 1; }
};

// ---------------------------------------------------------------------------

struct SearchArgs {
    uint64_t from = 0;
    uint64_t to = 0;
    std::string filters = "rs";
    unsigned table_bits = 19;
    bool witness = false;
    unsigned threads = 0;
    uint64_t chunk_size = 10000;
    uint64_t segment_size = 0;
    uint64_t max_iterations = 0;
    uint64_t max_chunks = 0;
    std::string checkpoint;
    bool resume = false;
    std::string format = "jsonl";
    std::string out;
};

int run_search(const SearchArgs& a) {
    sp_search_config* cfg = nullptr;
    check(sp_search_config_create(a.from, a.to, &cfg));
    struct ConfigGuard {
        sp_search_config* c;
        ~ConfigGuard() { sp_search_config_destroy(c); }
    } guard{cfg};

    check(sp_search_config_set_filters(cfg, a.filters.c_str()));
    check(sp_search_config_set_table_bits(cfg, a.table_bits));
    check(sp_search_config_set_witness(cfg, a.witness));
    unsigned threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
    check(sp_search_config_set_workers(cfg, threads));
    check(sp_search_config_set_chunk_size(cfg, a.chunk_size));
    if (a.segment_size) check(sp_search_config_set_segment_size(cfg, a.segment_size));
    check(sp_search_config_set_max_iterations(cfg, a.max_iterations));
    check(sp_search_config_set_max_chunks(cfg, a.max_chunks));
    check(sp_search_config_set_format(cfg, a.format.c_str()));
    const bool to_stdout = a.out.empty();
    check(sp_search_config_set_output(cfg, to_stdout ? "-" : a.out.c_str()));
    if (!a.checkpoint.empty())
        check(sp_search_config_set_checkpoint(cfg, a.checkpoint.c_str(), a.resume));
    else if (a.resume) {
        std::fprintf(stderr, "error: --resume requires --checkpoint\n");
        return kExitUsage;
    }

    sp_search_report* report = nullptr;
    check(sp_search_run(cfg, &report));
    struct ReportGuard {
        sp_search_report* r;
        ~ReportGuard() { sp_search_report_destroy(r); }
    } report_guard{report};

    char* summary = nullptr;
    check(sp_search_report_json(report, &summary));
    // A jsonl stream on stdout already ends with the summary line.
    if (!(to_stdout && a.format == "jsonl")) {
        std::FILE* dest = (to_stdout && a.format == "csv") ? stderr : stdout;
        std::fprintf(dest, "%s\n", summary);
    }
    sp_string_free(summary);

    sp_search_counters counters{};
    check(sp_search_report_counters(report, &counters));
    std::fprintf(stderr,
                 "search [%llu, %llu): %llu primes, %llu rs, %llu eliminated, %llu candidates, %llu capped, %.2fs%s\n",
                 static_cast<unsigned long long>(a.from), static_cast<unsigned long long>(a.to),
                 static_cast<unsigned long long>(counters.primes_seen),
                 static_cast<unsigned long long>(counters.rs_passed),
                 static_cast<unsigned long long>(counters.eliminated),
                 static_cast<unsigned long long>(counters.candidates),
                 static_cast<unsigned long long>(counters.capped), sp_search_report_elapsed(report),
                 sp_search_report_complete(report) ? "" : " (incomplete)");
    if (sp_search_report_survivor_count(report) > 0) {
        std::fprintf(stderr, "SURVIVORS FOUND: see the summary's survivors list\n");
        return kExitSurvivor;
    }
    return kExitOk;
}

int run_verify(std::optional<uint64_t> prime, std::optional<uint64_t> to) {
    int code = kExitOk;
    auto one = [&](uint64_t p) {
        sp_verdict v{};
        check(sp_brute_force(p, &v));
        char* json = nullptr;
        check(sp_verify_json(p, &json));
        print_owned(json);
        if (v.is_socialist && p > 5) code = kExitSurvivor;
    };
    if (prime) {
        one(*prime);
        return code;
    }
    PrimeIter primes(5, *to);
    uint64_t p = 0;
    while (primes.next(p)) one(p);
    return code;
}

int run_conditions(uint64_t p) {
    char* json = nullptr;
    check(sp_conditions_json(p, &json));
    print_owned(json);
    return kExitOk;
}

int run_leftfact(std::optional<uint64_t> prime, std::optional<uint64_t> to, const std::string& k_list,
                 const std::string& out) {
    std::vector<uint64_t> ks;
    if (!k_list.empty()) ks = parse_list(k_list);

    sp_residue_table* table = nullptr;
    check(sp_residue_table_create(&table));
    struct TableGuard {
        sp_residue_table* t;
        ~TableGuard() { sp_residue_table_destroy(t); }
    } guard{table};

    auto one = [&](uint64_t p) {
        char* json = nullptr;
        check(sp_leftfact_json(p, ks.data(), ks.size(), &json));
        print_owned(json);
        if (!out.empty()) {
            uint64_t r = 0;
            check(sp_left_factorial(p, &r));
            check(sp_residue_table_append(table, p, r));
        }
    };
    if (prime) {
        one(*prime);
    } else {
        PrimeIter primes(2, *to);
        uint64_t p = 0;
        while (primes.next(p)) one(p);
    }
    if (!out.empty()) check(sp_residue_table_write(table, out.c_str()));
    return kExitOk;
}

int run_estimate(std::optional<uint64_t> wp, std::optional<double> tail, const std::vector<uint64_t>& interval) {
    auto emit = [](const sp_estimate& e) {
        char* json = nullptr;
        check(sp_estimate_json(&e, &json));
        print_owned(json);
    };
    sp_estimate e{};
    if (wp) {
        check(sp_ln_wp(*wp, &e));
        emit(e);
        check(sp_wp_upper_bound(*wp, &e));
        emit(e);
    }
    if (tail) {
        check(sp_tail_bound(*tail, &e));
        emit(e);
    }
    if (!interval.empty()) {
        check(sp_interval_sum_wp(interval[0], interval[1], &e));
        emit(e);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search for primes p > 5 whose factorials 2!, ..., (p-1)! are distinct mod p", "socialist"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sp_version()));

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Run the filter + duplicate-scan pipeline over [from, to)");
    search->add_option("--from", sa.from, "First integer of the range (must exceed 5)")->required();
    search->add_option("--to", sa.to, "End of the range (exclusive)")->required();
    search->add_option("--filters", sa.filters, "Comma list over rs,t,qf,lfc (rs always applies)")
        ->capture_default_str();
    search->add_option("--table-bits", sa.table_bits, "log2 of the duplicate-scan table size, 10..28")
        ->capture_default_str();
    search->add_flag("--witness", sa.witness, "Record the duplicate pair (i, j) for each elimination");
    search->add_option("--threads", sa.threads, "Worker threads (default: hardware concurrency)")
        ->envname("SOCIALIST_SIEVE_THREADS");
    search->add_option("--chunk-size", sa.chunk_size, "Primes per work unit")->capture_default_str();
    search->add_option("--segment-size", sa.segment_size, "Integers per sieve segment (>= 1024)");
    search->add_option("--max-iterations", sa.max_iterations, "Cap on scan iterations per prime (0 = none)");
    search->add_option("--max-chunks", sa.max_chunks, "Stop after this many chunks, leaving a checkpoint");
    search->add_option("--checkpoint", sa.checkpoint, "Checkpoint file, rewritten after every chunk");
    search->add_flag("--resume", sa.resume, "Continue from --checkpoint if it exists");
    search->add_option("--format", sa.format, "Record format")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    search->add_option("--out", sa.out, "Record file (default: standard output)");

    std::optional<uint64_t> verify_prime, verify_to;
    auto* verify = app.add_subcommand("verify", "Brute-force distinctness check for one prime or all primes below N");
    auto* vp = verify->add_option("--prime", verify_prime, "Prime to verify (5 <= P < 2^24)");
    auto* vt = verify->add_option("--to", verify_to, "Verify every prime 5 <= p < N");
    vp->excludes(vt);

    uint64_t cond_prime = 0;
    auto* conditions = app.add_subcommand("conditions", "Print the necessary-condition report for a prime");
    conditions->add_option("--prime", cond_prime, "Prime > 5")->required();

    std::optional<uint64_t> lf_prime, lf_to;
    std::string lf_k, lf_out;
    auto* leftfact = app.add_subcommand("leftfact", "Left factorial residues !p mod p");
    auto* lp = leftfact->add_option("--prime", lf_prime, "Prime p");
    auto* lt = leftfact->add_option("--to", lf_to, "Every prime p < N");
    lp->excludes(lt);
    leftfact->add_option("--k", lf_k, "Comma list of exponents k for !^k p");
    leftfact->add_option("--out", lf_out, "Write the p,r_p CSV table to this path");

    std::optional<uint64_t> est_wp;
    std::optional<double> est_tail;
    std::vector<uint64_t> est_interval;
    auto* estimate = app.add_subcommand("estimate", "Heuristic probability estimates (natural and decimal logs)");
    auto* ew = estimate->add_option("--wp", est_wp, "ln W_p and its closed-form bound for p >= 5");
    auto* et = estimate->add_option("--tail", est_tail, "Tail bound for socialist primes above A");
    auto* ei = estimate->add_option("--interval", est_interval, "Sum of W_p over primes in [A, B)")->expected(2);
    ew->excludes(et)->excludes(ei);
    et->excludes(ei);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*search) return run_search(sa);
        if (*verify) {
            if (!verify_prime && !verify_to) {
                std::fprintf(stderr, "error: verify needs --prime or --to\n");
                return kExitUsage;
            }
            return run_verify(verify_prime, verify_to);
        }
        if (*conditions) return run_conditions(cond_prime);
        if (*leftfact) {
            if (!lf_prime && !lf_to) {
                std::fprintf(stderr, "error: leftfact needs --prime or --to\n");
                return kExitUsage;
            }
            return run_leftfact(lf_prime, lf_to, lf_k, lf_out);
        }
        if (*estimate) {
            if (!est_wp && !est_tail && est_interval.empty()) {
                std::fprintf(stderr, "error: estimate needs --wp, --tail or --interval\n");
                return kExitUsage;
            }
            return run_estimate(est_wp, est_tail, est_interval);
        }
    } catch (const Exit& e) {
        return e.code;
    }
    return kExitUsage;
}
