#include "socialist/socialist.h"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <new>
#include <string>
#include <vector>

#include "socialist/collision.hpp"
#include "socialist/conditions.hpp"
#include "socialist/errors.hpp"
#include "socialist/heuristics.hpp"
#include "socialist/leftfact.hpp"
#include "socialist/oracle.hpp"
#include "socialist/primegen.hpp"
#include "socialist/search.hpp"
#include "socialist/serialize.hpp"

using namespace socialist;

struct sp_prime_iter {
    explicit sp_prime_iter(const PrimeRange& range, bool filtered) : stream(range), only_5_mod_8(filtered) {}
    PrimeStream stream;
    bool only_5_mod_8;
};

struct sp_residue_table {
    std::vector<ResidueRecord> records;
};

struct sp_scanner {
    explicit sp_scanner(const CollisionConfig& config) : scanner(config) {}
    CollisionScanner scanner;
};

struct sp_search_config {
    SearchConfig config;
};

struct sp_search_report {
    SearchReport report;
};

namespace {

thread_local std::string g_last_error;

sp_status fail(sp_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <class Fn>
sp_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return SP_OK;
    } catch (const CheckpointError& e) {
        return fail(e.kind() == CheckpointError::Kind::DigestMismatch ? SP_ERR_CHECKPOINT_MISMATCH
                                                                       : SP_ERR_CHECKPOINT_CORRUPT,
                    e.what());
    } catch (const IoError& e) {
        return fail(SP_ERR_IO, e.what());
    } catch (const FormatError& e) {
        return fail(SP_ERR_FORMAT, e.what());
    } catch (const ContradictionError& e) {
        return fail(SP_ERR_CONTRADICTION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SP_ERR_INTERNAL, "unknown error");
    }
}

void require(const void* ptr, const char* name) {
    if (!ptr) throw std::invalid_argument(std::string(name) + " must not be NULL");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit_json(const Json& json, char** out) {
    require(out, "json_out");
    *out = copy_string(dump_line(json));
}

void require_modulus(uint64_t m) {
    if (m == 0) throw std::invalid_argument("modulus must be nonzero");
}

sp_estimate to_c(const HeuristicEstimate& e) {
    return sp_estimate{static_cast<sp_estimate_kind>(static_cast<int>(e.kind)), e.argument, e.argument_hi,
                       e.ln_value, e.log10_value};
}

}  // namespace

extern "C" {

const char* sp_version(void) { return "1.0.0"; }

const char* sp_last_error(void) { return g_last_error.c_str(); }

const char* sp_status_name(sp_status status) {
    switch (status) {
        case SP_OK: return "ok";
        case SP_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case SP_ERR_IO: return "io";
        case SP_ERR_FORMAT: return "format";
        case SP_ERR_CHECKPOINT_MISMATCH: return "checkpoint-mismatch";
        case SP_ERR_CHECKPOINT_CORRUPT: return "checkpoint-corrupt";
        case SP_ERR_CONTRADICTION: return "contradiction";
        case SP_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

void sp_string_free(char* s) { std::free(s); }

// ---------------------------------------------------------------------------
// modular arithmetic

sp_status sp_mul_mod(uint64_t a, uint64_t b, uint64_t m, uint64_t* out) {
    return guarded([&] {
        require(out, "out");
        require_modulus(m);
        *out = mul_mod(a % m, b % m, m);
    });
}

sp_status sp_pow_mod(uint64_t a, uint64_t e, uint64_t m, uint64_t* out) {
    return guarded([&] {
        require(out, "out");
        require_modulus(m);
        *out = pow_mod(a, e, m);
    });
}

sp_status sp_jacobi(int64_t a, uint64_t n, int* out) {
    return guarded([&] {
        require(out, "out");
        *out = jacobi(a, n);
    });
}

int sp_is_prime(uint64_t n) { return is_prime(n) ? 1 : 0; }

sp_status sp_sqrt_mod(uint64_t a, uint64_t p, uint64_t* out, int* found) {
    return guarded([&] {
        require(out, "out");
        require(found, "found");
        if (!is_prime(p)) throw std::invalid_argument("sqrt_mod requires a prime modulus");
        auto root = sqrt_mod(a % p, p);
        *found = root.has_value();
        *out = root.value_or(0);
    });
}

// ---------------------------------------------------------------------------
// primes

sp_status sp_prime_iter_create(uint64_t lo, uint64_t hi, int only_5_mod_8, sp_prime_iter** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sp_prime_iter(PrimeRange{lo, hi}, only_5_mod_8 != 0);
    });
}

int sp_prime_iter_next(sp_prime_iter* it, uint64_t* p) {
    if (!it || !p) return 0;
    while (auto next = it->stream.next()) {
        if (it->only_5_mod_8 && (*next & 7) != 5) continue;
        *p = *next;
        return 1;
    }
    return 0;
}

void sp_prime_iter_destroy(sp_prime_iter* it) { delete it; }

// ---------------------------------------------------------------------------
// conditions

sp_status sp_rs_filter(uint64_t p, int* pass) {
    return guarded([&] {
        require(pass, "pass");
        *pass = rs_filter(p).rs_pass;
    });
}

sp_status sp_t_filter(uint64_t p, int* pass) {
    return guarded([&] {
        require(pass, "pass");
        *pass = t_filter(p).t_pass;
    });
}

sp_status sp_quarter_factorial_filter(uint64_t p, int* pass) {
    return guarded([&] {
        require(pass, "pass");
        *pass = quarter_factorial_filter(p);
    });
}

sp_status sp_cubic_roots(uint64_t p, uint64_t roots[3], size_t* count) {
    return guarded([&] {
        require(roots, "roots");
        require(count, "count");
        auto found = cubic_roots(p).roots;
        *count = found.size();
        for (std::size_t i = 0; i < found.size(); ++i) roots[i] = found[i];
    });
}

sp_status sp_conditions_json(uint64_t p, char** json_out) {
    return guarded([&] { emit_json(to_json(evaluate_conditions(p)), json_out); });
}

// ---------------------------------------------------------------------------
// left factorials

sp_status sp_left_factorial(uint64_t p, uint64_t* r_p) {
    return guarded([&] {
        require(r_p, "r_p");
        *r_p = left_factorial_mod(p).r_p;
    });
}

sp_status sp_generalized_left_factorial(uint64_t p, const uint64_t* ks, size_t count, uint64_t* values) {
    return guarded([&] {
        if (count > 0) {
            require(ks, "ks");
            require(values, "values");
        }
        auto res = generalized_left_factorial_mod(p, std::span<const u64>(ks, count));
        for (std::size_t i = 0; i < res.size(); ++i) values[i] = res[i].value;
    });
}

sp_status sp_lfc_check(uint64_t p, int* holds) {
    return guarded([&] {
        require(holds, "holds");
        *holds = lfc_check(p);
    });
}

sp_status sp_lfck_check(uint64_t p, uint64_t k, int* holds) {
    return guarded([&] {
        require(holds, "holds");
        *holds = lfck_check(p, k);
    });
}

sp_status sp_leftfact_json(uint64_t p, const uint64_t* ks, size_t count, char** json_out) {
    return guarded([&] {
        auto record = left_factorial_mod(p);
        if (count == 0) {
            emit_json(to_json(record), json_out);
            return;
        }
        require(ks, "ks");
        auto generalized = generalized_left_factorial_mod(p, std::span<const u64>(ks, count));
        emit_json(to_json(record, generalized), json_out);
    });
}

sp_status sp_residue_table_create(sp_residue_table** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sp_residue_table{};
    });
}

sp_status sp_residue_table_append(sp_residue_table* table, uint64_t p, uint64_t r_p) {
    return guarded([&] {
        require(table, "table");
        if (r_p >= p) throw std::invalid_argument("residue must be below p");
        if (!table->records.empty() && p <= table->records.back().p)
            throw std::invalid_argument("residue table rows must be strictly increasing in p");
        table->records.push_back({p, r_p});
    });
}

size_t sp_residue_table_size(const sp_residue_table* table) { return table ? table->records.size() : 0; }

sp_status sp_residue_table_get(const sp_residue_table* table, size_t index, uint64_t* p, uint64_t* r_p) {
    return guarded([&] {
        require(table, "table");
        require(p, "p");
        require(r_p, "r_p");
        if (index >= table->records.size()) throw std::invalid_argument("residue table index out of range");
        *p = table->records[index].p;
        *r_p = table->records[index].r_p;
    });
}

sp_status sp_residue_table_write(const sp_residue_table* table, const char* path) {
    return guarded([&] {
        require(table, "table");
        require(path, "path");
        residue_table_write(table->records, std::filesystem::path(path));
    });
}

sp_status sp_residue_table_read(const char* path, sp_residue_table** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        auto table = std::make_unique<sp_residue_table>();
        table->records = residue_table_read(std::filesystem::path(path));
        *out = table.release();
    });
}

void sp_residue_table_destroy(sp_residue_table* table) { delete table; }

// ---------------------------------------------------------------------------
// duplicate scan

sp_status sp_scanner_create(unsigned table_bits, int witness_mode, uint64_t max_iterations, sp_scanner** out) {
    return guarded([&] {
        require(out, "out");
        CollisionConfig config;
        config.table_bits = table_bits;
        config.witness_mode = witness_mode != 0;
        if (max_iterations != 0) config.max_iterations = max_iterations;
        *out = new sp_scanner(config);
    });
}

sp_status sp_scanner_scan(sp_scanner* scanner, uint64_t p, sp_collision_outcome* out) {
    return guarded([&] {
        require(scanner, "scanner");
        require(out, "out");
        if (p < 5 || p >= kModulusLimit || !is_prime(p))
            throw std::invalid_argument("scan requires a prime in [5, 2^62), got " + std::to_string(p));
        auto outcome = scanner->scanner.scan(p);
        *out = sp_collision_outcome{};
        out->p = outcome.p;
        out->status = static_cast<sp_collision_status>(static_cast<int>(outcome.status));
        out->iterations = outcome.iterations;
        if (outcome.witness) {
            out->has_witness = 1;
            out->witness_i = outcome.witness->i;
            out->witness_j = outcome.witness->j;
            out->witness_value = outcome.witness->value;
        }
    });
}

void sp_scanner_destroy(sp_scanner* scanner) { delete scanner; }

sp_status sp_expected_iterations(uint64_t p, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = expected_iterations(p);
    });
}

// ---------------------------------------------------------------------------
// oracle

sp_status sp_brute_force(uint64_t p, sp_verdict* out) {
    return guarded([&] {
        require(out, "out");
        auto v = brute_force_socialist(p);
        *out = sp_verdict{};
        out->p = v.p;
        out->is_socialist = v.is_socialist;
        if (v.duplicate) {
            out->has_duplicate = 1;
            out->duplicate_i = v.duplicate->i;
            out->duplicate_j = v.duplicate->j;
        }
        if (v.missing_residue) {
            out->has_missing_residue = 1;
            out->missing_residue = *v.missing_residue;
        }
        out->res_r_consistent = v.res_r_consistent ? (*v.res_r_consistent ? 1 : 0) : -1;
    });
}

sp_status sp_verify_json(uint64_t p, char** json_out) {
    return guarded([&] { emit_json(to_json(brute_force_socialist(p)), json_out); });
}

sp_status sp_wilson_identity_check(uint64_t p, uint64_t k, int* holds) {
    return guarded([&] {
        require(holds, "holds");
        *holds = wilson_identity_check(p, k);
    });
}

sp_status sp_quadruple_decomposition(uint64_t p, size_t* quadruple_count, int* has_defect, uint64_t* defect) {
    return guarded([&] {
        require(quadruple_count, "quadruple_count");
        require(has_defect, "has_defect");
        require(defect, "defect");
        auto d = quadruple_decomposition(p);
        *quadruple_count = d.quadruples.size();
        *has_defect = d.defect.has_value();
        *defect = d.defect.value_or(0);
    });
}

// ---------------------------------------------------------------------------
// heuristics

sp_status sp_ln_wp(uint64_t p, sp_estimate* out) {
    return guarded([&] {
        require(out, "out");
        *out = to_c(ln_wp(p));
    });
}

sp_status sp_wp_upper_bound(uint64_t p, sp_estimate* out) {
    return guarded([&] {
        require(out, "out");
        *out = to_c(wp_upper_bound(p));
    });
}

sp_status sp_interval_sum_wp(uint64_t a, uint64_t b, sp_estimate* out) {
    return guarded([&] {
        require(out, "out");
        *out = to_c(interval_sum_wp(a, b));
    });
}

sp_status sp_tail_bound(double a, sp_estimate* out) {
    return guarded([&] {
        require(out, "out");
        *out = to_c(tail_bound(a));
    });
}

sp_status sp_estimate_json(const sp_estimate* estimate, char** json_out) {
    return guarded([&] {
        require(estimate, "estimate");
        if (estimate->kind < SP_ESTIMATE_EXACT_WP || estimate->kind > SP_ESTIMATE_TAIL_BOUND)
            throw std::invalid_argument("unknown estimate kind");
        HeuristicEstimate e;
        e.kind = static_cast<EstimateKind>(static_cast<int>(estimate->kind));
        e.argument = estimate->argument;
        e.argument_hi = estimate->argument_hi;
        e.ln_value = estimate->ln_value;
        e.log10_value = estimate->log10_value;
        emit_json(to_json(e), json_out);
    });
}

// ---------------------------------------------------------------------------
// search

sp_status sp_search_config_create(uint64_t lo, uint64_t hi, sp_search_config** out) {
    return guarded([&] {
        require(out, "out");
        auto cfg = std::make_unique<sp_search_config>();
        cfg->config.range.lo = lo;
        cfg->config.range.hi = hi;
        cfg->config.range.validate();
        *out = cfg.release();
    });
}

void sp_search_config_destroy(sp_search_config* config) { delete config; }

sp_status sp_search_config_set_filters(sp_search_config* config, const char* filters) {
    return guarded([&] {
        require(config, "config");
        require(filters, "filters");
        config->config.filters = FilterSet::parse(filters);
    });
}

sp_status sp_search_config_set_table_bits(sp_search_config* config, unsigned bits) {
    return guarded([&] {
        require(config, "config");
        CollisionConfig c = config->config.collision;
        c.table_bits = bits;
        c.validate();
        config->config.collision = c;
    });
}

sp_status sp_search_config_set_witness(sp_search_config* config, int enabled) {
    return guarded([&] {
        require(config, "config");
        config->config.collision.witness_mode = enabled != 0;
    });
}

sp_status sp_search_config_set_max_iterations(sp_search_config* config, uint64_t cap) {
    return guarded([&] {
        require(config, "config");
        if (cap == 0)
            config->config.collision.max_iterations.reset();
        else
            config->config.collision.max_iterations = cap;
    });
}

sp_status sp_search_config_set_workers(sp_search_config* config, unsigned workers) {
    return guarded([&] {
        require(config, "config");
        if (workers == 0) throw std::invalid_argument("worker count must be positive");
        config->config.workers = workers;
    });
}

sp_status sp_search_config_set_chunk_size(sp_search_config* config, uint64_t primes) {
    return guarded([&] {
        require(config, "config");
        if (primes == 0) throw std::invalid_argument("chunk size must be positive");
        config->config.chunk_size = primes;
    });
}

sp_status sp_search_config_set_segment_size(sp_search_config* config, uint64_t integers) {
    return guarded([&] {
        require(config, "config");
        PrimeRange r = config->config.range;
        r.segment_size = integers;
        r.validate();
        config->config.range = r;
    });
}

sp_status sp_search_config_set_format(sp_search_config* config, const char* format) {
    return guarded([&] {
        require(config, "config");
        require(format, "format");
        config->config.output_format = parse_output_format(format);
    });
}

sp_status sp_search_config_set_output(sp_search_config* config, const char* path) {
    return guarded([&] {
        require(config, "config");
        config->config.output_path.reset();
        config->config.output_stream = nullptr;
        if (!path) return;
        if (std::string_view(path) == "-")
            config->config.output_stream = &std::cout;
        else
            config->config.output_path = std::filesystem::path(path);
    });
}

sp_status sp_search_config_set_checkpoint(sp_search_config* config, const char* path, int resume) {
    return guarded([&] {
        require(config, "config");
        if (path)
            config->config.checkpoint_path = std::filesystem::path(path);
        else
            config->config.checkpoint_path.reset();
        config->config.resume = resume != 0;
    });
}

sp_status sp_search_config_set_max_chunks(sp_search_config* config, uint64_t chunks) {
    return guarded([&] {
        require(config, "config");
        if (chunks == 0)
            config->config.max_chunks.reset();
        else
            config->config.max_chunks = chunks;
    });
}

sp_status sp_search_run(const sp_search_config* config, sp_search_report** out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        auto report = std::make_unique<sp_search_report>();
        report->report = run_search(config->config);
        *out = report.release();
    });
}

sp_status sp_search_report_json(const sp_search_report* report, char** json_out) {
    return guarded([&] {
        require(report, "report");
        emit_json(to_json(report->report), json_out);
    });
}

sp_status sp_search_report_counters(const sp_search_report* report, sp_search_counters* out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        const auto& c = report->report.counters;
        *out = sp_search_counters{c.primes_seen, c.rs_passed, c.t_passed, c.eliminated, c.candidates, c.capped};
    });
}

size_t sp_search_report_survivor_count(const sp_search_report* report) {
    return report ? report->report.survivors.size() : 0;
}

int sp_search_report_complete(const sp_search_report* report) { return report && report->report.complete; }

double sp_search_report_elapsed(const sp_search_report* report) {
    return report ? report->report.elapsed_seconds : 0.0;
}

void sp_search_report_destroy(sp_search_report* report) { delete report; }

}  // extern "C"
