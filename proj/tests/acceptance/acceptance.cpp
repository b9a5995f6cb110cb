// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "socialist/collision.hpp"
#include "socialist/conditions.hpp"
#include "socialist/heuristics.hpp"
#include "socialist/leftfact.hpp"
#include "socialist/modmath.hpp"
#include "socialist/oracle.hpp"
#include "socialist/primegen.hpp"
#include "socialist/search.hpp"

using namespace socialist;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict residues() {
    const std::pair<u64, u64> expected[] = {{5, 4}, {13, 10}, {157, 131}, {317, 205}, {5449, 4816}, {5749, 808}};
    auto start = std::chrono::steady_clock::now();
    int wrong = 0;
    for (auto [p, r] : expected) wrong += left_factorial_mod(p).r_p != r;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {wrong == 0 && secs < 1.0, std::to_string(6 - wrong) + "/6 residues match in " + std::to_string(secs) + " s"};
}

Verdict lfc_exclusive() {
    std::set<u64> hits;
    for (u64 p : primes_in_range({3, 100000}))
        if (lfc_check(p)) hits.insert(p);
    const std::set<u64> expected{5, 13, 157, 317, 5449, 5749};
    std::string list;
    for (u64 p : hits) list += (list.empty() ? "" : ",") + std::to_string(p);
    return {hits == expected, "lfc holds for {" + list + "}"};
}

Verdict filter_counts() {
    SearchConfig small;
    small.range = {6, 1000};
    SearchConfig rs;
    rs.range = {6, 1000000};
    rs.filters = FilterSet::parse("rs,t");
    rs.workers = worker_count();
    auto a = run_search(small);
    auto b = run_search(rs);
    bool ok = a.counters.rs_passed == 10 && b.counters.rs_passed == 4908 && b.counters.t_passed == 3662;
    return {ok, "rs below 1000: " + std::to_string(a.counters.rs_passed) + ", rs below 10^6: " +
                    std::to_string(b.counters.rs_passed) + ", rs+t below 10^6: " + std::to_string(b.counters.t_passed)};
}

Verdict no_socialist() {
    u64 socialist = 0, checked = 0;
    for (u64 p : primes_in_range({7, 100000})) {
        ++checked;
        socialist += brute_force_socialist(p).is_socialist;
    }
    SearchConfig config;
    config.range = {6, 100000001};
    config.workers = worker_count();
    auto start = std::chrono::steady_clock::now();
    auto report = run_search(config);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = socialist == 0 && report.complete && report.counters.candidates == 0 && report.counters.capped == 0 &&
              report.survivors.empty();
    return {ok, "oracle: " + std::to_string(checked) + " primes, " + std::to_string(socialist) +
                    " socialist; search to 10^8: " + std::to_string(report.counters.rs_passed) + " rs primes, " +
                    std::to_string(report.counters.eliminated) + " eliminated, " +
                    std::to_string(report.counters.candidates + report.counters.capped) + " left, " +
                    std::to_string(secs) + " s"};
}

Verdict birthday() {
    CollisionScanner scanner(CollisionConfig{});
    double ratio = 0;
    int n = 0;
    for (u64 p : primes_in_range({100000000, 101000000})) {
        if (!detail::rs_pass(p)) continue;
        auto o = scanner.scan(p);
        if (o.status != CollisionStatus::Eliminated) return {false, "p = " + std::to_string(p) + " not eliminated"};
        ratio += static_cast<double>(o.iterations) / expected_iterations(p);
        if (++n == 400) break;
    }
    double mean = ratio / n;
    double e11 = expected_iterations(100000000000ull);
    double two_sig = std::round(e11 / 1e4) * 1e4;
    bool ok = n >= 200 && mean >= 0.8 && mean <= 2.5 && two_sig == 400000.0;
    return {ok, std::to_string(n) + " primes, mean ratio " + std::to_string(mean) +
                    "; expected_iterations(10^11) = " + std::to_string(e11)};
}

Verdict identities() {
    std::mt19937_64 rng(2024);
    const auto primes = primes_in_range({3, 100000});
    int failures = 0;

    for (int i = 0; i < 10000; ++i) {
        u64 p = primes[rng() % primes.size()];
        u64 k = 1 + rng() % p;
        failures += !wilson_identity_check(p, k);
    }
    for (u64 p : primes_in_range({3, 10000})) {
        u64 f = 1;
        for (u64 i = 2; i <= p - 2; ++i) f = mul_mod(f, i, p);
        failures += f != 1;
        failures += mul_mod(f, p - 1, p) != p - 1;
    }

    for (int i = 0; i < 1000; ++i) {
        u64 p = primes[1 + rng() % (primes.size() - 1)];
        u64 a = rng() % p;
        u64 e = pow_mod(a, (p - 1) / 2, p);
        int euler = e == 0 ? 0 : (e == 1 ? 1 : -1);
        failures += jacobi(static_cast<std::int64_t>(a), p) != euler;
    }

    const auto small = primes_in_range({7, 10000});
    for (int i = 0; i < 50; ++i) {
        u64 p = small[rng() % small.size()];
        u64 k = 1 + rng() % ((p - 3) / 2);
        const u64 ks[] = {2 * k, p - 2 * k - 1};
        auto g = generalized_left_factorial_mod(p, ks);
        failures += g[0].value != g[1].value;
    }

    for (u64 p : primes_in_range({5, 100000})) {
        auto scanned = detail::cubic_roots_by_scan(p);
        auto extracted = detail::cubic_roots_by_gcd(p);
        failures += scanned != extracted;
        int symbol = jacobi(constants::kCubicDiscriminant, p);
        if (symbol == -1) failures += extracted.size() != 1;
        if (symbol == 1) failures += !(extracted.empty() || extracted.size() == 3);
    }
    return {failures == 0, std::to_string(failures) + " failures"};
}

Verdict heuristic_bounds() {
    int violations = 0;
    for (u64 p : primes_in_range({5, 10001}))
        violations += ln_wp(p).ln_value > wp_upper_bound(p).ln_value + 1e-9;
    double tail = tail_bound(1e11).log10_value;
    return {violations == 0 && tail <= -1e12 + 1e-9,
            std::to_string(violations) + " bound violations; log10 tail_bound(10^11) = " + std::to_string(tail)};
}

Verdict oracle_collision() {
    int disagreements = 0, checked = 0;
    for (unsigned bits : {12u, 16u, 19u}) {
        for (u64 p : primes_in_range({7, 10001})) {
            bool eliminated =
                find_duplicate(p, CollisionConfig{bits, false, std::nullopt}).status == CollisionStatus::Eliminated;
            disagreements += eliminated != brute_force_socialist(p).duplicate.has_value();
            ++checked;
        }
    }
    return {disagreements == 0, std::to_string(checked) + " comparisons, " + std::to_string(disagreements) +
                                    " disagreements"};
}

Verdict determinism() {
    auto dir = fs::temp_directory_path() / ("socialist_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    SearchConfig base;
    base.range = {6, 1000000};
    base.filters = FilterSet::parse("rs,t");
    base.collision.witness_mode = true;
    base.chunk_size = 2000;

    auto full = base;
    full.output_path = dir / "full.jsonl";
    auto full_report = run_search(full);

    auto part = base;
    part.output_path = dir / "part.jsonl";
    part.checkpoint_path = dir / "state.json";
    part.max_chunks = 13;
    run_search(part);
    part.max_chunks.reset();
    part.resume = true;
    part.workers = 3;
    auto resumed = run_search(part);
    bool bytes_equal = slurp(*part.output_path) == slurp(*full.output_path);

    bool counters_equal = resumed.counters == full_report.counters && resumed.rejected == full_report.rejected;
    for (u64 chunk : {u64{1000}, u64{10000}, u64{100000}})
        for (unsigned workers : {1u, 2u, 4u}) {
            auto c = base;
            c.chunk_size = chunk;
            c.workers = workers;
            auto r = run_search(c);
            counters_equal = counters_equal && r.counters == full_report.counters &&
                             r.rejected == full_report.rejected && r.iterations == full_report.iterations;
        }
    fs::remove_all(dir);
    return {bytes_equal && counters_equal, std::string("resumed output ") + (bytes_equal ? "identical" : "differs") +
                                               ", counters " + (counters_equal ? "invariant" : "vary")};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"left factorial residues", residues},
        {"lfc exclusivity below 10^5", lfc_exclusive},
        {"filter counts", filter_counts},
        {"no socialist primes at desk scale", no_socialist},
        {"birthday statistics", birthday},
        {"identity suites", identities},
        {"heuristic bounds", heuristic_bounds},
        {"oracle/collision equivalence", oracle_collision},
        {"determinism and resumability", determinism},
    };
    int failed = 0, index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !v.pass;
    }
    return failed == 0 ? 0 : 1;
}
