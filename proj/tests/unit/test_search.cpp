#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <unistd.h>

#include "socialist/conditions.hpp"
#include "socialist/errors.hpp"
#include "socialist/search.hpp"

using namespace socialist;
namespace fs = std::filesystem;

namespace {

SearchConfig make_config(u64 lo, u64 hi, const char* filters = "rs") {
    SearchConfig c;
    c.range = PrimeRange{lo, hi};
    c.filters = FilterSet::parse(filters);
    return c;
}

void check_conservation(const SearchReport& r) {
    const auto& c = r.counters;
    REQUIRE(c.primes_seen == r.rejected.total() + c.eliminated + c.candidates + c.capped);
    REQUIRE(c.rs_passed == c.primes_seen - r.rejected.mod8 - r.rejected.legendre_5 - r.rejected.legendre_m23);
    REQUIRE(r.iterations.scanned == c.eliminated + c.candidates + c.capped);
    REQUIRE(r.survivors.size() == c.candidates + c.capped);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("socialist_search_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("rs search over (5, 10^4] eliminates every RS prime") {
    auto report = run_search(make_config(6, 10001));
    u64 rs = 0;
    for (u64 p : primes_in_range({6, 10001})) rs += detail::rs_pass(p);
    CHECK(report.counters.candidates == 0);
    CHECK(report.counters.eliminated == rs);
    CHECK(report.survivors.empty());
    CHECK(report.complete);
    check_conservation(report);
}

TEST_CASE("filter counts below 10^6 through the pipeline") {
    auto rs = run_search(make_config(6, 1000000));
    CHECK(rs.counters.rs_passed == 4908);
    CHECK(rs.counters.candidates == 0);
    check_conservation(rs);

    auto rst = run_search(make_config(6, 1000000, "rs,t"));
    CHECK(rst.counters.t_passed == 3662);
    CHECK(rst.counters.rs_passed == 4908);
    CHECK(rst.survivors == rs.survivors);
    check_conservation(rst);
}

TEST_CASE("counters do not depend on chunk size or worker count") {
    std::string reference_output;
    SearchCounters reference;
    bool first = true;
    for (u64 chunk : {u64{1000}, u64{10000}, u64{100000}}) {
        for (unsigned workers : {1u, 3u}) {
            auto config = make_config(6, 1000000, "rs,t");
            config.chunk_size = chunk;
            config.workers = workers;
            std::ostringstream out;
            config.output_stream = &out;
            auto report = run_search(config);
            check_conservation(report);
            // The record lines must match; the summary line differs in chunks_completed.
            std::string records = out.str().substr(0, out.str().rfind("{\"summary\""));
            if (first) {
                reference = report.counters;
                reference_output = records;
                first = false;
            }
            CAPTURE(chunk);
            CAPTURE(workers);
            CHECK(report.counters == reference);
            CHECK(records == reference_output);
        }
    }
}

TEST_CASE("qf and lfc filters run below the oracle bound") {
    auto report = run_search(make_config(6, 100000, "rs,t,qf,lfc"));
    check_conservation(report);
    CHECK(report.counters.candidates == 0);
    CHECK(report.rejected.qf + report.rejected.lfc == report.counters.t_passed);
    CHECK(report.counters.eliminated == 0);
}

TEST_CASE("capped scans below 2^24 are settled by the oracle") {
    auto config = make_config(6, 20000);
    config.collision.max_iterations = 1;
    config.collision.witness_mode = true;
    auto report = run_search(config);
    CHECK(report.counters.capped == 0);
    CHECK(report.counters.candidates == 0);
    CHECK(report.counters.eliminated == report.counters.rs_passed);
}

TEST_CASE("capped scans above 2^24 are reported as survivors") {
    auto config = make_config(u64{1} << 24, (u64{1} << 24) + 5000);
    config.collision.max_iterations = 1;
    auto report = run_search(config);
    CHECK(report.counters.capped == report.counters.rs_passed);
    CHECK(report.counters.capped > 0);
    check_conservation(report);
    for (const auto& s : report.survivors) CHECK(s.status == "iteration-cap");
}

TEST_CASE("interrupted then resumed search matches an uninterrupted run") {
    TempDir dir;
    auto base = make_config(6, 100000, "rs");
    base.chunk_size = 1000;  // 9589 primes -> 10 chunks
    base.collision.witness_mode = true;

    auto full = base;
    full.output_path = dir.path / "full.jsonl";
    auto full_report = run_search(full);
    REQUIRE(full_report.chunks_completed == 10);

    auto part = base;
    part.output_path = dir.path / "part.jsonl";
    part.checkpoint_path = dir.path / "state.json";
    part.max_chunks = 3;
    auto first = run_search(part);
    CHECK(first.chunks_completed == 3);
    CHECK_FALSE(first.complete);
    auto saved = checkpoint_resume(part, *part.checkpoint_path);
    CHECK(saved.completed_chunks.size() == 3);

    part.max_chunks.reset();
    part.resume = true;
    auto second = run_search(part);
    CHECK(second.complete);
    CHECK(second.chunks_completed == 10);
    CHECK(second.counters == full_report.counters);
    CHECK(second.rejected == full_report.rejected);
    CHECK(second.survivors == full_report.survivors);
    CHECK(slurp(*part.output_path) == slurp(*full.output_path));
}

TEST_CASE("resume after a crash past the checkpoint discards the extra records") {
    TempDir dir;
    auto config = make_config(6, 50000);
    config.chunk_size = 500;
    config.output_path = dir.path / "out.jsonl";
    config.checkpoint_path = dir.path / "state.json";
    config.max_chunks = 2;
    run_search(config);
    {
        std::ofstream junk(*config.output_path, std::ios::app);
        junk << "{\"p\":1,\"status\":\"partial";
    }
    config.max_chunks.reset();
    config.resume = true;
    run_search(config);

    auto fresh = make_config(6, 50000);
    fresh.chunk_size = 500;
    fresh.output_path = dir.path / "fresh.jsonl";
    run_search(fresh);
    CHECK(slurp(*config.output_path) == slurp(*fresh.output_path));
}

TEST_CASE("checkpoint guards") {
    TempDir dir;
    auto config = make_config(6, 20000);
    config.chunk_size = 200;
    config.checkpoint_path = dir.path / "state.json";
    config.max_chunks = 2;
    run_search(config);

    auto altered = config;
    altered.range.hi = 30000;
    altered.resume = true;
    try {
        run_search(altered);
        FAIL("expected a digest mismatch");
    } catch (const CheckpointError& e) {
        CHECK(e.kind() == CheckpointError::Kind::DigestMismatch);
    }

    {
        std::ofstream bad(*config.checkpoint_path, std::ios::trunc);
        bad << "{ not json";
    }
    try {
        checkpoint_resume(config, *config.checkpoint_path);
        FAIL("expected a corrupt checkpoint");
    } catch (const CheckpointError& e) {
        CHECK(e.kind() == CheckpointError::Kind::Corrupt);
    }

    // Missing checkpoint with resume requested starts from scratch.
    auto fresh = make_config(6, 20000);
    fresh.checkpoint_path = dir.path / "absent.json";
    fresh.resume = true;
    CHECK(run_search(fresh).complete);
}

TEST_CASE("checkpoint save and load round trip") {
    TempDir dir;
    auto config = make_config(6, 1000);
    SearchCheckpoint state;
    state.config_digest = config.digest();
    state.completed_chunks = {{6, 500}, {500, 1000}};
    state.counters.primes_seen = 165;
    state.iterations = {3, 40, 20, 2.5};
    state.survivors.push_back(PrimeRecord{13, "unresolved-candidate", 11, Witness{2, 3, 4}});
    state.output_bytes = 77;
    checkpoint_save(state, dir.path / "c.json");
    CHECK(checkpoint_resume(config, dir.path / "c.json") == state);
    CHECK_FALSE(fs::exists(dir.path / "c.json.tmp"));
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(run_search(make_config(5, 100)), std::invalid_argument);
    CHECK_THROWS_AS(run_search(make_config(100, 100)), std::invalid_argument);
    CHECK_THROWS_AS(run_search(make_config(u64{1} << 24, (u64{1} << 24) + 10, "rs,qf")), std::invalid_argument);
    auto no_path = make_config(6, 100);
    no_path.resume = true;
    CHECK_THROWS_AS(run_search(no_path), std::invalid_argument);
    CHECK_THROWS_AS(FilterSet::parse("rs,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}

TEST_CASE("filter sets and digests") {
    CHECK(FilterSet::parse("t").to_string() == "rs,t");
    CHECK(FilterSet::parse("lfc,rs,qf").to_string() == "rs,qf,lfc");
    auto a = make_config(6, 1000);
    auto b = a;
    b.workers = 7;
    b.max_chunks = 2;
    CHECK(a.digest() == b.digest());
    b.chunk_size = 5;
    CHECK(a.digest() != b.digest());
}

TEST_CASE("csv output") {
    auto config = make_config(6, 200);
    config.output_format = OutputFormat::Csv;
    config.collision.witness_mode = true;
    std::ostringstream out;
    config.output_stream = &out;
    run_search(config);
    CHECK(out.str() == "p,status,iterations,witness_i,witness_j,witness_value\n"
                       "13,eliminated,8,4,9,11\n"
                       "173,eliminated,14,10,15,125\n"
                       "197,eliminated,8,3,9,6\n");
}
