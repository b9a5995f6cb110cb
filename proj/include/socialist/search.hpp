#pragma once

// Range search pipeline:
//   sieve -> p = 5 (mod 8) -> (5/p) -> (-23/p) -> [T-c] -> [qf] -> [lfc]
//   -> duplicate scan -> oracle escalation below 2^24.
//
// The range is cut into chunks of `chunk_size` consecutive primes. Workers
// process chunks independently; results are merged strictly in chunk order,
// so the record stream does not depend on the number of workers.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socialist/collision.hpp"
#include "socialist/primegen.hpp"

namespace socialist {

struct FilterSet {
    bool rs = true;
    bool t = false;
    bool qf = false;
    bool lfc = false;

    /// Comma-separated subset of {rs, t, qf, lfc}; "rs" is always implied.
    static FilterSet parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const FilterSet&, const FilterSet&) = default;
};

enum class OutputFormat { Jsonl, Csv };

OutputFormat parse_output_format(std::string_view text);
std::string_view to_string(OutputFormat format) noexcept;

inline constexpr u64 kDefaultChunkSize = 10000;

struct SearchConfig {
    PrimeRange range;
    FilterSet filters;
    CollisionConfig collision;
    u64 chunk_size = kDefaultChunkSize;  // primes per work unit
    unsigned workers = 1;
    OutputFormat output_format = OutputFormat::Jsonl;

    /// Record destination: a file, else `output_stream` if set, else none.
    std::optional<std::filesystem::path> output_path;
    std::ostream* output_stream = nullptr;

    std::optional<std::filesystem::path> checkpoint_path;
    bool resume = false;
    /// Stop (with a checkpoint) after this many chunks in this invocation.
    std::optional<u64> max_chunks;

    /// Throws std::invalid_argument describing the first violated rule.
    void validate() const;

    /// Stable hash over everything that affects results or output bytes.
    /// Worker count, paths and max_chunks are excluded.
    std::string digest() const;
};

struct SearchCounters {
    u64 primes_seen = 0;
    u64 rs_passed = 0;
    u64 t_passed = 0;
    u64 eliminated = 0;
    u64 candidates = 0;
    u64 capped = 0;

    friend bool operator==(const SearchCounters&, const SearchCounters&) = default;
};

struct RejectionCounts {
    u64 mod8 = 0;
    u64 legendre_5 = 0;
    u64 legendre_m23 = 0;
    u64 t = 0;
    u64 qf = 0;
    u64 lfc = 0;

    u64 total() const noexcept { return mod8 + legendre_5 + legendre_m23 + t + qf + lfc; }
    friend bool operator==(const RejectionCounts&, const RejectionCounts&) = default;
};

struct IterationStats {
    u64 scanned = 0;
    u64 total = 0;
    u64 max = 0;
    double ratio_sum = 0;  // sum of iterations / sqrt(p pi / 2)

    double mean() const noexcept { return scanned ? static_cast<double>(total) / static_cast<double>(scanned) : 0; }
    double mean_ratio() const noexcept { return scanned ? ratio_sum / static_cast<double>(scanned) : 0; }
    friend bool operator==(const IterationStats&, const IterationStats&) = default;
};

/// One prime that reached the duplicate scan. status is one of
/// "eliminated", "socialist" (oracle-confirmed), "unresolved-candidate",
/// "iteration-cap".
struct PrimeRecord {
    u64 p = 0;
    std::string status;
    u64 iterations = 0;
    std::optional<Witness> witness;

    friend bool operator==(const PrimeRecord&, const PrimeRecord&) = default;
};

struct ChunkRange {
    u64 lo = 0;
    u64 hi = 0;
    friend bool operator==(const ChunkRange&, const ChunkRange&) = default;
};

struct SearchCheckpoint {
    std::string config_digest;
    std::vector<ChunkRange> completed_chunks;
    SearchCounters counters;
    RejectionCounts rejected;
    IterationStats iterations;
    std::vector<PrimeRecord> survivors;
    u64 output_bytes = 0;

    friend bool operator==(const SearchCheckpoint&, const SearchCheckpoint&) = default;
};

struct SearchReport {
    ChunkRange range;
    std::string filters;
    SearchCounters counters;
    RejectionCounts rejected;
    IterationStats iterations;
    std::vector<PrimeRecord> survivors;
    u64 chunks_completed = 0;
    bool complete = false;
    double elapsed_seconds = 0;  // not serialized into the record stream
};

/// Runs the pipeline. Throws std::invalid_argument for a bad config,
/// CheckpointError / IoError for persistence problems.
SearchReport run_search(const SearchConfig& config);

/// Atomic write: temporary file in the same directory, then rename.
void checkpoint_save(const SearchCheckpoint& state, const std::filesystem::path& path);

/// Loads a checkpoint and verifies it belongs to `config`.
SearchCheckpoint checkpoint_resume(const SearchConfig& config, const std::filesystem::path& path);

}  // namespace socialist
