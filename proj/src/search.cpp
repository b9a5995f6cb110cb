#include "socialist/search.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "socialist/conditions.hpp"
#include "socialist/errors.hpp"
#include "socialist/leftfact.hpp"
#include "socialist/oracle.hpp"
#include "socialist/serialize.hpp"

namespace socialist {

FilterSet FilterSet::parse(std::string_view text) {
    FilterSet set;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view name = text.substr(pos, comma - pos);
        if (name == "rs")
            set.rs = true;
        else if (name == "t")
            set.t = true;
        else if (name == "qf")
            set.qf = true;
        else if (name == "lfc")
            set.lfc = true;
        else
            throw std::invalid_argument("unknown filter \"" + std::string(name) + "\" (expected rs, t, qf, lfc)");
        pos = comma + 1;
    }
    return set;
}

std::string FilterSet::to_string() const {
    std::string out = "rs";
    if (t) out += ",t";
    if (qf) out += ",qf";
    if (lfc) out += ",lfc";
    return out;
}

OutputFormat parse_output_format(std::string_view text) {
    if (text == "jsonl") return OutputFormat::Jsonl;
    if (text == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format \"" + std::string(text) + "\" (expected jsonl or csv)");
}

std::string_view to_string(OutputFormat format) noexcept {
    return format == OutputFormat::Csv ? "csv" : "jsonl";
}

void SearchConfig::validate() const {
    range.validate();
    if (range.lo <= 5) throw std::invalid_argument("search range must start above 5");
    if (range.lo >= range.hi) throw std::invalid_argument("search range is empty");
    if (!filters.rs) throw std::invalid_argument("the rs filter cannot be disabled");
    if ((filters.qf || filters.lfc) && range.hi > kOracleLimit)
        throw std::invalid_argument("qf and lfc filters are O(p) and limited to ranges below 2^24");
    collision.validate();
    if (chunk_size == 0) throw std::invalid_argument("chunk size must be positive");
    if (workers == 0) throw std::invalid_argument("worker count must be positive");
    if (resume && !checkpoint_path) throw std::invalid_argument("resume requires a checkpoint path");
    if (max_chunks && *max_chunks == 0) throw std::invalid_argument("max chunks must be positive");
}

std::string SearchConfig::digest() const {
    std::ostringstream canon;
    canon << "lo=" << range.lo << ";hi=" << range.hi << ";segment=" << range.segment_size
          << ";filters=" << filters.to_string() << ";table_bits=" << collision.table_bits
          << ";witness=" << collision.witness_mode << ";cap=" << collision.max_iterations.value_or(0)
          << ";chunk=" << chunk_size << ";format=" << socialist::to_string(output_format);
    // FNV-1a, 64 bit
    u64 h = 0xcbf29ce484222325ull;
    for (unsigned char c : canon.str()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    return hex.str();
}

namespace {

struct ChunkTask {
    u64 index = 0;
    ChunkRange range;
    std::vector<u64> primes;
};

struct ChunkResult {
    u64 index = 0;
    ChunkRange range;
    u64 seen = 0;
    u64 rs_passed = 0;
    u64 t_passed = 0;
    RejectionCounts rejected;
    std::vector<PrimeRecord> records;
};

u64 factorial_mod(u64 n, u64 p) {
    u64 f = 1;
    for (u64 k = 2; k <= n; ++k) f = mul_mod(f, k, p);
    return f;
}

// Candidates and capped scans are settled by the oracle when it can reach them.
PrimeRecord settle(u64 p, const CollisionOutcome& outcome) {
    PrimeRecord rec{p, "", outcome.iterations, outcome.witness};
    if (outcome.status == CollisionStatus::Eliminated) {
        rec.status = "eliminated";
        return rec;
    }
    if (p < kOracleLimit) {
        SocialistVerdict verdict = brute_force_socialist(p);
        if (verdict.duplicate) {
            rec.status = "eliminated";
            rec.witness = Witness{verdict.duplicate->i, verdict.duplicate->j, factorial_mod(verdict.duplicate->i, p)};
        } else {
            rec.status = "socialist";
        }
        return rec;
    }
    rec.status = outcome.status == CollisionStatus::Candidate ? "unresolved-candidate" : "iteration-cap";
    return rec;
}

ChunkResult process_chunk(const ChunkTask& task, const FilterSet& filters, CollisionScanner& scanner) {
    ChunkResult out;
    out.index = task.index;
    out.range = task.range;
    for (u64 p : task.primes) {
        ++out.seen;
        if ((p & 7) != 5) {
            ++out.rejected.mod8;
            continue;
        }
        if (jacobi_unsigned(5, p) != -1) {
            ++out.rejected.legendre_5;
            continue;
        }
        if (jacobi_unsigned(p - 23 % p, p) != 1) {
            ++out.rejected.legendre_m23;
            continue;
        }
        ++out.rs_passed;
        if (filters.t) {
            if (!detail::t_pass(p)) {
                ++out.rejected.t;
                continue;
            }
            ++out.t_passed;
        }
        if (filters.qf && !detail::quarter_factorial_pass(p)) {
            ++out.rejected.qf;
            continue;
        }
        if (filters.lfc && !lfck_holds(p, 1, detail::left_factorial_unchecked(p))) {
            ++out.rejected.lfc;
            continue;
        }
        out.records.push_back(settle(p, scanner.scan(p)));
    }
    return out;
}

// Hands out consecutive chunks of the prime stream.
class ChunkSource {
public:
    ChunkSource(const PrimeRange& range, u64 start, u64 first_index, u64 chunk_size, std::optional<u64> limit)
        : stream_(PrimeRange{start, range.hi, range.segment_size}),
          hi_(range.hi),
          next_lo_(start),
          next_index_(first_index),
          chunk_size_(chunk_size),
          remaining_(limit) {}

    bool exhausted() const noexcept { return exhausted_; }

    std::optional<ChunkTask> next() {
        if (exhausted_ || (remaining_ && *remaining_ == 0)) return std::nullopt;
        ChunkTask task;
        task.index = next_index_;
        task.range.lo = next_lo_;
        while (task.primes.size() < chunk_size_) {
            auto p = stream_.next();
            if (!p) {
                exhausted_ = true;
                break;
            }
            task.primes.push_back(*p);
        }
        if (task.primes.empty()) return std::nullopt;
        task.range.hi = exhausted_ ? hi_ : task.primes.back() + 1;
        next_lo_ = task.range.hi;
        ++next_index_;
        if (remaining_) --*remaining_;
        return task;
    }

private:
    PrimeStream stream_;
    u64 hi_;
    u64 next_lo_;
    u64 next_index_;
    u64 chunk_size_;
    std::optional<u64> remaining_;
    bool exhausted_ = false;
};

// Record sink that tracks how many bytes it has produced.
class RecordSink {
public:
    RecordSink(const SearchConfig& config, u64 resume_bytes, bool resuming) : format_(config.output_format) {
        if (config.output_path) {
            const auto& path = *config.output_path;
            if (resuming) {
                std::error_code ec;
                auto size = std::filesystem::file_size(path, ec);
                if (ec || size < resume_bytes)
                    throw CheckpointError(CheckpointError::Kind::Corrupt,
                                          "output file " + path.string() + " is shorter than the checkpoint records");
                std::filesystem::resize_file(path, resume_bytes, ec);
                if (ec) throw IoError("cannot truncate " + path.string() + ": " + ec.message());
                file_.open(path, std::ios::binary | std::ios::app);
            } else {
                file_.open(path, std::ios::binary | std::ios::trunc);
            }
            if (!file_) throw IoError("cannot open " + path.string() + " for writing");
            out_ = &file_;
        } else {
            out_ = config.output_stream;
        }
        bytes_ = resuming ? resume_bytes : 0;
        if (!resuming && format_ == OutputFormat::Csv) write("p,status,iterations,witness_i,witness_j,witness_value\n");
    }

    void record(const PrimeRecord& rec) {
        if (!out_) return;
        if (format_ == OutputFormat::Jsonl) {
            write(dump_line(to_json(rec)) + "\n");
            return;
        }
        std::string line = std::to_string(rec.p) + "," + rec.status + "," + std::to_string(rec.iterations) + ",";
        if (rec.witness)
            line += std::to_string(rec.witness->i) + "," + std::to_string(rec.witness->j) + "," +
                    std::to_string(rec.witness->value);
        else
            line += ",,";
        write(line + "\n");
    }

    // Summary lines are not counted: a resumed run overwrites them.
    void summary(const SearchReport& report) {
        if (!out_ || format_ != OutputFormat::Jsonl) return;
        *out_ << dump_line(to_json(report)) << '\n';
        flush();
    }

    void flush() {
        if (!out_) return;
        out_->flush();
        if (!*out_) throw IoError("writing search records failed");
    }

    u64 bytes() const noexcept { return bytes_; }

private:
    void write(const std::string& s) {
        if (!out_) return;
        *out_ << s;
        bytes_ += s.size();
    }

    OutputFormat format_;
    std::ofstream file_;
    std::ostream* out_ = nullptr;
    u64 bytes_ = 0;
};

void merge(SearchCheckpoint& state, const ChunkResult& chunk, RecordSink& sink) {
    state.completed_chunks.push_back(chunk.range);
    state.counters.primes_seen += chunk.seen;
    state.counters.rs_passed += chunk.rs_passed;
    state.counters.t_passed += chunk.t_passed;
    state.rejected.mod8 += chunk.rejected.mod8;
    state.rejected.legendre_5 += chunk.rejected.legendre_5;
    state.rejected.legendre_m23 += chunk.rejected.legendre_m23;
    state.rejected.t += chunk.rejected.t;
    state.rejected.qf += chunk.rejected.qf;
    state.rejected.lfc += chunk.rejected.lfc;
    for (const auto& rec : chunk.records) {
        state.iterations.scanned += 1;
        state.iterations.total += rec.iterations;
        state.iterations.max = std::max(state.iterations.max, rec.iterations);
        state.iterations.ratio_sum += static_cast<double>(rec.iterations) / expected_iterations(rec.p);
        if (rec.status == "eliminated") {
            ++state.counters.eliminated;
        } else {
            if (rec.status == "iteration-cap")
                ++state.counters.capped;
            else
                ++state.counters.candidates;
            state.survivors.push_back(rec);
        }
        sink.record(rec);
    }
    state.output_bytes = sink.bytes();
}

}  // namespace

void checkpoint_save(const SearchCheckpoint& state, const std::filesystem::path& path) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << to_json(state).dump(1) << '\n';
        out.flush();
        if (!out) throw IoError("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot move checkpoint into place: " + ec.message());
}

SearchCheckpoint checkpoint_resume(const SearchConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint " + path.string());
    Json json;
    try {
        json = Json::parse(in);
    } catch (const std::exception& e) {
        throw CheckpointError(CheckpointError::Kind::Corrupt, "checkpoint " + path.string() + " is not valid JSON");
    }
    SearchCheckpoint state = checkpoint_from_json(json);
    const std::string expected = config.digest();
    if (state.config_digest != expected)
        throw CheckpointError(CheckpointError::Kind::DigestMismatch,
                              "checkpoint " + path.string() + " was written for configuration " +
                                  state.config_digest + ", current configuration is " + expected);
    u64 prev_hi = config.range.lo;
    for (const auto& ch : state.completed_chunks) {
        if (ch.lo != prev_hi || ch.hi <= ch.lo || ch.hi > config.range.hi)
            throw CheckpointError(CheckpointError::Kind::Corrupt, "checkpoint chunk list is not contiguous");
        prev_hi = ch.hi;
    }
    return state;
}

SearchReport run_search(const SearchConfig& config) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();

    SearchCheckpoint state;
    state.config_digest = config.digest();
    bool resuming = false;
    if (config.resume && config.checkpoint_path && std::filesystem::exists(*config.checkpoint_path)) {
        state = checkpoint_resume(config, *config.checkpoint_path);
        resuming = true;
    }

    RecordSink sink(config, state.output_bytes, resuming);
    const u64 start = state.completed_chunks.empty() ? config.range.lo : state.completed_chunks.back().hi;
    ChunkSource source(config.range, start, state.completed_chunks.size(), config.chunk_size, config.max_chunks);

    std::mutex mutex;
    std::condition_variable cv;
    std::map<u64, ChunkResult> ready;
    std::exception_ptr failure;
    bool source_done = false;
    unsigned running = config.workers;
    u64 issued = 0, merged = 0;
    const u64 window = 4 * static_cast<u64>(config.workers);

    auto worker = [&] {
        try {
            CollisionScanner scanner(config.collision);
            for (;;) {
                std::optional<ChunkTask> task;
                {
                    std::unique_lock lock(mutex);
                    cv.wait(lock, [&] { return failure || source_done || issued - merged < window; });
                    if (failure || source_done) break;
                    task = source.next();
                    if (!task) {
                        source_done = true;
                        cv.notify_all();
                        break;
                    }
                    ++issued;
                }
                ChunkResult result = process_chunk(*task, config.filters, scanner);
                std::lock_guard lock(mutex);
                ready.emplace(result.index, std::move(result));
                cv.notify_all();
            }
        } catch (...) {
            std::lock_guard lock(mutex);
            if (!failure) failure = std::current_exception();
        }
        std::lock_guard lock(mutex);
        --running;
        cv.notify_all();
    };

    std::vector<std::thread> pool;
    pool.reserve(config.workers);
    for (unsigned i = 0; i < config.workers; ++i) pool.emplace_back(worker);

    try {
        u64 next_index = state.completed_chunks.size();
        for (;;) {
            ChunkResult chunk;
            {
                std::unique_lock lock(mutex);
                cv.wait(lock, [&] { return failure || ready.count(next_index) || running == 0; });
                if (failure) break;
                auto it = ready.find(next_index);
                if (it == ready.end()) break;  // all workers finished and nothing left
                chunk = std::move(it->second);
                ready.erase(it);
            }
            merge(state, chunk, sink);
            sink.flush();
            if (config.checkpoint_path) checkpoint_save(state, *config.checkpoint_path);
            ++next_index;
            {
                std::lock_guard lock(mutex);
                ++merged;
            }
            cv.notify_all();
        }
    } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    SearchReport report;
    report.range = {config.range.lo, config.range.hi};
    report.filters = config.filters.to_string();
    report.counters = state.counters;
    report.rejected = state.rejected;
    report.iterations = state.iterations;
    report.survivors = state.survivors;
    report.chunks_completed = state.completed_chunks.size();
    report.complete = source.exhausted() ||
                      (!state.completed_chunks.empty() && state.completed_chunks.back().hi == config.range.hi);
    sink.summary(report);
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

}  // namespace socialist
