#pragma once

// Segmented sieve of Eratosthenes over [lo, hi) with an odd-only bitmap.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "socialist/modmath.hpp"

namespace socialist {

/// Integers per segment when none is requested: 2^21 integers is a 128 KiB
/// odd-only bitmap.
inline constexpr u64 kDefaultSegmentSize = u64{1} << 21;
inline constexpr u64 kMinSegmentSize = u64{1} << 10;

struct PrimeRange {
    u64 lo = 2;   // inclusive
    u64 hi = 2;   // exclusive
    u64 segment_size = kDefaultSegmentSize;

    /// Throws std::invalid_argument unless lo <= hi <= 2^62 and
    /// segment_size >= 2^10. An empty range (lo == hi) is accepted.
    void validate() const;
};

/// Primes up to and including `limit` by plain sieve. Used for the base
/// primes of the segmented sieve and as a test reference.
std::vector<std::uint32_t> small_primes(std::uint32_t limit);

/// Single-consumer stream of the primes in a range, in increasing order.
class PrimeStream {
public:
    explicit PrimeStream(const PrimeRange& range);

    std::optional<u64> next();

    /// Resets the stream to start at `lo` (which must be within the
    /// original range); base primes are kept.
    void seek(u64 lo);

private:
    void fill_segment();

    PrimeRange range_;
    std::shared_ptr<const std::vector<std::uint32_t>> base_;
    std::vector<std::uint64_t> bits_;  // bit i set => seg_lo_ + 2i composite
    u64 seg_lo_ = 0;                   // odd start of current segment
    u64 seg_hi_ = 0;
    u64 cursor_ = 0;                   // bit index into bits_
    u64 cursor_end_ = 0;
    u64 next_lo_ = 0;
    bool emit_two_ = false;
};

/// Stream filtered to p = 5 (mod 8).
class PrimeStream5Mod8 {
public:
    explicit PrimeStream5Mod8(const PrimeRange& range) : inner_(range) {}
    std::optional<u64> next() {
        while (auto p = inner_.next())
            if ((*p & 7) == 5) return p;
        return std::nullopt;
    }

private:
    PrimeStream inner_;
};

std::vector<u64> primes_in_range(const PrimeRange& range);
std::vector<u64> primes_5_mod_8(const PrimeRange& range);

}  // namespace socialist
