#include "socialist/collision.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace socialist {

namespace {

// Odd, so multiplication by it permutes 64-bit words: the slot index (top
// bits) plus the stored low bits recover the residue exactly.
constexpr u64 kMix = 0x9E3779B97F4A7C15ull;

}  // namespace

void CollisionConfig::validate() const {
    if (table_bits < kMinTableBits || table_bits > kMaxTableBits)
        throw std::invalid_argument("table bits must lie in [10, 28], got " + std::to_string(table_bits));
    if (max_iterations && *max_iterations == 0)
        throw std::invalid_argument("iteration cap must be positive");
}

const char* to_string(CollisionStatus status) noexcept {
    switch (status) {
        case CollisionStatus::Eliminated: return "eliminated";
        case CollisionStatus::Candidate: return "candidate";
        case CollisionStatus::IterationCapReached: return "iteration-cap";
    }
    return "unknown";
}

CollisionScanner::CollisionScanner(const CollisionConfig& config)
    : config_(config), key_bits_(64 - config.table_bits) {
    config_.validate();
    keys_.assign(std::size_t{1} << config_.table_bits, 0);
    if (config_.witness_mode) indices_.assign(keys_.size(), 0);
}

u64 CollisionScanner::next_generation() {
    if (++generation_ >= (u64{1} << config_.table_bits)) {
        std::fill(keys_.begin(), keys_.end(), 0);
        generation_ = 1;
    }
    return generation_;
}

CollisionOutcome CollisionScanner::scan(u64 p) {
    return config_.witness_mode ? scan_impl<true>(p) : scan_impl<false>(p);
}

template <bool Witnessed>
CollisionOutcome CollisionScanner::scan_impl(u64 p) {
    const Montgomery mont(p);
    const u64 one = mont.one();
    const u64 minus_one = p - one;
    const u64 tag = next_generation() << key_bits_;
    const u64 low_mask = (u64{1} << key_bits_) - 1;
    const u64 cap = config_.max_iterations.value_or(~u64{0});

    CollisionOutcome out;
    out.p = p;

    u64 factorial = one;  // 1!
    u64 index = one;      // k in Montgomery form
    u64* const keys = keys_.data();
    for (u64 k = 2; k < p; ++k) {
        if (k - 2 == cap) {
            out.status = CollisionStatus::IterationCapReached;
            out.iterations = cap;
            return out;
        }
        index = mont.add(index, one);
        factorial = mont.mul(factorial, index);

        // (p-2)! = 1 and (p-1)! = -1 (Wilson), so hitting either value
        // earlier is already a duplicate.
        if ((factorial == one && k < p - 2) || (factorial == minus_one && k < p - 1)) {
            out.status = CollisionStatus::Eliminated;
            out.iterations = k - 1;
            if constexpr (Witnessed) {
                if (factorial == one)
                    out.witness = Witness{k, p - 2, 1};
                else
                    out.witness = Witness{k, p - 1, p - 1};
            }
            return out;
        }

        const u64 mixed = factorial * kMix;
        const u64 slot = mixed >> key_bits_;
        const u64 key = tag | (mixed & low_mask);
        if (keys[slot] == key) {
            out.status = CollisionStatus::Eliminated;
            out.iterations = k - 1;
            if constexpr (Witnessed) out.witness = Witness{indices_[slot], k, mont.from(factorial)};
            return out;
        }
        keys[slot] = key;
        if constexpr (Witnessed) indices_[slot] = k;
    }
    out.status = CollisionStatus::Candidate;
    out.iterations = p - 2;
    return out;
}

CollisionOutcome find_duplicate(u64 p, const CollisionConfig& config) {
    if (p < 5 || !is_prime(p) || p >= kModulusLimit)
        throw std::invalid_argument("find_duplicate: expected a prime >= 5 below 2^62, got " + std::to_string(p));
    CollisionScanner scanner(config);
    return scanner.scan(p);
}

double expected_iterations(u64 p) {
    if (p < 2) throw std::invalid_argument("expected_iterations: p must be >= 2");
    return std::sqrt(static_cast<double>(p) * std::numbers::pi / 2.0);
}

}  // namespace socialist
