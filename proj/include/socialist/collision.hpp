#pragma once

// Birthday-style duplicate search over k! mod p.
//
// Residues are streamed into a power-of-two table with no collision
// resolution: a slot holding a different residue is simply overwritten.
// Overwrites can hide a duplicate (costing iterations) but never fabricate
// one, because slots store enough of the key to test exact equality.

#include <cstdint>
#include <optional>
#include <vector>

#include "socialist/modmath.hpp"

namespace socialist {

inline constexpr unsigned kMinTableBits = 10;
inline constexpr unsigned kMaxTableBits = 28;
inline constexpr unsigned kDefaultTableBits = 19;

struct CollisionConfig {
    unsigned table_bits = kDefaultTableBits;
    bool witness_mode = false;
    std::optional<u64> max_iterations;

    void validate() const;
};

enum class CollisionStatus { Eliminated, Candidate, IterationCapReached };

const char* to_string(CollisionStatus status) noexcept;

struct Witness {
    u64 i = 0;
    u64 j = 0;
    u64 value = 0;  // i! = j! = value (mod p)

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CollisionOutcome {
    u64 p = 0;
    CollisionStatus status = CollisionStatus::Candidate;
    u64 iterations = 0;  // number of k processed, k = 2, 3, ...
    std::optional<Witness> witness;
};

/// Owns one table and reuses it across primes; tables are invalidated by a
/// generation tag rather than cleared. Not thread-safe; use one per worker.
class CollisionScanner {
public:
    explicit CollisionScanner(const CollisionConfig& config);

    const CollisionConfig& config() const noexcept { return config_; }

    /// Requires an odd prime p >= 5 below 2^62 (unchecked).
    CollisionOutcome scan(u64 p);

private:
    template <bool Witnessed>
    CollisionOutcome scan_impl(u64 p);

    u64 next_generation();

    CollisionConfig config_;
    unsigned key_bits_;         // 64 - table_bits
    u64 generation_ = 0;
    std::vector<u64> keys_;     // generation << key_bits_ | low bits of mixed residue
    std::vector<u64> indices_;  // witness mode only
};

/// Validating one-shot wrapper. Throws std::invalid_argument for p < 5,
/// composite p or an invalid config.
CollisionOutcome find_duplicate(u64 p, const CollisionConfig& config = {});

/// Expected number of draws before the first repeat among p values.
double expected_iterations(u64 p);

}  // namespace socialist
