#pragma once

// Brute-force ground truth for small primes (p < 2^24): full distinctness
// of 2!, ..., (p-1)! mod p, the missing residue, and the quadruple
// structure that a socialist prime would impose.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "socialist/modmath.hpp"

namespace socialist {

inline constexpr u64 kOracleLimit = u64{1} << 24;

struct DuplicatePair {
    u64 i = 0;
    u64 j = 0;

    friend bool operator==(const DuplicatePair&, const DuplicatePair&) = default;
};

struct SocialistVerdict {
    u64 p = 0;
    bool is_socialist = false;
    std::optional<DuplicatePair> duplicate;  // first j with an earlier i, i! = j!
    std::optional<u64> missing_residue;
    std::optional<bool> res_r_consistent;    // r = -((p-1)/2)! (mod p)
};

using Quadruple = std::array<u64, 4>;  // {k, f(k), p-1-k, p-1-f(k)}

struct QuadrupleDecomposition {
    u64 p = 0;
    std::vector<Quadruple> quadruples;
    std::optional<u64> defect;  // first k in H without a valid partner
};

/// Requires a prime 5 <= p < 2^24. Throws ContradictionError if p turns out
/// socialist but its missing residue is not -((p-1)/2)!.
SocialistVerdict brute_force_socialist(u64 p);

/// Requires a prime p = 5 (mod 8) below 2^24.
QuadrupleDecomposition quadruple_decomposition(u64 p);

/// (p-k)! (k-1)! = (-1)^k (mod p) for 1 <= k <= p. O(p).
bool wilson_identity_check(u64 p, u64 k);

}  // namespace socialist
