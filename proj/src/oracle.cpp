#include "socialist/oracle.hpp"

#include <stdexcept>
#include <string>

#include "socialist/errors.hpp"

namespace socialist {

namespace {

void require_oracle_prime(u64 p, const char* what) {
    if (p < 5 || p >= kOracleLimit || !is_prime(p))
        throw std::invalid_argument(std::string(what) + ": expected a prime in [5, 2^24), got " + std::to_string(p));
}

// k! mod p for k = 0..p-1; p < 2^24 so products fit in 64 bits.
std::vector<std::uint32_t> factorial_table(u64 p) {
    std::vector<std::uint32_t> fact(p);
    u64 f = 1;
    fact[0] = 1;
    for (u64 k = 1; k < p; ++k) {
        f = f * k % p;
        fact[k] = static_cast<std::uint32_t>(f);
    }
    return fact;
}

}  // namespace

SocialistVerdict brute_force_socialist(u64 p) {
    require_oracle_prime(p, "brute_force_socialist");
    SocialistVerdict verdict;
    verdict.p = p;

    std::vector<bool> seen(p, false);
    u64 f = 1;
    for (u64 k = 2; k < p; ++k) {
        f = f * k % p;
        if (seen[f]) {
            u64 g = 1;
            u64 i = 2;
            for (;; ++i) {
                g = g * i % p;
                if (g == f) break;
            }
            verdict.duplicate = DuplicatePair{i, k};
            return verdict;
        }
        seen[f] = true;
    }

    verdict.is_socialist = true;
    for (u64 r = 1; r < p; ++r) {
        if (!seen[r]) {
            verdict.missing_residue = r;
            break;
        }
    }
    u64 half = 1;
    for (u64 k = 2; k <= (p - 1) / 2; ++k) half = half * k % p;
    const u64 expected = (p - half) % p;
    verdict.res_r_consistent = verdict.missing_residue == expected;
    if (!*verdict.res_r_consistent)
        throw ContradictionError("p = " + std::to_string(p) + " has distinct factorials but missing residue " +
                                 std::to_string(verdict.missing_residue.value_or(0)) + " != -((p-1)/2)! = " +
                                 std::to_string(expected));
    return verdict;
}

QuadrupleDecomposition quadruple_decomposition(u64 p) {
    require_oracle_prime(p, "quadruple_decomposition");
    if ((p & 7) != 5)
        throw std::invalid_argument("quadruple_decomposition: expected p = 5 (mod 8), got " + std::to_string(p));

    QuadrupleDecomposition out;
    out.p = p;
    const auto fact = factorial_table(p);
    const u64 mid = (p - 1) / 2;
    auto in_h = [&](u64 x) { return x >= 2 && x + 3 <= p && x != mid; };

    // value -> smallest k >= 1 with k! = value
    std::vector<std::uint32_t> index_of(p, 0);
    for (u64 k = p - 1; k >= 1; --k) index_of[fact[k]] = static_cast<std::uint32_t>(k);
    auto partner = [&](u64 k) -> u64 { return index_of[(p - fact[k]) % p]; };

    std::vector<bool> used(p, false);
    for (u64 k = 2; k + 3 <= p; ++k) {
        if (!in_h(k) || used[k]) continue;
        const u64 j = partner(k);
        const u64 k_mirror = p - 1 - k;
        const u64 j_mirror = in_h(j) ? p - 1 - j : 0;
        const bool valid = in_h(j) && !used[j] && partner(j) == k && (j & 1) == (k & 1) && j != k_mirror &&
                           partner(k_mirror) == j_mirror && !used[k_mirror] && !used[j_mirror];
        if (!valid) {
            out.defect = k;
            return out;
        }
        Quadruple quad{k, j, k_mirror, j_mirror};

        u64 product = 1, sum = 0;
        int symbol = jacobi_unsigned(fact[k], p);
        for (u64 x : quad) {
            product = product * fact[x] % p;
            sum = (sum + fact[x]) % p;
            if (jacobi_unsigned(fact[x], p) != symbol)
                throw ContradictionError("quadruple members' factorials differ in quadratic character at p = " +
                                         std::to_string(p));
            used[x] = true;
        }
        if (product != 1 || sum != 0) {
            out.defect = k;
            return out;
        }
        out.quadruples.push_back(quad);
    }
    if (out.quadruples.size() != (p - 5) / 4)
        throw ContradictionError("quadruples do not partition H at p = " + std::to_string(p));
    return out;
}

bool wilson_identity_check(u64 p, u64 k) {
    if (!is_prime(p) || p >= kModulusLimit)
        throw std::invalid_argument("wilson_identity_check: expected a prime below 2^62, got " + std::to_string(p));
    if (k < 1 || k > p)
        throw std::invalid_argument("wilson_identity_check: k must lie in [1, p], got " + std::to_string(k));
    u64 upper = 1, lower = 1;
    for (u64 i = 2; i <= p - k; ++i) upper = mul_mod(upper, i, p);
    for (u64 i = 2; i <= k - 1; ++i) lower = mul_mod(lower, i, p);
    const u64 expected = (k % 2 == 0) ? 1 % p : p - 1;
    return mul_mod(upper, lower, p) == expected;
}

}  // namespace socialist
