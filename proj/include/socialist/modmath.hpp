#pragma once

// Exact modular arithmetic on 64-bit words.
//
// Every routine here is a pure function. Products go through a 128-bit
// intermediate, so mul_mod/pow_mod are exact for any modulus below 2^64;
// the pipeline itself caps moduli at 2^62 (see Modulus).

#include <cstdint>
#include <optional>

namespace socialist {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Largest modulus accepted by range-facing entry points (exclusive).
inline constexpr u64 kModulusLimit = u64{1} << 62;

/// A validated modulus, 2 <= m < 2^62.
class Modulus {
public:
    explicit Modulus(u64 m);
    constexpr u64 value() const noexcept { return m_; }

private:
    u64 m_;
};

constexpr u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

constexpr u64 add_mod(u64 a, u64 b, u64 m) noexcept {
    // a, b < m < 2^63 so a + b cannot wrap.
    u64 s = a + b;
    return s >= m ? s - m : s;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 m) noexcept {
    return a >= b ? a - b : a + (m - b);
}

constexpr u64 pow_mod(u64 base, u64 exp, u64 m) noexcept {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Jacobi symbol (a/n) for odd n >= 3. Negative numerators are allowed.
/// Throws std::invalid_argument for even n or n < 3.
int jacobi(std::int64_t a, u64 n);

/// Jacobi symbol for an already reduced, non-negative numerator.
int jacobi_unsigned(u64 a, u64 n) noexcept;

/// Deterministic Miller-Rabin, correct for every 64-bit input.
bool is_prime(u64 n) noexcept;

/// Some x with x^2 = a (mod p), the smaller of the two roots, or nullopt
/// if a is a non-residue. p must be prime and a < p.
std::optional<u64> sqrt_mod(u64 a, u64 p);

/// Montgomery multiplication for odd moduli below 2^62. Values in
/// Montgomery form are kept fully reduced, so two residues are equal iff
/// their Montgomery representations are equal.
class Montgomery {
public:
    explicit Montgomery(u64 m) noexcept;

    u64 modulus() const noexcept { return m_; }
    u64 to(u64 x) const noexcept { return mul(x % m_, r2_); }
    u64 from(u64 x) const noexcept { return reduce(x); }
    u64 one() const noexcept { return one_; }

    u64 mul(u64 a, u64 b) const noexcept {
        return reduce(static_cast<u128>(a) * b);
    }

    u64 add(u64 a, u64 b) const noexcept { return add_mod(a, b, m_); }

private:
    u64 reduce(u128 t) const noexcept {
        u64 q = static_cast<u64>(t) * neg_inv_;
        u64 u = static_cast<u64>((t + static_cast<u128>(q) * m_) >> 64);
        return u >= m_ ? u - m_ : u;
    }

    u64 m_;
    u64 neg_inv_;  // -m^{-1} mod 2^64
    u64 r2_;       // 2^128 mod m
    u64 one_;      // 2^64 mod m
};

}  // namespace socialist
