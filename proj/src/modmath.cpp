#include "socialist/modmath.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace socialist {

Modulus::Modulus(u64 m) : m_(m) {
    if (m < 2 || m >= kModulusLimit)
        throw std::invalid_argument("modulus " + std::to_string(m) + " outside [2, 2^62)");
}

int jacobi_unsigned(u64 a, u64 n) noexcept {
    a %= n;
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u64 r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

int jacobi(std::int64_t a, u64 n) {
    if (n < 3 || (n & 1) == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and >= 3, got " + std::to_string(n));
    u64 reduced;
    if (a >= 0) {
        reduced = static_cast<u64>(a) % n;
    } else {
        // |a| without overflowing on INT64_MIN
        u64 magnitude = static_cast<u64>(-(a + 1)) + 1;
        u64 r = magnitude % n;
        reduced = r == 0 ? 0 : n - r;
    }
    return jacobi_unsigned(reduced, n);
}

namespace {

bool miller_rabin_round(u64 n, u64 d, int s, u64 base) noexcept {
    u64 x = pow_mod(base % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) noexcept {
    static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (u64 q : kBases) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    if (n < 41 * 41) return true;

    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 base : kBases)
        if (!miller_rabin_round(n, d, s, base)) return false;
    return true;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
    if (p == 2) return a & 1;
    a %= p;
    if (a == 0) return u64{0};
    if (jacobi_unsigned(a, p) != 1) return std::nullopt;

    u64 x;
    if ((p & 3) == 3) {
        x = pow_mod(a, (p + 1) / 4, p);
    } else if ((p & 7) == 5) {
        // Atkin: v = (2a)^((p-5)/8), i = 2a v^2, x = a v (i - 1)
        u64 two_a = add_mod(a, a, p);
        u64 v = pow_mod(two_a, (p - 5) / 8, p);
        u64 i = mul_mod(two_a, mul_mod(v, v, p), p);
        x = mul_mod(mul_mod(a, v, p), sub_mod(i, 1, p), p);
    } else {
        // Tonelli-Shanks
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (jacobi_unsigned(z, p) != -1) ++z;
        u64 c = pow_mod(z, q, p);
        u64 t = pow_mod(a, q, p);
        x = pow_mod(a, (q + 1) / 2, p);
        int m = s;
        while (t != 1) {
            int i = 0;
            u64 t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            x = mul_mod(x, b, p);
        }
    }
    u64 other = p - x;
    return x < other ? x : other;
}

Montgomery::Montgomery(u64 m) noexcept : m_(m) {
    u64 inv = m;  // correct to 3 bits for odd m
    for (int i = 0; i < 5; ++i) inv *= 2 - m * inv;
    neg_inv_ = ~inv + 1;
    one_ = (~m + 1) % m;
    r2_ = mul_mod(one_, one_, m);
}

}  // namespace socialist
