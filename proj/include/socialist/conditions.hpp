#pragma once

// Cheap necessary conditions on a socialist prime p:
//   * p = 5 (mod 8), (5/p) = -1, (-23/p) = +1           (Rokowska-Schinzel)
//   * (1957/p) = +1, or (1957/p) = -1 with (4y+25/p) = -1 for every root y
//     of y(y+4)(y+6) - 1 = 0 (mod p)                      (Trudgian)
//   * (((p-1)/4)! / p) = +1                                (quarter factorial)

#include <cstdint>
#include <vector>

#include "socialist/modmath.hpp"

namespace socialist {

namespace constants {
inline constexpr std::int64_t kRsSymbol5 = 5;
inline constexpr std::int64_t kRsSymbolMinus23 = -23;
/// Discriminant of the cubic below; its quadratic character mod p decides
/// whether the cubic has one root or zero/three.
inline constexpr std::int64_t kCubicDiscriminant = 1957;
/// y(y+4)(y+6) - 1 = y^3 + 10y^2 + 24y - 1, coefficients low to high.
inline constexpr std::int64_t kCubicCoefficients[4] = {-1, 24, 10, 1};
/// Roots y are tested through the symbol ((4y + 25) / p).
inline constexpr std::uint64_t kRootSymbolScale = 4;
inline constexpr std::uint64_t kRootSymbolShift = 25;
/// Below this bound cubic_roots scans every residue.
inline constexpr std::uint64_t kCubicScanLimit = std::uint64_t{1} << 16;
}  // namespace constants

struct CubicRoots {
    u64 p = 0;
    std::vector<u64> roots;         // ascending, distinct
    bool multiplicity_note = false; // p divides 1957
};

struct ConditionReport {
    u64 p = 0;
    bool passes_mod8 = false;
    int legendre_5 = 0;
    int legendre_m23 = 0;
    int legendre_1957 = 0;
    std::vector<u64> cubic_roots;
    std::vector<int> legendre_4y25;
    bool rs_pass = false;
    bool t_pass = false;
};

/// Populates passes_mod8, legendre_5, legendre_m23 and rs_pass.
/// Throws std::invalid_argument unless p is a prime > 5.
ConditionReport rs_filter(u64 p);

/// Populates legendre_1957, cubic_roots, legendre_4y25 and t_pass. Roots are
/// only extracted when (1957/p) != +1. Throws unless p is a prime > 5.
ConditionReport t_filter(u64 p);

/// Both filters, with the cubic roots always listed.
ConditionReport evaluate_conditions(u64 p);

/// All distinct roots of y^3 + 10y^2 + 24y - 1 over F_p. Requires a prime
/// p > 3.
CubicRoots cubic_roots(u64 p);

/// True iff (((p-1)/4)! / p) = +1. O(p). Requires a prime p = 5 (mod 8);
/// false proves p is not socialist.
bool quarter_factorial_filter(u64 p);

namespace detail {
/// Root extraction via gcd(y^p - y, f) and equal-degree splitting, without
/// the direct-scan shortcut. Exposed for oracle comparison.
std::vector<u64> cubic_roots_by_gcd(u64 p);
std::vector<u64> cubic_roots_by_scan(u64 p);

/// Unchecked pipeline variants; p must be a prime > 5.
bool rs_pass(u64 p) noexcept;
bool t_pass(u64 p);
bool quarter_factorial_pass(u64 p) noexcept;
}  // namespace detail

}  // namespace socialist
