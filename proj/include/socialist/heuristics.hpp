#pragma once

// Log-space evaluation of the random-residue model: the chance that p is
// socialist if 2!, ..., (p-1)! were independent uniform nonzero residues
// (excluding k! = (k+1)!), its closed-form upper bound, and sums over
// ranges. Everything is carried as a natural log because W_p underflows a
// double for p beyond a few hundred.

#include <cstdint>
#include <string_view>

namespace socialist {

enum class EstimateKind { ExactWp, WpBound, IntervalSum, TailBound };

std::string_view to_string(EstimateKind kind) noexcept;

struct HeuristicEstimate {
    EstimateKind kind = EstimateKind::ExactWp;
    double argument = 0;        // p, or a
    double argument_hi = 0;     // b, IntervalSum only
    double ln_value = 0;
    double log10_value = 0;
};

/// Below this n, ln(n!) is an explicit sum of logs; above, lgamma.
inline constexpr std::uint64_t kLogFactorialSwitch = 10000;
/// Largest b accepted by interval_sum_wp.
inline constexpr std::uint64_t kIntervalLimit = 1000000;

/// ln(n!).
double ln_factorial(std::uint64_t n);

/// ln W_p = ln((p-2)!) - (p-3) ln(p-2). Requires p >= 5.
HeuristicEstimate ln_wp(std::uint64_t p);

/// ln of (p-2)^{3/2} e^{3-p}. Requires p >= 5.
HeuristicEstimate wp_upper_bound(std::uint64_t p);

/// ln of the sum of W_p over primes p in [a, b), 5 <= a < b <= 10^6.
/// An interval without primes gives ln_value = -infinity.
HeuristicEstimate interval_sum_wp(std::uint64_t a, std::uint64_t b);

/// ln of e^3 a^{3/2-a} sqrt(ln a). Requires a >= 5.
HeuristicEstimate tail_bound(double a);

}  // namespace socialist
