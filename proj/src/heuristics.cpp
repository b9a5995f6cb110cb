#include "socialist/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "socialist/primegen.hpp"

namespace socialist {

namespace {

HeuristicEstimate make(EstimateKind kind, double argument, double ln_value) {
    HeuristicEstimate e;
    e.kind = kind;
    e.argument = argument;
    e.ln_value = ln_value;
    e.log10_value = ln_value / std::numbers::ln10;
    return e;
}

void require_at_least_5(double x, const char* what) {
    if (!(x >= 5)) throw std::invalid_argument(std::string(what) + ": argument must be >= 5");
}

}  // namespace

std::string_view to_string(EstimateKind kind) noexcept {
    switch (kind) {
        case EstimateKind::ExactWp: return "exact_wp";
        case EstimateKind::WpBound: return "wp_bound";
        case EstimateKind::IntervalSum: return "interval_sum";
        case EstimateKind::TailBound: return "tail_bound";
    }
    return "unknown";
}

double ln_factorial(std::uint64_t n) {
    if (n < kLogFactorialSwitch) {
        double sum = 0;
        for (std::uint64_t k = 2; k <= n; ++k) sum += std::log(static_cast<double>(k));
        return sum;
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

HeuristicEstimate ln_wp(std::uint64_t p) {
    require_at_least_5(static_cast<double>(p), "ln_wp");
    const double n = static_cast<double>(p - 2);
    return make(EstimateKind::ExactWp, static_cast<double>(p),
                ln_factorial(p - 2) - static_cast<double>(p - 3) * std::log(n));
}

HeuristicEstimate wp_upper_bound(std::uint64_t p) {
    require_at_least_5(static_cast<double>(p), "wp_upper_bound");
    const double n = static_cast<double>(p - 2);
    return make(EstimateKind::WpBound, static_cast<double>(p), 1.5 * std::log(n) + (3.0 - static_cast<double>(p)));
}

HeuristicEstimate interval_sum_wp(std::uint64_t a, std::uint64_t b) {
    if (a < 5 || a >= b || b > kIntervalLimit)
        throw std::invalid_argument("interval_sum_wp: need 5 <= a < b <= 10^6");
    std::vector<double> terms;
    PrimeStream stream(PrimeRange{a, b});
    while (auto p = stream.next()) terms.push_back(ln_wp(*p).ln_value);

    double ln_sum = -std::numeric_limits<double>::infinity();
    if (!terms.empty()) {
        const double peak = *std::max_element(terms.begin(), terms.end());
        double acc = 0;
        for (double t : terms) acc += std::exp(t - peak);
        ln_sum = peak + std::log(acc);
    }
    auto e = make(EstimateKind::IntervalSum, static_cast<double>(a), ln_sum);
    e.argument_hi = static_cast<double>(b);
    return e;
}

HeuristicEstimate tail_bound(double a) {
    require_at_least_5(a, "tail_bound");
    const double ln_a = std::log(a);
    return make(EstimateKind::TailBound, a, 3.0 + (1.5 - a) * ln_a + 0.5 * std::log(ln_a));
}

}  // namespace socialist
