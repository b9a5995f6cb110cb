#include "socialist/conditions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace socialist {

namespace {

// Dense polynomial over F_p, coefficients low to high, no trailing zeros.
using Poly = std::vector<u64>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

u64 inverse(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 reduce_signed(std::int64_t c, u64 p) {
    if (c >= 0) return static_cast<u64>(c) % p;
    u64 r = static_cast<u64>(-c) % p;
    return r == 0 ? 0 : p - r;
}

Poly cubic(u64 p) {
    Poly f;
    for (std::int64_t c : constants::kCubicCoefficients) f.push_back(reduce_signed(c, p));
    trim(f);
    return f;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, u64 p) {
    trim(a);
    int db = degree(b);
    if (degree(a) < db) return {Poly{}, a};
    Poly q(static_cast<std::size_t>(degree(a) - db + 1), 0);
    u64 lead_inv = inverse(b.back(), p);
    while (degree(a) >= db) {
        int shift = degree(a) - db;
        u64 c = mul_mod(a.back(), lead_inv, p);
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            auto idx = static_cast<std::size_t>(i + shift);
            a[idx] = sub_mod(a[idx], mul_mod(c, b[static_cast<std::size_t>(i)], p), p);
        }
        trim(a);
    }
    trim(q);
    return {q, a};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = add_mod(prod[i + j], mul_mod(a[i], b[j], p), p);
    return divmod(std::move(prod), f, p).second;
}

Poly powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly result{1};
    base = divmod(std::move(base), f, p).second;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly make_monic(Poly a, u64 p) {
    trim(a);
    if (a.empty()) return a;
    u64 inv = inverse(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
    return a;
}

Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

u64 splitmix(u64 x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Roots of a monic, squarefree polynomial g that splits into linear factors.
void split_roots(const Poly& g, u64 p, u64 seed, std::vector<u64>& out) {
    int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(sub_mod(0, g[0], p));
        return;
    }
    if (d == 2) {
        // y^2 + b y + c: y = (-b +- sqrt(b^2 - 4c)) / 2
        u64 b = g[1], c = g[0];
        u64 disc = sub_mod(mul_mod(b, b, p), mul_mod(4 % p, c, p), p);
        auto s = sqrt_mod(disc, p);
        if (!s) return;
        u64 half = inverse(2, p);
        u64 neg_b = sub_mod(0, b, p);
        out.push_back(mul_mod(add_mod(neg_b, *s, p), half, p));
        if (*s != 0) out.push_back(mul_mod(sub_mod(neg_b, *s, p), half, p));
        return;
    }
    // Equal-degree splitting: gcd((y + a)^((p-1)/2) - 1, g).
    for (u64 counter = 0;; ++counter) {
        u64 a = splitmix(seed ^ splitmix(counter)) % p;
        Poly h = powmod(Poly{a, 1}, (p - 1) / 2, g, p);
        if (h.empty()) h = Poly{0};
        h[0] = sub_mod(h[0], 1, p);
        trim(h);
        Poly factor = gcd(h, g, p);
        int df = degree(factor);
        if (df > 0 && df < d) {
            split_roots(factor, p, seed + 1, out);
            split_roots(divmod(g, factor, p).first, p, seed + 2, out);
            return;
        }
    }
}

void require_prime_above_5(u64 p, const char* what) {
    if (p <= 5 || !is_prime(p))
        throw std::invalid_argument(std::string(what) + ": expected a prime > 5, got " + std::to_string(p));
}

u64 root_symbol_argument(u64 y, u64 p) {
    return add_mod(mul_mod(constants::kRootSymbolScale % p, y, p), constants::kRootSymbolShift % p, p);
}

void fill_t_fields(ConditionReport& report, bool always_roots) {
    const u64 p = report.p;
    report.legendre_1957 = jacobi(constants::kCubicDiscriminant, p);
    if (report.legendre_1957 == 1 && !always_roots) {
        report.t_pass = true;
        return;
    }
    report.cubic_roots = cubic_roots(p).roots;
    report.legendre_4y25.clear();
    for (u64 y : report.cubic_roots)
        report.legendre_4y25.push_back(jacobi_unsigned(root_symbol_argument(y, p), p));
    bool all_nonresidue = std::all_of(report.legendre_4y25.begin(), report.legendre_4y25.end(),
                                      [](int s) { return s == -1; });
    // (1957/p) = 0 only for p in {19, 103}; there the root clause is applied as is.
    report.t_pass = report.legendre_1957 == 1 || all_nonresidue;
}

}  // namespace

namespace detail {

std::vector<u64> cubic_roots_by_scan(u64 p) {
    std::vector<u64> roots;
    for (u64 y = 0; y < p; ++y) {
        u64 v = mul_mod(mul_mod(y, (y + 4) % p, p), (y + 6) % p, p);
        if (v == 1 % p) roots.push_back(y);
    }
    return roots;
}

std::vector<u64> cubic_roots_by_gcd(u64 p) {
    const Poly f = cubic(p);
    Poly h = powmod(Poly{0, 1}, p, f, p);  // y^p mod f
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = sub_mod(h[1], 1, p);
    trim(h);
    Poly g = h.empty() ? make_monic(f, p) : gcd(f, h, p);
    std::vector<u64> roots;
    split_roots(g, p, splitmix(p), roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool rs_pass(u64 p) noexcept {
    return (p & 7) == 5 && jacobi_unsigned(5, p) == -1 && jacobi_unsigned(p - 23 % p, p) == 1;
}

bool t_pass(u64 p) {
    ConditionReport report;
    report.p = p;
    fill_t_fields(report, false);
    return report.t_pass;
}

bool quarter_factorial_pass(u64 p) noexcept {
    u64 f = 1;
    for (u64 k = 2; k <= (p - 1) / 4; ++k) f = mul_mod(f, k, p);
    return jacobi_unsigned(f, p) == 1;
}

}  // namespace detail

ConditionReport rs_filter(u64 p) {
    require_prime_above_5(p, "rs_filter");
    ConditionReport report;
    report.p = p;
    report.passes_mod8 = (p & 7) == 5;
    report.legendre_5 = jacobi(constants::kRsSymbol5, p);
    report.legendre_m23 = jacobi(constants::kRsSymbolMinus23, p);
    report.rs_pass = report.passes_mod8 && report.legendre_5 == -1 && report.legendre_m23 == 1;
    return report;
}

ConditionReport t_filter(u64 p) {
    require_prime_above_5(p, "t_filter");
    ConditionReport report;
    report.p = p;
    fill_t_fields(report, false);
    return report;
}

ConditionReport evaluate_conditions(u64 p) {
    ConditionReport report = rs_filter(p);
    fill_t_fields(report, true);
    return report;
}

CubicRoots cubic_roots(u64 p) {
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("cubic_roots: expected a prime > 3, got " + std::to_string(p));
    CubicRoots out;
    out.p = p;
    out.multiplicity_note = constants::kCubicDiscriminant % static_cast<std::int64_t>(p) == 0;
    out.roots = p < constants::kCubicScanLimit ? detail::cubic_roots_by_scan(p) : detail::cubic_roots_by_gcd(p);
    return out;
}

bool quarter_factorial_filter(u64 p) {
    if (!is_prime(p) || (p & 7) != 5)
        throw std::invalid_argument("quarter_factorial_filter: expected a prime p = 5 (mod 8), got " +
                                    std::to_string(p));
    return detail::quarter_factorial_pass(p);
}

}  // namespace socialist
