#include "socialist/leftfact.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "socialist/errors.hpp"

namespace socialist {

namespace {

void require_prime(u64 p, const char* what) {
    if (!is_prime(p) || p >= kModulusLimit)
        throw std::invalid_argument(std::string(what) + ": expected a prime below 2^62, got " + std::to_string(p));
}

void require_odd_prime(u64 p, const char* what) {
    require_prime(p, what);
    if (p == 2) throw std::invalid_argument(std::string(what) + ": expected an odd prime, got 2");
}

constexpr std::string_view kHeader = "p,r_p";

}  // namespace

namespace detail {

u64 left_factorial_unchecked(u64 p) noexcept {
    if (p == 2) return 0;  // 0! + 1! = 2
    const Montgomery mont(p);
    u64 factorial = mont.one();  // m! for m = 0
    u64 index = 0;               // m in Montgomery form
    u64 sum = 0;
    for (u64 m = 0; m < p; ++m) {
        sum = mont.add(sum, factorial);
        index = mont.add(index, mont.one());
        factorial = mont.mul(factorial, index);
    }
    return mont.from(sum);
}

}  // namespace detail

ResidueRecord left_factorial_mod(u64 p) {
    require_prime(p, "left_factorial_mod");
    return {p, detail::left_factorial_unchecked(p)};
}

std::vector<GeneralizedResidue> generalized_left_factorial_mod(u64 p, std::span<const u64> ks) {
    require_prime(p, "generalized_left_factorial_mod");
    for (u64 k : ks)
        if (k == 0) throw std::invalid_argument("generalized_left_factorial_mod: exponents must be >= 1");

    std::vector<GeneralizedResidue> out;
    out.reserve(ks.size());
    if (p == 2) {
        for (u64 k : ks) out.push_back({p, k, 0});  // 1 + 1
        return out;
    }

    const Montgomery mont(p);
    std::vector<u64> sums(ks.size(), 0);
    u64 factorial = mont.one();
    u64 index = 0;
    for (u64 m = 0; m < p; ++m) {
        for (std::size_t i = 0; i < ks.size(); ++i) {
            u64 power = mont.one();
            u64 base = factorial;
            for (u64 e = ks[i]; e > 0; e >>= 1) {
                if (e & 1) power = mont.mul(power, base);
                base = mont.mul(base, base);
            }
            sums[i] = mont.add(sums[i], power);
        }
        index = mont.add(index, mont.one());
        factorial = mont.mul(factorial, index);
    }
    for (std::size_t i = 0; i < ks.size(); ++i) out.push_back({p, ks[i], mont.from(sums[i])});
    return out;
}

bool lfc_check(u64 p) {
    require_odd_prime(p, "lfc_check");
    return lfck_holds(p, 1, detail::left_factorial_unchecked(p));
}

bool lfck_holds(u64 p, u64 k, u64 value) noexcept {
    if (k & 1) {
        u64 d = sub_mod(value % p, 2 % p, p);
        return add_mod(mul_mod(d, d, p), 1 % p, p) == 0;
    }
    return value % p == (k % 4 == 0 ? 1 % p : 3 % p);
}

bool lfck_check(u64 p, u64 k) {
    require_odd_prime(p, "lfck_check");
    if (k < 1 || k > p - 2)
        throw std::invalid_argument("lfck_check: exponent " + std::to_string(k) + " outside [1, p-2]");
    const u64 ks[] = {k};
    return lfck_holds(p, k, generalized_left_factorial_mod(p, ks).front().value);
}

void residue_table_write(std::span<const ResidueRecord> records, std::ostream& out) {
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].r_p >= records[i].p)
            throw std::invalid_argument("residue_table_write: r_p >= p at p = " + std::to_string(records[i].p));
        if (i > 0 && records[i].p <= records[i - 1].p)
            throw std::invalid_argument("residue_table_write: records must be strictly increasing in p");
    }
    out << kHeader << '\n';
    for (const auto& r : records) out << r.p << ',' << r.r_p << '\n';
    if (!out) throw IoError("residue_table_write: stream write failed");
}

void residue_table_write(std::span<const ResidueRecord> records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    residue_table_write(records, out);
    out.flush();
    if (!out) throw IoError("write to " + path.string() + " failed");
}

std::vector<ResidueRecord> residue_table_read(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw FormatError("residue table: missing header \"p,r_p\"");

    auto parse = [](std::string_view text, u64& value) {
        if (text.empty()) return false;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        return ec == std::errc{} && ptr == text.data() + text.size();
    };

    std::vector<ResidueRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto comma = line.find(',');
        ResidueRecord rec;
        if (comma == std::string::npos || !parse(std::string_view(line).substr(0, comma), rec.p) ||
            !parse(std::string_view(line).substr(comma + 1), rec.r_p))
            throw FormatError("residue table line " + std::to_string(line_no) + ": malformed row \"" +
                                     line + "\"");
        if (rec.r_p >= rec.p)
            throw FormatError("residue table line " + std::to_string(line_no) + ": r_p >= p");
        if (!records.empty() && rec.p <= records.back().p)
            throw FormatError("residue table line " + std::to_string(line_no) +
                                     ": rows must be strictly increasing in p");
        records.push_back(rec);
    }
    return records;
}

std::vector<ResidueRecord> residue_table_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return residue_table_read(in);
}

}  // namespace socialist
