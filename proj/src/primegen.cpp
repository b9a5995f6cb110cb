#include "socialist/primegen.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace socialist {

namespace {

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

void PrimeRange::validate() const {
    if (hi > kModulusLimit)
        throw std::invalid_argument("prime range upper bound " + std::to_string(hi) + " exceeds 2^62");
    if (lo > hi)
        throw std::invalid_argument("prime range lower bound exceeds upper bound");
    if (segment_size < kMinSegmentSize)
        throw std::invalid_argument("segment size must be at least 1024");
}

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

PrimeStream::PrimeStream(const PrimeRange& range) : range_(range) {
    range_.validate();
    u64 root = range_.hi > 1 ? isqrt(range_.hi - 1) : 0;
    base_ = std::make_shared<const std::vector<std::uint32_t>>(small_primes(static_cast<std::uint32_t>(root)));
    seek(range_.lo);
}

void PrimeStream::seek(u64 lo) {
    emit_two_ = lo <= 2 && 2 < range_.hi;
    u64 first = std::max<u64>(lo, 3);
    if ((first & 1) == 0) ++first;
    next_lo_ = first;
    cursor_ = cursor_end_ = 0;
    seg_lo_ = seg_hi_ = first;
}

void PrimeStream::fill_segment() {
    seg_lo_ = next_lo_;
    seg_hi_ = std::min(range_.hi, seg_lo_ + range_.segment_size);
    next_lo_ = seg_hi_ | 1;  // keep odd

    u64 count = (seg_hi_ - seg_lo_ + 1) / 2;  // odd numbers in [seg_lo_, seg_hi_)
    bits_.assign((count + 63) / 64, 0);
    if (count % 64 != 0) bits_.back() = ~u64{0} << (count % 64);

    for (std::uint32_t q32 : *base_) {
        u64 q = q32;
        if (q == 2) continue;
        u64 sq = q * q;
        if (sq >= seg_hi_) break;
        u64 start = std::max(sq, (seg_lo_ + q - 1) / q * q);
        if ((start & 1) == 0) start += q;
        for (u64 x = start; x < seg_hi_; x += 2 * q) {
            u64 i = (x - seg_lo_) >> 1;
            bits_[i >> 6] |= u64{1} << (i & 63);
        }
    }
    if (seg_lo_ == 1) bits_[0] |= 1;

    cursor_ = 0;
    cursor_end_ = count;
}

std::optional<u64> PrimeStream::next() {
    if (emit_two_) {
        emit_two_ = false;
        return u64{2};
    }
    for (;;) {
        while (cursor_ < cursor_end_) {
            u64 word_index = cursor_ >> 6;
            u64 free_bits = ~bits_[word_index] & (~u64{0} << (cursor_ & 63));
            if (free_bits == 0) {
                cursor_ = (word_index + 1) << 6;
                continue;
            }
            u64 i = (word_index << 6) + static_cast<u64>(std::countr_zero(free_bits));
            cursor_ = i + 1;
            return seg_lo_ + 2 * i;
        }
        if (next_lo_ >= range_.hi || seg_hi_ >= range_.hi) return std::nullopt;
        fill_segment();
    }
}

std::vector<u64> primes_in_range(const PrimeRange& range) {
    std::vector<u64> out;
    PrimeStream stream(range);
    while (auto p = stream.next()) out.push_back(*p);
    return out;
}

std::vector<u64> primes_5_mod_8(const PrimeRange& range) {
    std::vector<u64> out;
    PrimeStream5Mod8 stream(range);
    while (auto p = stream.next()) out.push_back(*p);
    return out;
}

}  // namespace socialist
