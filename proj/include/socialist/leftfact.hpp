#pragma once

// Kurepa's left factorial !p = 0! + 1! + ... + (p-1)! and the generalized
// !^k p = (0!)^k + ... + ((p-1)!)^k, reduced mod p, together with the
// necessary conditions they give for a socialist prime.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "socialist/modmath.hpp"

namespace socialist {

struct ResidueRecord {
    u64 p = 0;
    u64 r_p = 0;

    friend bool operator==(const ResidueRecord&, const ResidueRecord&) = default;
};

struct GeneralizedResidue {
    u64 p = 0;
    u64 k = 0;
    u64 value = 0;

    friend bool operator==(const GeneralizedResidue&, const GeneralizedResidue&) = default;
};

/// r_p = !p mod p. p must be prime (std::invalid_argument otherwise).
ResidueRecord left_factorial_mod(u64 p);

/// !^k p mod p for each requested k >= 1, in one pass over the factorials.
std::vector<GeneralizedResidue> generalized_left_factorial_mod(u64 p, std::span<const u64> ks);

/// (r_p - 2)^2 + 1 = 0 (mod p). Requires an odd prime.
bool lfc_check(u64 p);

/// The generalized condition for exponent k in [1, p-2]:
///   k odd    : (!^k p - 2)^2 + 1 = 0
///   k = 4t   : !^k p = 1
///   k = 4t+2 : !^k p = 3
/// Outside [1, p-2] the power sums no longer vanish, so such k are rejected.
bool lfck_check(u64 p, u64 k);

/// Checks the branch of lfck_check for an already computed !^k p.
bool lfck_holds(u64 p, u64 k, u64 value) noexcept;

/// Residue table as CSV: header "p,r_p", one decimal row per record,
/// strictly increasing p, Unix newlines.
void residue_table_write(std::span<const ResidueRecord> records, std::ostream& out);
void residue_table_write(std::span<const ResidueRecord> records, const std::filesystem::path& path);

/// Throws FormatError on malformed rows, unsorted or duplicate p,
/// or r_p >= p. The path overload throws IoError when the file cannot be read.
std::vector<ResidueRecord> residue_table_read(std::istream& in);
std::vector<ResidueRecord> residue_table_read(const std::filesystem::path& path);

namespace detail {
u64 left_factorial_unchecked(u64 p) noexcept;
}

}  // namespace socialist
