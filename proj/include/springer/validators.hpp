#pragma once

#include <vector>

#include "springer/partition.hpp"
#include "springer/symbol.hpp"

namespace springer {

/// Pairwise row-parity pattern of the theory: B has L(1) odd and L(j),
/// L(j+1) sharing parity for even j >= 2; C pairs odd j >= 1; D has L(1)
/// even and pairs even j >= 2. Requires validate.
bool check_pairwise_parity(const Partition& p, Theory th);

/// Support of the contributions of parts >= k, one report per threshold.
struct PrefixReport {
    int threshold = 0;      // part value k
    int row_count = 0;      // L(k): number of contributing positions
    int top_count = 0;      // slots owned in the top row
    int bottom_count = 0;   // slots owned in the bottom row
    bool suffix_aligned = false;  // both rows right-aligned suffixes
    bool pass = false;
};

/// For each k = 1..largest, the slots owned by positions with part >= k
/// must be right-aligned suffixes with top ceil(L(k)/2), bottom
/// floor(L(k)/2). Requires validate + is_rigid.
std::vector<PrefixReport> check_structure_theorem(
    const Partition& p, Theory th, GapConvention gap = GapConvention::Strict);

enum class Monotonicity { Pass, Fail, NotApplicable };

/// B and all-odd-parts C: alpha_i <= beta_{i+t}; D and all-even-parts C:
/// alpha_i >= beta_{i+t}; mixed-parity C is out of scope. Requires
/// validate + is_rigid.
Monotonicity check_monotonicity(const Partition& p, Theory th,
                                GapConvention gap = GapConvention::Strict);

}  // namespace springer
