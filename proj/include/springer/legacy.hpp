#pragma once

#include <vector>

#include "springer/partition.hpp"
#include "springer/symbol.hpp"

namespace springer {

/// Suffix contribution of the i-th conjugate row under the per-row formula.
struct LegacyRowContribution {
    int row_index = 0;   // i, 1-based; rows are conjugate rows of length L(i)
    int row_length = 0;  // L(i)
    Row target_row = Row::Top;
    int suffix_length = 0;  // slots (from the right) incremented by 1
};

std::vector<LegacyRowContribution> legacy_rows(const Partition& p, Theory th);

/// Per-conjugate-row closed formula; independent of symbol_closed.
/// Requires validate + is_rigid.
Symbol symbol_legacy(const Partition& p, Theory th,
                     GapConvention gap = GapConvention::Strict);

}  // namespace springer
