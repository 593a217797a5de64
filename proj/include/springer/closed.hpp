#pragma once

#include <vector>

#include "springer/partition.hpp"
#include "springer/symbol.hpp"

namespace springer {

/// Per part value j: row count L(j), its parity Delta(j), the rectangle
/// slot width W(j), and the right-anchor offset Sp(j+1). Indexed by j,
/// valid for 0 <= j <= largest + 2 (zero beyond the largest part).
struct ClosedParams {
    std::vector<int> L;      // L(j) = #parts >= j
    std::vector<int> Delta;  // L(j) mod 2
    std::vector<int> W;      // (n_j + Delta(j) + n_{j-1} - Delta(j-1)) / 2
    std::vector<int> Sp;     // Sp[j] = (L(j) - Delta(j)) / 2
};

ClosedParams closed_params(const Partition& p, Theory th);

enum class BlockKind {
    FirstRowB,  // whole bottom row filled with 1s
    FirstRowD,  // whole top row filled with 1s
    Fringe,     // 1^{n_j} row at even pattern parity: ones in the bottom row
    Hook,       // 2*1^{n_j} at odd pattern parity: ones in the top row
    Rectangle,  // even-height rectangle: h/2 in both rows over W slots
};

/// One additive piece of the block decomposition. `count` slots per
/// affected row receive `value`, right-anchored with `right_offset` empty
/// slots after them.
struct Block {
    BlockKind kind = BlockKind::Rectangle;
    int pattern_row = 0;    // lower row height j of the owning pairwise pattern
    int value = 0;          // entry written into each affected slot
    int count = 0;          // slots per affected row
    int right_offset = 0;   // Sp(j+1): zero slots to the right of the block
};

/// Splits a rigid partition into first row (B, D), fringe/hook rows, and
/// even-height rectangles whose contributions sum to the symbol.
std::vector<Block> decompose_blocks(const Partition& p, Theory th,
                                    GapConvention gap = GapConvention::Strict);

/// The all-zeros symbol of shape (p_len, q_len) with the block's pattern
/// written at its placement. Throws on out-of-range placement.
Symbol block_contribution(const Block& b, int p_len, int q_len, Theory th);

/// Entrywise sum of all block contributions.
Symbol fold_blocks(const std::vector<Block>& blocks, const Partition& p,
                   Theory th);

/// Closed-formula evaluation: theory first term plus per-pattern rectangle
/// and fringe/hook terms. Requires validate + is_rigid.
Symbol symbol_closed(const Partition& p, Theory th,
                     GapConvention gap = GapConvention::Strict);

/// Slot whose entry grows by 1 when s_k is increased by 2 (0-based k).
/// Throws if the incremented sequence is not weakly decreasing.
SlotRef rule_a_delta(const PaddedSequence& seq, int k);

/// Slot whose entry grows by 1 when the equal adjacent parts s_i, s_{i+1}
/// both increase by 1; the slot of position i is unchanged. Throws unless
/// s_i == s_{i+1} and the result stays weakly decreasing.
SlotRef rule_b_delta(const PaddedSequence& seq, int i);

}  // namespace springer
