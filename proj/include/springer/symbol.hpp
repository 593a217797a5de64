#pragma once

#include <string>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

/// Two-row invariant attached to a partition: nondecreasing nonnegative
/// rows alpha (top) and beta (bottom) with #bottom = #top + offset(theory).
struct Symbol {
    std::vector<int> top;
    std::vector<int> bottom;
    Theory theory = Theory::B;
    int source_length = 0;  // unpadded partition length

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.top == b.top && a.bottom == b.bottom && a.theory == b.theory;
    }
};

/// Row lengths (p, q) forced by the theory: p = (l + (1-(-1)^l)/2)/2 with
/// l the unpadded length, q = p + t.
std::pair<int, int> symbol_shape(int unpadded_length, Theory th);

/// Direct application of the definition: v_k = l-k+s_k, split by parity,
/// sort ascending, subtract the staircase.
Symbol symbol_by_definition(const PaddedSequence& seq);

/// symbol_by_definition(pad(p, th)).
Symbol compute_symbol(const Partition& p, Theory th);

enum class Row { Top, Bottom };

struct SlotRef {
    Row row = Row::Top;
    int index = 0;  // 0-based slot within the row
    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct Contribution {
    SlotRef slot;
    int value = 0;  // the symbol entry this position produces
};

/// entries[k] is the slot and value contributed by padded position k
/// (0-based). The slots form a bijection with the symbol slots.
struct ContributionMap {
    std::vector<Contribution> entries;
};

ContributionMap contribution_map(const PaddedSequence& seq);
ContributionMap contribution_map(const Partition& p, Theory th);

/// Strips leading all-zero columns (top[0] == 0 and bottom[0] == 0 drop
/// together), preserving the row-length difference. Idempotent.
Symbol normalize(Symbol s);

/// "(0 0 1 / 1 2)" text layout, entries ascending left to right.
std::string render(const Symbol& s);

/// Machine form: JSON object with theory, partition, top, bottom.
std::string to_machine(const Symbol& s, const Partition& p);
/// Inverse of to_machine; returns the symbol and the partition.
std::pair<Symbol, Partition> from_machine(const std::string& text);

}  // namespace springer
