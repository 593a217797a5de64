#include "springer/closed.hpp"

#include <stdexcept>

namespace springer {

ClosedParams closed_params(const Partition& p, Theory th) {
    (void)th;
    const int m = p.largest();
    ClosedParams cp;
    cp.L.resize(static_cast<size_t>(m) + 3, 0);
    cp.Delta = cp.W = cp.Sp = cp.L;
    for (int j = 0; j <= m + 2; ++j) {
        cp.L[j] = p.tail_count(j);
        cp.Delta[j] = cp.L[j] % 2;
        cp.Sp[j] = (cp.L[j] - cp.Delta[j]) / 2;
    }
    for (int j = 1; j <= m + 2; ++j)
        cp.W[j] = (p.multiplicity(j) + cp.Delta[j] + p.multiplicity(j - 1) -
                   cp.Delta[j - 1]) /
                  2;
    return cp;
}

std::vector<Block> decompose_blocks(const Partition& p, Theory th,
                                    GapConvention gap) {
    if (!is_rigid(p, th, gap))
        throw std::invalid_argument("decompose_blocks: partition is not rigid");
    const auto cp = closed_params(p, th);
    const auto [plen, qlen] = symbol_shape(p.length(), th);
    const int m = p.largest();
    std::vector<Block> blocks;
    if (th == Theory::B)
        blocks.push_back({BlockKind::FirstRowB, 0, 1, qlen, 0});
    if (th == Theory::D)
        blocks.push_back({BlockKind::FirstRowD, 0, 1, plen, 0});
    // pairwise patterns (j, j+1); virtual top pair at j = m+1 included
    for (int j = (th == Theory::C ? 1 : 2); j <= m + 1; j += 2) {
        const int sp = cp.Sp[j + 1];
        const int r = (th == Theory::C ? j - 1 : j - 2) / 2;
        const int w = cp.W[j];
        if (r > 0 && w > 0)
            blocks.push_back({BlockKind::Rectangle, j, r, w, sp});
        const int c = p.multiplicity(j) / 2 + cp.Delta[j];
        if (c > 0)
            blocks.push_back({cp.Delta[j] == 1 ? BlockKind::Hook
                                               : BlockKind::Fringe,
                              j, 1, c, sp});
    }
    return blocks;
}

Symbol block_contribution(const Block& b, int p_len, int q_len, Theory th) {
    Symbol s;
    s.theory = th;
    s.top.assign(static_cast<size_t>(p_len), 0);
    s.bottom.assign(static_cast<size_t>(q_len), 0);
    auto write = [&](std::vector<int>& row) {
        const int end = static_cast<int>(row.size()) - b.right_offset;
        if (end - b.count < 0 || end > static_cast<int>(row.size()))
            throw std::out_of_range("block_contribution: placement out of range");
        for (int i = end - b.count; i < end; ++i) row[static_cast<size_t>(i)] += b.value;
    };
    switch (b.kind) {
        case BlockKind::FirstRowB: write(s.bottom); break;
        case BlockKind::FirstRowD:
        case BlockKind::Hook: write(s.top); break;
        case BlockKind::Fringe: write(s.bottom); break;
        case BlockKind::Rectangle:
            write(s.top);
            write(s.bottom);
            break;
    }
    return s;
}

Symbol fold_blocks(const std::vector<Block>& blocks, const Partition& p,
                   Theory th) {
    const auto [plen, qlen] = symbol_shape(p.length(), th);
    Symbol sum;
    sum.theory = th;
    sum.source_length = p.length();
    sum.top.assign(static_cast<size_t>(plen), 0);
    sum.bottom.assign(static_cast<size_t>(qlen), 0);
    for (const auto& b : blocks) {
        Symbol d = block_contribution(b, plen, qlen, th);
        for (size_t i = 0; i < sum.top.size(); ++i) sum.top[i] += d.top[i];
        for (size_t i = 0; i < sum.bottom.size(); ++i) sum.bottom[i] += d.bottom[i];
    }
    return sum;
}

Symbol symbol_closed(const Partition& p, Theory th, GapConvention gap) {
    if (!is_rigid(p, th, gap))
        throw std::invalid_argument("symbol_closed: partition is not rigid");
    const auto cp = closed_params(p, th);
    const auto [plen, qlen] = symbol_shape(p.length(), th);
    const int m = p.largest();
    Symbol s;
    s.theory = th;
    s.source_length = p.length();
    s.top.assign(static_cast<size_t>(plen), th == Theory::D ? 1 : 0);
    s.bottom.assign(static_cast<size_t>(qlen), th == Theory::B ? 1 : 0);
    for (int j = (th == Theory::C ? 1 : 2); j <= m + 1; j += 2) {
        const int sp = cp.Sp[j + 1];
        const int r = (th == Theory::C ? j - 1 : j - 2) / 2;
        const int w = cp.W[j];
        if (r > 0 && w > 0) {
            for (int i = plen - sp - w; i < plen - sp; ++i)
                s.top[static_cast<size_t>(i)] += r;
            for (int i = qlen - sp - w; i < qlen - sp; ++i)
                s.bottom[static_cast<size_t>(i)] += r;
        }
        const int c = p.multiplicity(j) / 2 + cp.Delta[j];
        auto& row = cp.Delta[j] == 1 ? s.top : s.bottom;
        const int end = static_cast<int>(row.size()) - sp;
        for (int i = end - c; i < end; ++i) row[static_cast<size_t>(i)] += 1;
    }
    return s;
}

SlotRef rule_a_delta(const PaddedSequence& seq, int k) {
    const int l = seq.padded_length();
    if (k < 0 || k >= l) throw std::out_of_range("rule_a_delta: position");
    if (k > 0 && seq.values[k - 1] < seq.values[k] + 2)
        throw std::invalid_argument(
            "rule_a_delta: increment would break weak decrease");
    return contribution_map(seq).entries[static_cast<size_t>(k)].slot;
}

SlotRef rule_b_delta(const PaddedSequence& seq, int i) {
    const int l = seq.padded_length();
    if (i < 0 || i + 1 >= l) throw std::out_of_range("rule_b_delta: position");
    if (seq.values[i] != seq.values[i + 1])
        throw std::invalid_argument("rule_b_delta: parts must be equal");
    if (i > 0 && seq.values[i - 1] < seq.values[i] + 1)
        throw std::invalid_argument(
            "rule_b_delta: increment would break weak decrease");
    return contribution_map(seq).entries[static_cast<size_t>(i) + 1].slot;
}

}  // namespace springer
