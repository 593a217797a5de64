#include "springer/validators.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

bool check_pairwise_parity(const Partition& p, Theory th) {
    if (!validate(p, th).valid)
        throw std::invalid_argument("check_pairwise_parity: invalid pair");
    const int m = p.largest();
    auto L = [&](int j) { return p.tail_count(j); };
    if (th == Theory::B && L(1) % 2 == 0) return false;
    if (th == Theory::D && L(1) % 2 != 0) return false;
    for (int j = (th == Theory::C ? 1 : 2); j <= m; j += 2)
        if (L(j) % 2 != L(j + 1) % 2) return false;
    return true;
}

std::vector<PrefixReport> check_structure_theorem(const Partition& p, Theory th,
                                                  GapConvention gap) {
    if (!is_rigid(p, th, gap))
        throw std::invalid_argument("check_structure_theorem: not rigid");
    const auto cm = contribution_map(p, th);
    const auto [plen, qlen] = symbol_shape(p.length(), th);
    std::vector<PrefixReport> reports;
    for (int k = 1; k <= p.largest(); ++k) {
        PrefixReport rep;
        rep.threshold = k;
        rep.row_count = p.tail_count(k);
        std::vector<int> tops, bottoms;
        // positions 0..L(k)-1 are exactly the parts >= k
        for (int pos = 0; pos < rep.row_count; ++pos) {
            const auto& slot = cm.entries[static_cast<size_t>(pos)].slot;
            (slot.row == Row::Top ? tops : bottoms).push_back(slot.index);
        }
        std::sort(tops.begin(), tops.end());
        std::sort(bottoms.begin(), bottoms.end());
        rep.top_count = static_cast<int>(tops.size());
        rep.bottom_count = static_cast<int>(bottoms.size());
        auto is_suffix = [](const std::vector<int>& idx, int len) {
            for (size_t i = 0; i < idx.size(); ++i)
                if (idx[i] != len - static_cast<int>(idx.size() - i)) return false;
            return true;
        };
        rep.suffix_aligned = is_suffix(tops, plen) && is_suffix(bottoms, qlen);
        rep.pass = rep.suffix_aligned &&
                   rep.top_count == (rep.row_count + 1) / 2 &&
                   rep.bottom_count == rep.row_count / 2;
        reports.push_back(rep);
    }
    return reports;
}

Monotonicity check_monotonicity(const Partition& p, Theory th,
                                GapConvention gap) {
    if (!is_rigid(p, th, gap))
        throw std::invalid_argument("check_monotonicity: not rigid");
    bool greater;  // true: alpha_i >= beta_{i+t}
    if (th == Theory::B) {
        greater = false;
    } else if (th == Theory::D) {
        greater = true;
    } else {
        const bool all_odd = std::all_of(p.parts().begin(), p.parts().end(),
                                         [](int v) { return v % 2 != 0; });
        const bool all_even = std::all_of(p.parts().begin(), p.parts().end(),
                                          [](int v) { return v % 2 == 0; });
        if (!all_odd && !all_even) return Monotonicity::NotApplicable;
        greater = all_even;
    }
    const Symbol s = compute_symbol(p, th);
    const int t = offset(th);
    for (int i = 0; i < static_cast<int>(s.top.size()); ++i) {
        const int bi = i + t;  // beta_{i+t}, both 0-based here
        if (bi < 0 || bi >= static_cast<int>(s.bottom.size())) continue;
        const int a = s.top[static_cast<size_t>(i)];
        const int b = s.bottom[static_cast<size_t>(bi)];
        if (greater ? a < b : a > b) return Monotonicity::Fail;
    }
    return Monotonicity::Pass;
}

}  // namespace springer
