#include "springer/legacy.hpp"

#include <stdexcept>

namespace springer {

std::vector<LegacyRowContribution> legacy_rows(const Partition& p, Theory th) {
    const int m = p.largest();
    const int t = offset(th);
    std::vector<LegacyRowContribution> rows;
    rows.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const int r = p.tail_count(i);
        const bool r_odd = r % 2 != 0;
        const bool idx_odd = (i + t + 1) % 2 != 0;
        LegacyRowContribution c;
        c.row_index = i;
        c.row_length = r;
        if (r_odd && !idx_odd) {
            c.target_row = Row::Top;
            c.suffix_length = (r + 1) / 2;
        } else if (!r_odd && idx_odd) {
            c.target_row = Row::Top;
            c.suffix_length = r / 2;
        } else if (!r_odd && !idx_odd) {
            c.target_row = Row::Bottom;
            c.suffix_length = r / 2;
        } else {
            c.target_row = Row::Bottom;
            c.suffix_length = (r - 1) / 2;
        }
        rows.push_back(c);
    }
    return rows;
}

Symbol symbol_legacy(const Partition& p, Theory th, GapConvention gap) {
    if (!is_rigid(p, th, gap))
        throw std::invalid_argument("symbol_legacy: partition is not rigid");
    const auto [plen, qlen] = symbol_shape(p.length(), th);
    Symbol s;
    s.theory = th;
    s.source_length = p.length();
    s.top.assign(static_cast<size_t>(plen), 0);
    s.bottom.assign(static_cast<size_t>(qlen), 0);
    for (const auto& c : legacy_rows(p, th)) {
        auto& row = c.target_row == Row::Top ? s.top : s.bottom;
        const int n = static_cast<int>(row.size());
        for (int i = n - c.suffix_length; i < n; ++i)
            row[static_cast<size_t>(i)] += 1;
    }
    return s;
}

}  // namespace springer
