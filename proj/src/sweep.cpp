#include "springer/sweep.hpp"

#include <algorithm>

#include "springer/closed.hpp"
#include "springer/legacy.hpp"
#include "springer/symbol.hpp"
#include "springer/validators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace springer {

namespace {

struct CaseResult {
    bool rigid = false;
    std::vector<SweepFailure> failures;
};

void fail(CaseResult& res, const Partition& p, const char* check,
          std::string detail = {}) {
    res.failures.push_back({check, p.render_exponent(), std::move(detail)});
}

CaseResult check_one(const Partition& p, Theory th, GapConvention gap) {
    CaseResult res;
    if (!check_pairwise_parity(p, th)) fail(res, p, "pairwise-parity");
    if (!is_rigid(p, th, gap)) return res;
    res.rigid = true;

    const Symbol sdef = compute_symbol(p, th);
    const auto [plen, qlen] = symbol_shape(p.length(), th);
    if (static_cast<int>(sdef.top.size()) != plen ||
        static_cast<int>(sdef.bottom.size()) != qlen)
        fail(res, p, "shape");
    for (const auto* row : {&sdef.top, &sdef.bottom})
        for (size_t i = 0; i < row->size(); ++i)
            if ((*row)[i] < 0 || (i > 0 && (*row)[i - 1] > (*row)[i]))
                fail(res, p, "row-order");

    if (symbol_closed(p, th, gap) != sdef)
        fail(res, p, "closed-vs-def", render(symbol_closed(p, th, gap)));
    if (symbol_legacy(p, th, gap) != sdef)
        fail(res, p, "legacy-vs-def", render(symbol_legacy(p, th, gap)));
    if (fold_blocks(decompose_blocks(p, th, gap), p, th) != sdef)
        fail(res, p, "block-fold");

    // contribution map: bijection onto slots and exact reconstruction
    {
        const auto cm = contribution_map(p, th);
        Symbol rebuilt = sdef;
        std::fill(rebuilt.top.begin(), rebuilt.top.end(), -1);
        std::fill(rebuilt.bottom.begin(), rebuilt.bottom.end(), -1);
        bool ok = cm.entries.size() == sdef.top.size() + sdef.bottom.size();
        for (const auto& e : cm.entries) {
            auto& row = e.slot.row == Row::Top ? rebuilt.top : rebuilt.bottom;
            if (e.slot.index < 0 || e.slot.index >= static_cast<int>(row.size()) ||
                row[static_cast<size_t>(e.slot.index)] != -1) {
                ok = false;
                break;
            }
            row[static_cast<size_t>(e.slot.index)] = e.value;
        }
        if (!ok || rebuilt != sdef) fail(res, p, "contribution-map");
    }

    for (const auto& rep : check_structure_theorem(p, th, gap))
        if (!rep.pass)
            fail(res, p, "structure-theorem",
                 "threshold " + std::to_string(rep.threshold));
    if (check_monotonicity(p, th, gap) == Monotonicity::Fail)
        fail(res, p, "monotonicity");

    if (Partition::parse(p.render_exponent()) != p ||
        Partition::parse(p.render_list()) != p)
        fail(res, p, "parse-render-round-trip");
    auto [ms, mp] = from_machine(to_machine(sdef, p));
    if (ms != sdef || mp != p) fail(res, p, "machine-round-trip");
    return res;
}

}  // namespace

SweepResult run_verification(const SweepOptions& opts) {
    std::vector<Partition> cases;
    for (int rank = 1; rank <= opts.max_rank; ++rank) {
        auto vs = enumerate_valid(rank, opts.theory);
        cases.insert(cases.end(), std::make_move_iterator(vs.begin()),
                     std::make_move_iterator(vs.end()));
    }
    const int n = static_cast<int>(cases.size());
    std::vector<CaseResult> results(cases.size());

    if (opts.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < n; ++i)
            results[static_cast<size_t>(i)] =
                check_one(cases[static_cast<size_t>(i)], opts.theory, opts.gap);
    } else {
        for (int i = 0; i < n; ++i)
            results[static_cast<size_t>(i)] =
                check_one(cases[static_cast<size_t>(i)], opts.theory, opts.gap);
    }

    SweepResult out;
    for (int i = 0; i < n; ++i) {
        const auto& p = cases[static_cast<size_t>(i)];
        const auto& r = results[static_cast<size_t>(i)];
        ++out.valid_checked;
        if (r.rigid) {
            ++out.rigid_checked;
            out.records.push_back({p.render_exponent(),
                                   validate(p, opts.theory).rank,
                                   r.failures.empty()});
        }
        out.failures.insert(out.failures.end(), r.failures.begin(),
                            r.failures.end());
    }
    return out;
}

}  // namespace springer
