// symtool: classify partitions, compute symbols three ways, enumerate,
// verify, and explain block decompositions for theories B, C, D.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "springer/closed.hpp"
#include "springer/legacy.hpp"
#include "springer/sweep.hpp"
#include "springer/validators.hpp"

using namespace springer;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string theory = "B";
    std::string method = "def";
    std::string gap = "strict";
    std::string format = "text";
    std::string partition_text;
    int max_rank = 1;
};

Theory theory_of(const Options& o) { return theory_from_string(o.theory); }

GapConvention gap_of(const Options& o) {
    return o.gap == "loose" ? GapConvention::Loose : GapConvention::Strict;
}

json partition_json(const Partition& p) {
    return std::vector<int>(p.parts().begin(), p.parts().end());
}

json symbol_json(const Symbol& s, const Partition& p) {
    json j;
    j["theory"] = std::string(1, letter(s.theory));
    j["partition"] = partition_json(p);
    j["top"] = s.top;
    j["bottom"] = s.bottom;
    return j;
}

int run_classify(const Options& o) {
    auto p = Partition::parse(o.partition_text);
    auto th = theory_of(o);
    auto rep = validate(p, th);
    bool rigid = rep.valid && is_rigid(p, th, gap_of(o));
    if (o.format == "machine") {
        json j;
        j["theory"] = o.theory;
        j["partition"] = partition_json(p);
        j["valid"] = rep.valid;
        j["rank"] = rep.rank;
        j["rigid"] = rigid;
        j["violation"] = rep.violation;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << p.render_exponent() << " in " << letter(th) << ": ";
        if (!rep.valid) {
            std::cout << "invalid (" << rep.violation << ")\n";
        } else {
            std::cout << "valid, rank " << rep.rank << ", "
                      << (rigid ? "rigid" : "not rigid") << '\n';
        }
    }
    return 0;
}

void print_symbol(const Options& o, const char* method, const Symbol& s,
                  const Partition& p) {
    if (o.format == "machine") {
        json j = symbol_json(s, p);
        j["method"] = method;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << method << ": " << render(s) << '\n';
    }
}

int run_symbol(const Options& o) {
    auto p = Partition::parse(o.partition_text);
    auto th = theory_of(o);
    auto rep = validate(p, th);
    if (!rep.valid)
        throw std::invalid_argument("invalid partition for theory " + o.theory +
                                    ": " + rep.violation);
    const bool want_closed = o.method == "closed" || o.method == "all";
    const bool want_legacy = o.method == "legacy" || o.method == "all";
    const bool want_def = o.method == "def" || o.method == "all";
    if ((want_closed || want_legacy) && !is_rigid(p, th, gap_of(o)))
        throw std::invalid_argument(
            "closed and legacy methods require a rigid partition");

    Symbol sdef = compute_symbol(p, th);
    bool disagree = false;
    if (want_def) print_symbol(o, "def", sdef, p);
    if (want_closed) {
        auto s = symbol_closed(p, th, gap_of(o));
        print_symbol(o, "closed", s, p);
        if (o.method == "all" && s != sdef) disagree = true;
    }
    if (want_legacy) {
        auto s = symbol_legacy(p, th, gap_of(o));
        print_symbol(o, "legacy", s, p);
        if (o.method == "all" && s != sdef) disagree = true;
    }
    if (disagree) {
        // forensics: definition's per-position contributions
        std::cerr << "methods disagree; definition contribution map:\n";
        auto cm = contribution_map(p, th);
        for (size_t k = 0; k < cm.entries.size(); ++k) {
            const auto& e = cm.entries[k];
            std::cerr << "  position " << k + 1 << " -> "
                      << (e.slot.row == Row::Top ? "top" : "bottom") << '['
                      << e.slot.index + 1 << "] = " << e.value << '\n';
        }
        return kExitVerifyFailure;
    }
    return 0;
}

int run_enumerate(const Options& o) {
    auto th = theory_of(o);
    long long count = 0;
    for (int rank = 1; rank <= o.max_rank; ++rank) {
        for (const auto& p : enumerate_rigid(rank, th, gap_of(o))) {
            ++count;
            if (o.format == "machine") {
                json j;
                j["theory"] = o.theory;
                j["rank"] = rank;
                j["partition"] = partition_json(p);
                std::cout << j.dump() << '\n';
            } else {
                std::cout << letter(th) << rank << ": " << p.render_exponent()
                          << '\n';
            }
        }
    }
    if (o.format != "machine")
        std::cout << count << " rigid partition(s) up to rank " << o.max_rank
                  << '\n';
    return 0;
}

int run_verify(const Options& o) {
    SweepOptions opts;
    opts.theory = theory_of(o);
    opts.max_rank = o.max_rank;
    opts.gap = gap_of(o);
    auto res = run_verification(opts);
    if (o.format == "machine") {
        for (const auto& rec : res.records) {
            json j;
            j["theory"] = o.theory;
            j["rank"] = rec.rank;
            j["partition"] = rec.partition;
            j["all_pass"] = rec.all_pass;
            std::cout << j.dump() << '\n';
        }
        for (const auto& f : res.failures) {
            json j;
            j["failure"] = f.check;
            j["partition"] = f.partition;
            j["detail"] = f.detail;
            std::cout << j.dump() << '\n';
        }
    } else {
        std::cout << "checked " << res.rigid_checked << " rigid / "
                  << res.valid_checked << " valid partitions up to rank "
                  << o.max_rank << '\n';
        if (res.failures.empty()) {
            std::cout << "all checks passed\n";
        } else {
            const auto& f = res.failures.front();
            std::cout << res.failures.size() << " failure(s); first: " << f.check
                      << " on " << f.partition
                      << (f.detail.empty() ? "" : " (" + f.detail + ")") << '\n';
        }
    }
    return res.failures.empty() ? 0 : kExitVerifyFailure;
}

int run_explain(const Options& o) {
    auto p = Partition::parse(o.partition_text);
    auto th = theory_of(o);
    auto rep = validate(p, th);
    if (!rep.valid)
        throw std::invalid_argument("invalid partition for theory " + o.theory +
                                    ": " + rep.violation);
    if (!is_rigid(p, th, gap_of(o)))
        throw std::invalid_argument("explain requires a rigid partition");
    auto blocks = decompose_blocks(p, th, gap_of(o));
    auto [plen, qlen] = symbol_shape(p.length(), th);
    auto kind_name = [](BlockKind k) {
        switch (k) {
            case BlockKind::FirstRowB: return "first-row-b";
            case BlockKind::FirstRowD: return "first-row-d";
            case BlockKind::Fringe: return "fringe";
            case BlockKind::Hook: return "hook";
            case BlockKind::Rectangle: return "rectangle";
        }
        return "?";
    };
    for (const auto& b : blocks) {
        auto d = block_contribution(b, plen, qlen, th);
        if (o.format == "machine") {
            json j = symbol_json(d, p);
            j["block"] = kind_name(b.kind);
            j["pattern_row"] = b.pattern_row;
            j["value"] = b.value;
            j["count"] = b.count;
            j["right_offset"] = b.right_offset;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << kind_name(b.kind);
            if (b.pattern_row) std::cout << " (pattern rows " << b.pattern_row
                                         << "," << b.pattern_row + 1 << ")";
            std::cout << ": " << render(d) << '\n';
        }
    }
    auto total = fold_blocks(blocks, p, th);
    if (o.format != "machine")
        std::cout << "sum: " << render(total) << '\n'
                  << "def: " << render(compute_symbol(p, th)) << '\n';
    return total == compute_symbol(p, th) ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbols of rigid partitions in theories B, C, D"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd, bool needs_partition, bool needs_rank) {
        cmd->add_option("--theory", o.theory, "Theory: B, C, or D")
            ->check(CLI::IsMember({"B", "C", "D"}));
        cmd->add_option("--gap-convention", o.gap, "Gap convention")
            ->check(CLI::IsMember({"strict", "loose"}));
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "machine"}));
        if (needs_partition)
            cmd->add_option("partition", o.partition_text,
                            "Partition, e.g. \"3^2 2 1^3\" or \"3,3,2,1,1,1\"")
                ->required();
        if (needs_rank)
            cmd->add_option("--max-rank", o.max_rank, "Rank bound (inclusive)")
                ->check(CLI::PositiveNumber)
                ->required();
    };

    auto* classify = app.add_subcommand("classify", "Validity, rank, rigidity");
    add_common(classify, true, false);
    auto* symbol = app.add_subcommand("symbol", "Compute the symbol");
    add_common(symbol, true, false);
    symbol->add_option("--method", o.method, "def, closed, legacy, or all")
        ->check(CLI::IsMember({"def", "closed", "legacy", "all"}));
    auto* enumerate = app.add_subcommand("enumerate", "List rigid partitions");
    add_common(enumerate, false, true);
    auto* verify = app.add_subcommand("verify",
                                      "Cross-check all methods and theorems");
    add_common(verify, false, true);
    auto* explain = app.add_subcommand("explain", "Block decomposition");
    add_common(explain, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (classify->parsed()) return run_classify(o);
        if (symbol->parsed()) return run_symbol(o);
        if (enumerate->parsed()) return run_enumerate(o);
        if (verify->parsed()) return run_verify(o);
        if (explain->parsed()) return run_explain(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return 0;
}
