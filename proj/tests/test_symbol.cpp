#include <doctest.h>

#include <vector>

#include "springer/partition.hpp"
#include "springer/symbol.hpp"

using namespace springer;

namespace {
const char* kBig = "9^4 8^2 7^3 6^4 5^4 4^2 3^4 2^2 1^4";
const std::vector<int> kBigTop{0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4};
const std::vector<int> kBigBottom{1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 5, 5, 5};
}  // namespace

TEST_CASE("symbol by definition: hand-checked examples") {
    auto b = compute_symbol(Partition({1, 1, 1}), Theory::B);
    CHECK(b.top == std::vector<int>{0, 0});
    CHECK(b.bottom == std::vector<int>{1});

    auto d = compute_symbol(Partition({1, 1, 1, 1}), Theory::D);
    CHECK(d.top == std::vector<int>{1, 1});
    CHECK(d.bottom == std::vector<int>{0, 0, 0});

    auto c = compute_symbol(Partition({1, 1}), Theory::C);
    CHECK(c.top == std::vector<int>{0});
    CHECK(c.bottom == std::vector<int>{1});
}

TEST_CASE("symbol by definition: large example") {
    auto s = compute_symbol(Partition::parse(kBig), Theory::B);
    CHECK(s.top == kBigTop);
    CHECK(s.bottom == kBigBottom);
}

TEST_CASE("shape invariant") {
    CHECK(symbol_shape(3, Theory::B) == std::pair{2, 1});
    CHECK(symbol_shape(2, Theory::C) == std::pair{1, 1});
    CHECK(symbol_shape(4, Theory::D) == std::pair{2, 3});
    CHECK(symbol_shape(29, Theory::B) == std::pair{15, 14});
    for (Theory th : {Theory::B, Theory::C, Theory::D})
        for (int rank = 1; rank <= 6; ++rank)
            for (const auto& p : enumerate_valid(rank, th)) {
                auto s = compute_symbol(p, th);
                auto [plen, qlen] = symbol_shape(p.length(), th);
                CHECK(static_cast<int>(s.top.size()) == plen);
                CHECK(static_cast<int>(s.bottom.size()) == qlen);
                CHECK(plen + qlen == pad(p, th).padded_length());
            }
}

TEST_CASE("contribution map examples") {
    // (1,1,1) in B: v = (3,2,1)
    auto cm = contribution_map(Partition({1, 1, 1}), Theory::B);
    REQUIRE(cm.entries.size() == 3);
    CHECK(cm.entries[0].slot == SlotRef{Row::Top, 1});
    CHECK(cm.entries[0].value == 0);
    CHECK(cm.entries[1].slot == SlotRef{Row::Bottom, 0});
    CHECK(cm.entries[1].value == 1);
    CHECK(cm.entries[2].slot == SlotRef{Row::Top, 0});
    CHECK(cm.entries[2].value == 0);

    auto cmc = contribution_map(Partition({1, 1}), Theory::C);
    CHECK(cmc.entries[0].slot == SlotRef{Row::Bottom, 0});
    CHECK(cmc.entries[0].value == 1);
    CHECK(cmc.entries[1].slot == SlotRef{Row::Top, 0});
    CHECK(cmc.entries[1].value == 0);
}

TEST_CASE("contribution map is a bijection reproducing the symbol") {
    for (Theory th : {Theory::B, Theory::C, Theory::D})
        for (int rank = 1; rank <= 6; ++rank)
            for (const auto& p : enumerate_valid(rank, th)) {
                auto s = compute_symbol(p, th);
                auto cm = contribution_map(p, th);
                REQUIRE(cm.entries.size() == s.top.size() + s.bottom.size());
                std::vector<int> top(s.top.size(), -1), bottom(s.bottom.size(), -1);
                for (const auto& e : cm.entries) {
                    auto& row = e.slot.row == Row::Top ? top : bottom;
                    REQUIRE(e.slot.index >= 0);
                    REQUIRE(e.slot.index < static_cast<int>(row.size()));
                    REQUIRE(row[static_cast<size_t>(e.slot.index)] == -1);
                    row[static_cast<size_t>(e.slot.index)] = e.value;
                }
                CHECK(top == s.top);
                CHECK(bottom == s.bottom);
            }
}

TEST_CASE("normalize") {
    Symbol s;
    s.theory = Theory::B;
    s.top = {0, 0};
    s.bottom = {1};
    CHECK(normalize(s) == s);  // no all-zero leading column

    Symbol t;
    t.theory = Theory::D;
    t.top = {0, 0, 1};
    t.bottom = {0, 1};
    auto n = normalize(t);
    CHECK(n.top == std::vector<int>{0, 1});
    CHECK(n.bottom == std::vector<int>{1});
    CHECK(normalize(n) == n);  // idempotent

    for (Theory th : {Theory::B, Theory::C, Theory::D})
        for (const auto& p : enumerate_valid(5, th)) {
            auto sym = compute_symbol(p, th);
            CHECK(normalize(normalize(sym)) == normalize(sym));
        }
}

TEST_CASE("render text form") {
    auto s = compute_symbol(Partition({1, 1, 1}), Theory::B);
    CHECK(render(s) == "(0 0 / 1)");
    auto big = compute_symbol(Partition::parse(kBig), Theory::B);
    CHECK(big.top.size() == 15);
    CHECK(big.bottom.size() == 14);
}

TEST_CASE("machine form round trip is bit-exact") {
    for (Theory th : {Theory::B, Theory::C, Theory::D})
        for (const auto& p : enumerate_valid(5, th)) {
            auto s = compute_symbol(p, th);
            auto text = to_machine(s, p);
            auto [s2, p2] = from_machine(text);
            CHECK(s2 == s);
            CHECK(p2 == p);
            CHECK(to_machine(s2, p2) == text);
        }
}
