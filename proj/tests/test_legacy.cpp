#include <doctest.h>

#include "springer/legacy.hpp"

using namespace springer;

TEST_CASE("legacy row table cases") {
    // 1^3 in B: single conjugate row of length 3, case (odd, odd)
    auto rows = legacy_rows(Partition({1, 1, 1}), Theory::B);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].row_length == 3);
    CHECK(rows[0].target_row == Row::Bottom);
    CHECK(rows[0].suffix_length == 1);

    // 1^4 in D: row length 4, case (even, odd)
    auto drows = legacy_rows(Partition({1, 1, 1, 1}), Theory::D);
    REQUIRE(drows.size() == 1);
    CHECK(drows[0].target_row == Row::Top);
    CHECK(drows[0].suffix_length == 2);
}

TEST_CASE("legacy formula examples") {
    auto b = symbol_legacy(Partition({1, 1, 1}), Theory::B);
    CHECK(b.top == std::vector<int>{0, 0});
    CHECK(b.bottom == std::vector<int>{1});

    auto d = symbol_legacy(Partition({1, 1, 1, 1}), Theory::D);
    CHECK(d.top == std::vector<int>{1, 1});
    CHECK(d.bottom == std::vector<int>{0, 0, 0});

    auto big = Partition::parse("9^4 8^2 7^3 6^4 5^4 4^2 3^4 2^2 1^4");
    CHECK(symbol_legacy(big, Theory::B) == compute_symbol(big, Theory::B));

    CHECK_THROWS(symbol_legacy(Partition({3, 1, 1}), Theory::B));
}

TEST_CASE("three-way equality on small sweeps") {
    for (Theory th : {Theory::B, Theory::C, Theory::D})
        for (int rank = 1; rank <= 8; ++rank)
            for (const auto& p : enumerate_rigid(rank, th))
                CHECK(symbol_legacy(p, th) == compute_symbol(p, th));
}
