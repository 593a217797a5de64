#include <doctest.h>

#include <algorithm>

#include "springer/partition.hpp"

using namespace springer;

namespace {
const char* kBig = "9^4 8^2 7^3 6^4 5^4 4^2 3^4 2^2 1^4";
}

TEST_CASE("parse exponent and list forms") {
    auto p = Partition::parse(kBig);
    CHECK(p.total() == 145);
    CHECK(p.length() == 29);
    CHECK(p.largest() == 9);
    CHECK(Partition::parse("1,1,1") == Partition({1, 1, 1}));
    CHECK(Partition::parse("3 2 1") == Partition({3, 2, 1}));
    CHECK(Partition::parse("3^1 1") == Partition({3, 1}));
    CHECK_THROWS(Partition::parse("3,1,2"));
    CHECK_THROWS(Partition::parse("1 2"));       // values must decrease
    CHECK_THROWS(Partition::parse("2^0"));
    CHECK_THROWS(Partition::parse("0"));
    CHECK_THROWS(Partition::parse("-1"));
    CHECK_THROWS(Partition::parse(""));
    CHECK_THROWS(Partition::parse("x^2"));
}

TEST_CASE("render round trips") {
    for (const char* text : {kBig, "1,1,1", "5^2 3 1^3"}) {
        auto p = Partition::parse(text);
        CHECK(Partition::parse(p.render_exponent()) == p);
        CHECK(Partition::parse(p.render_list()) == p);
    }
    CHECK(Partition::parse(kBig).render_exponent() == kBig);
}

TEST_CASE("multiplicity and tail counts") {
    auto p = Partition::parse(kBig);
    CHECK(p.multiplicity(9) == 4);
    CHECK(p.multiplicity(4) == 2);
    CHECK(p.multiplicity(10) == 0);
    CHECK(p.tail_count(1) == 29);
    CHECK(p.tail_count(9) == 4);
    CHECK(p.tail_count(10) == 0);
    int total = 0;
    for (int j = 1; j <= p.largest(); ++j) total += j * p.multiplicity(j);
    CHECK(total == p.total());
}

TEST_CASE("validate per theory") {
    auto rep = validate(Partition::parse(kBig), Theory::B);
    CHECK(rep.valid);
    CHECK(rep.rank == 72);

    // large C example: total 122, so rank 61
    auto c = Partition::parse("8^4 7^2 6^3 5^4 4^4 3^4 2^4 1^2");
    auto crep = validate(c, Theory::C);
    CHECK(crep.valid);
    CHECK(c.total() == 122);
    CHECK(crep.rank == 61);

    auto bad = validate(Partition({2, 1}), Theory::B);
    CHECK_FALSE(bad.valid);
    CHECK(bad.violation.find("even part 2") != std::string::npos);
    CHECK_FALSE(validate(Partition({2, 1}), Theory::C).valid);  // total odd
    CHECK(validate(Partition({1, 1}), Theory::C).valid);
    CHECK(validate(Partition({1, 1, 1, 1}), Theory::D).valid);
}

TEST_CASE("rigidity rules") {
    CHECK(is_rigid(Partition::parse(kBig), Theory::B));
    CHECK_FALSE(is_rigid(Partition({1, 1}), Theory::D));       // odd part twice
    CHECK_FALSE(is_rigid(Partition({3, 1, 1}), Theory::B));    // gap 3 -> 1
    CHECK_FALSE(is_rigid(Partition({2, 2}), Theory::C));       // even part twice
    CHECK_FALSE(is_rigid(Partition({3}), Theory::B, GapConvention::Strict));
    CHECK(is_rigid(Partition({3}), Theory::B, GapConvention::Loose));
    CHECK_THROWS(is_rigid(Partition({2, 1}), Theory::B));
}

TEST_CASE("conjugate") {
    CHECK(Partition({3, 2}).conjugate() == Partition({2, 2, 1}));
    CHECK(Partition({1, 1, 1}).conjugate() == Partition({3}));
    auto big = Partition::parse(kBig);
    CHECK(big.conjugate().largest() == 29);
    CHECK(big.conjugate().length() == 9);
    CHECK(big.conjugate().conjugate() == big);
}

TEST_CASE("padding") {
    auto b = pad(Partition({1, 1, 1}), Theory::B);
    CHECK(b.values == std::vector<int>{1, 1, 1});
    CHECK(b.padded_length() == 3);
    auto c = pad(Partition({1, 1}), Theory::C);
    CHECK(c.values == std::vector<int>{1, 1});  // even length: no pad
    auto d = pad(Partition({1, 1, 1, 1}), Theory::D);
    CHECK(d.values == std::vector<int>{1, 1, 1, 1, 0});
    CHECK(d.padded_length() == 5);
    CHECK(d.source_length == 4);
    CHECK_THROWS(pad(Partition({2, 1}), Theory::B));
}

TEST_CASE("enumeration matches brute force oracles") {
    CHECK(enumerate_rigid(1, Theory::B) ==
          std::vector<Partition>{Partition({1, 1, 1})});
    CHECK(enumerate_rigid(1, Theory::C) ==
          std::vector<Partition>{Partition({1, 1})});
    CHECK(enumerate_rigid(2, Theory::D) ==
          std::vector<Partition>{Partition({1, 1, 1, 1})});

    // canonical order, duplicate-free, all pass the filters
    for (Theory th : {Theory::B, Theory::C, Theory::D}) {
        auto rigid = enumerate_rigid(6, th);
        CHECK(!rigid.empty());
        for (size_t i = 0; i < rigid.size(); ++i) {
            CHECK(validate(rigid[i], th).valid);
            CHECK(is_rigid(rigid[i], th));
            if (i > 0) {
                auto a = rigid[i - 1].parts();
                auto b = rigid[i].parts();
                CHECK(std::lexicographical_compare(b.begin(), b.end(),
                                                   a.begin(), a.end()));
            }
        }
    }
}

TEST_CASE("valid B partitions have odd length") {
    for (int rank = 1; rank <= 8; ++rank)
        for (const auto& p : enumerate_valid(rank, Theory::B))
            CHECK(p.length() % 2 == 1);
}
