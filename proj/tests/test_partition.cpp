#include <doctest.h>

#include <set>
#include <stdexcept>

#include "dglpp/partition.hpp"
#include "dglpp/rational.hpp"

using dglpp::Integer;
using dglpp::Partition;

TEST_CASE("partition validation") {
    CHECK_NOTHROW(Partition({3, 2, 2, 0, 0}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("partition parse and print") {
    CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("2,0") == Partition({2, 0}));
    CHECK(Partition({3, 2, 1}).str() == "3,2,1");
    CHECK(Partition{}.str() == "0");
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
}

TEST_CASE("declared length matters for keys") {
    CHECK(Partition({1}) != Partition({1, 0}));
    CHECK(Partition({1}).trimmed() == Partition({1, 0}).trimmed());
    CHECK(Partition({1, 0}).padded(3) == Partition({1, 0, 0}));
    CHECK(Partition({2, 1, 0}).padded(2) == Partition({2, 1}));
    CHECK_THROWS_AS(Partition({2, 1, 1}).padded(2), std::invalid_argument);
    CHECK(Partition({3, 1}).weight() == 4);
    CHECK(Partition({3, 1}).contains(Partition({2, 1})));
    CHECK(!Partition({3, 1}).contains(Partition({3, 2})));
    CHECK(!Partition({3, 1}).contains(Partition({2, 1, 1})));  // third part exceeds implicit 0
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
    CHECK(conjugate(Partition({3})) == Partition({1, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({4, 4, 2})) == Partition({3, 3, 2, 2}));
    // Involution up to trailing zeros.
    for (const Partition& p : dglpp::enumerate_partitions(3, 3))
        CHECK(conjugate(conjugate(p)) == p.trimmed());
}

TEST_CASE("enumerate_partitions order and count") {
    auto chain = dglpp::enumerate_partitions(1, 2);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == Partition({2}));
    CHECK(chain[1] == Partition({1}));
    CHECK(chain[2] == Partition({0}));

    auto two = dglpp::enumerate_partitions(2, 1);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == Partition({1, 1}));
    CHECK(two[1] == Partition({1, 0}));
    CHECK(two[2] == Partition({0, 0}));

    CHECK(dglpp::enumerate_partitions(2, 2).size() == 6);  // binomial(4, 2)
}

TEST_CASE("partition stream properties") {
    // No duplicates, valid invariant, lexicographically decreasing, counted
    // by binomial(max_part + m, m).
    for (int m = 1; m <= 3; ++m) {
        for (int max_part = 0; max_part <= 4; ++max_part) {
            auto stream = dglpp::enumerate_partitions(m, max_part);
            CHECK(Integer(static_cast<long>(stream.size())) ==
                  Integer::binomial(static_cast<unsigned long>(max_part + m),
                                    static_cast<unsigned long>(m)));
            std::set<Partition> seen;
            for (std::size_t i = 0; i < stream.size(); ++i) {
                CHECK(stream[i].length() == static_cast<std::size_t>(m));
                CHECK(stream[i].first_part() <= max_part);
                CHECK(seen.insert(stream[i]).second);
                if (i + 1 < stream.size()) CHECK(stream[i + 1] < stream[i]);
            }
        }
    }
}

TEST_CASE("enumerate_subpartitions") {
    auto subs = dglpp::enumerate_subpartitions(Partition({2, 1}));
    REQUIRE(subs.size() == 5);
    CHECK(subs[0] == Partition({2, 1}));
    CHECK(subs[1] == Partition({2}));
    CHECK(subs[2] == Partition({1, 1}));
    CHECK(subs[3] == Partition({1}));
    CHECK(subs[4] == Partition{});
    CHECK(dglpp::enumerate_subpartitions(Partition{}).size() == 1);
}
