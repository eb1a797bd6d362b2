#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dglpp/plane_partition.hpp"

using dglpp::Partition;
using dglpp::PlanePartition;

namespace {
PlanePartition make_pp(std::vector<std::vector<int>> rows) { return PlanePartition(std::move(rows)); }
}  // namespace

TEST_CASE("plane partition validation") {
    CHECK_NOTHROW(make_pp({{4, 4, 2}, {4, 2, 1}, {2, 2}}));
    CHECK_THROWS_AS(make_pp({{1, 2}}), std::invalid_argument);          // row increases
    CHECK_THROWS_AS(make_pp({{1}, {2}}), std::invalid_argument);        // column increases
    CHECK_THROWS_AS(make_pp({{2, 1}, {1, 1, 1}}), std::invalid_argument);  // ragged up
    CHECK_THROWS_AS(make_pp({{1, 0}}), std::invalid_argument);          // zero inside
    CHECK(PlanePartition(std::vector<std::vector<int>>{{1}, {}}).row_count() == 1);
    // trailing empty rows dropped
}

TEST_CASE("shape and entries") {
    PlanePartition p({{4, 4, 2}, {4, 2, 1}, {2, 2}});
    CHECK(p.shape() == Partition({3, 3, 2}));
    CHECK(p.entry(0, 0) == 4);
    CHECK(p.entry(2, 2) == 0);
    CHECK(p.entry(7, 7) == 0);
    CHECK(p.max_entry() == 4);
    CHECK(p.cell_count() == 8);
    CHECK(p.str() == "4,4,2/4,2,1/2,2");
    CHECK(PlanePartition{}.shape() == Partition{});
}

TEST_CASE("column content") {
    PlanePartition p({{4, 4, 2}, {4, 2, 1}, {2, 2}});
    CHECK(dglpp::column_content(p, 1) == 1);
    CHECK(dglpp::column_content(p, 2) == 3);
    CHECK(dglpp::column_content(p, 3) == 0);
    CHECK(dglpp::column_content(p, 4) == 2);

    PlanePartition ones({{1, 1, 1}});
    CHECK(dglpp::column_content(ones, 1) == 3);
    CHECK(dglpp::column_content(PlanePartition{}, 1) == 0);
    CHECK(dglpp::column_content(PlanePartition{}, 5) == 0);
}

TEST_CASE("filling enumeration, golden order") {
    auto single = dglpp::enumerate_plane_partitions(Partition({1}), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == make_pp({{1}}));

    auto row2 = dglpp::enumerate_plane_partitions(Partition({2}), 2);
    REQUIRE(row2.size() == 3);
    CHECK(row2[0] == make_pp({{2, 2}}));
    CHECK(row2[1] == make_pp({{2, 1}}));
    CHECK(row2[2] == make_pp({{1, 1}}));

    // The five fillings of (2,1) with entries <= 2, in the pinned DFS order.
    auto hook = dglpp::enumerate_plane_partitions(Partition({2, 1}), 2);
    REQUIRE(hook.size() == 5);
    CHECK(hook[0] == make_pp({{2, 2}, {2}}));
    CHECK(hook[1] == make_pp({{2, 2}, {1}}));
    CHECK(hook[2] == make_pp({{2, 1}, {2}}));
    CHECK(hook[3] == make_pp({{2, 1}, {1}}));
    CHECK(hook[4] == make_pp({{1, 1}, {1}}));

    // Zero-entry bound leaves only the empty shape.
    CHECK(dglpp::enumerate_plane_partitions(Partition{}, 3).size() == 1);
    CHECK(dglpp::enumerate_plane_partitions(Partition({1}), 0).empty());
}

TEST_CASE("bounded plane partition sets") {
    CHECK(dglpp::enumerate_pp_bounded(1, 1, 2).size() == 3);
    CHECK(dglpp::enumerate_pp_bounded(2, 1, 1).size() == 3);
    CHECK(dglpp::enumerate_pp_bounded(1, 2, 1).size() == 3);

    auto all = dglpp::enumerate_pp_bounded(2, 2, 2);
    std::set<PlanePartition> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());  // no duplicates
    for (const auto& p : all) {
        CHECK(p.row_count() <= 2);
        CHECK(p.max_entry() <= 2);
        CHECK(p.shape().first_part() <= 2);
    }
}

TEST_CASE("stream is monotone in the entry bound") {
    // The max_entry n-1 stream reappears as the tail of the n stream (the
    // first cell of any filling equals its max entry, and larger first
    // entries sort earlier in the fixed DFS order).
    for (const Partition& shape : {Partition({2, 1}), Partition({2, 2}), Partition({3, 1})}) {
        for (int n = 2; n <= 3; ++n) {
            auto smaller = dglpp::enumerate_plane_partitions(shape, n - 1);
            auto larger = dglpp::enumerate_plane_partitions(shape, n);
            REQUIRE(smaller.size() <= larger.size());
            std::size_t offset = larger.size() - smaller.size();
            for (std::size_t i = 0; i < smaller.size(); ++i)
                CHECK(larger[offset + i] == smaller[i]);
        }
    }
}

TEST_CASE("column weight degree bound") {
    // sum_l c_l(pi) <= |sh(pi)| over a whole stream.
    for_each_plane_partition(Partition({2, 2, 1}), 3, [](const PlanePartition& p) {
        int total = 0;
        for (int level = 1; level <= 3; ++level) total += dglpp::column_content(p, level);
        CHECK(total <= p.cell_count());
    });
}
