#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dglpp/descent.hpp"
#include "dglpp/lpp.hpp"

using dglpp::DescentMatrix;
using dglpp::IntMatrix;
using dglpp::Partition;
using dglpp::PlanePartition;

namespace {

PlanePartition make_pp(std::vector<std::vector<int>> rows) { return PlanePartition(std::move(rows)); }

const PlanePartition kExample({{4, 4, 2}, {4, 2, 1}, {2, 2}});
const char* kExampleMatrix = "0,1,0,1;1,0,0,1;0,2,0,0";

// Independent oracle for the max-path shape: enumerate every down/right path
// from (k, 0) to the bottom-right corner and take the best sum.
long best_path_sum(const IntMatrix& d, int i, int j) {
    long here = d.at(i, j);
    if (i == d.rows() - 1 && j == d.cols() - 1) return here;
    long best = -1;
    if (i + 1 < d.rows()) best = std::max(best, best_path_sum(d, i + 1, j));
    if (j + 1 < d.cols()) best = std::max(best, best_path_sum(d, i, j + 1));
    return here + best;
}

Partition shape_oracle(const IntMatrix& d) {
    std::vector<int> parts;
    for (int k = 0; k < d.rows(); ++k)
        parts.push_back(static_cast<int>(best_path_sum(d, k, 0)));
    return Partition(parts);
}

}  // namespace

TEST_CASE("matrix text form") {
    IntMatrix d = IntMatrix::parse(kExampleMatrix);
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 4);
    CHECK(d.at(2, 1) == 2);
    CHECK(d.str() == kExampleMatrix);
    CHECK_THROWS_AS(IntMatrix::parse("1,2;3"), std::invalid_argument);
    CHECK_THROWS_AS(IntMatrix::parse("1,x"), std::invalid_argument);
}

TEST_CASE("descent level sets match the worked example") {
    // Paper coordinates (row 3, level 2) -> columns {1,2}; 0-based {0,1}.
    CHECK(dglpp::descent_level_set(kExample, 2, 2) == std::vector<int>{0, 1});
    // (row 1, level 4) -> only column 2 (0-based 1): the 4 at (1,1) sits on
    // another 4, so it is not a descent.
    CHECK(dglpp::descent_level_set(kExample, 0, 4) == std::vector<int>{1});
    CHECK(dglpp::descent_level_set(kExample, 0, 9).empty());
    CHECK(dglpp::descent_level_set(kExample, 7, 1).empty());
}

TEST_CASE("phi on the worked example") {
    CHECK(dglpp::phi(kExample, 3, 4) == IntMatrix::parse(kExampleMatrix));
    CHECK(dglpp::phi(PlanePartition{}, 2, 3) == IntMatrix(2, 3));
    DescentMatrix single = dglpp::phi(make_pp({{3}}), 1, 4);
    CHECK(single == IntMatrix::parse("0,0,1,0"));
    CHECK_THROWS_AS(dglpp::phi(kExample, 2, 4), std::invalid_argument);  // too many rows
    CHECK_THROWS_AS(dglpp::phi(kExample, 3, 3), std::invalid_argument);  // entry exceeds n
}

TEST_CASE("phi_inverse on the worked example") {
    CHECK(dglpp::phi_inverse(IntMatrix::parse(kExampleMatrix)) == kExample);
    CHECK(dglpp::phi_inverse(IntMatrix(3, 3)) == PlanePartition{});
    // A 1 x n row (a_1, ..., a_n) rebuilds the single row with a_l copies of
    // each level l; certified through the phi roundtrip.
    IntMatrix row = IntMatrix::parse("2,0,1");
    PlanePartition p = dglpp::phi_inverse(row);
    CHECK(p == make_pp({{3, 1, 1}}));
    CHECK(dglpp::phi(p, 1, 3) == row);
}

TEST_CASE("max-path shape: worked example and DP-vs-oracle") {
    IntMatrix d = IntMatrix::parse(kExampleMatrix);
    CHECK(dglpp::shape_via_max_paths(d) == Partition({3, 3, 2}));
    CHECK(dglpp::shape_via_max_paths(IntMatrix(2, 2)) == Partition({0, 0}));
    CHECK(dglpp::shape_via_max_paths(IntMatrix(1, 1, {5})) == Partition({5}));
    CHECK(shape_oracle(d) == Partition({3, 3, 2}));

    dglpp::for_each_weight_matrix(2, 3, 2, [](const IntMatrix& m) {
        CHECK(dglpp::shape_via_max_paths(m) == shape_oracle(m));
    });
}

TEST_CASE("bijection roundtrips on small sets") {
    for (const PlanePartition& p : dglpp::enumerate_pp_bounded(2, 2, 2)) {
        DescentMatrix d = dglpp::phi(p, 2, 2);
        CHECK(dglpp::phi_inverse(d) == p);
        CHECK(dglpp::shape_via_max_paths(d) == p.shape().padded(2));
        for (int level = 1; level <= 2; ++level) {
            int sum = d.at(0, level - 1) + d.at(1, level - 1);
            CHECK(sum == dglpp::column_content(p, level));
        }
    }
    dglpp::for_each_weight_matrix(2, 2, 2, [](const IntMatrix& d) {
        CHECK(dglpp::phi(dglpp::phi_inverse(d), 2, 2) == d);
    });
}

TEST_CASE("roundtrip with larger entries and rectangular dimensions") {
    dglpp::for_each_weight_matrix(2, 3, 3, [](const IntMatrix& d) {
        CHECK(dglpp::phi(dglpp::phi_inverse(d), 2, 3) == d);
    });
    dglpp::for_each_weight_matrix(3, 2, 3, [](const IntMatrix& d) {
        PlanePartition p = dglpp::phi_inverse(d);
        CHECK(dglpp::phi(p, 3, 2) == d);
        CHECK(dglpp::shape_via_max_paths(d) == p.shape().padded(3));
    });
}

TEST_CASE("trailing zero columns do not change the reconstruction") {
    IntMatrix narrow = IntMatrix::parse(kExampleMatrix);
    IntMatrix wide(3, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) wide.at(i, j) = narrow.at(i, j);
    CHECK(dglpp::phi_inverse(wide) == dglpp::phi_inverse(narrow));
}

TEST_CASE("max-path output is a partition") {
    dglpp::for_each_weight_matrix(3, 2, 1, [](const IntMatrix& d) {
        CHECK_NOTHROW(dglpp::shape_via_max_paths(d));  // ctor enforces weak decrease
    });
}
