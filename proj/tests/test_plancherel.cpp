#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dglpp/plancherel.hpp"

using dglpp::Partition;
using dglpp::PlanePartition;
using dglpp::Rational;
using dglpp::Word;

namespace {

PlanePartition make_pp(std::vector<std::vector<int>> rows) { return PlanePartition(std::move(rows)); }

// Bitmask reference for the longest weakly increasing subsequence over a
// restricted alphabet; n <= 12 or so.
int lwis_oracle(const std::vector<int>& letters, int lo) {
    const int n = static_cast<int>(letters.size());
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int prev = 0, len = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            if (letters[static_cast<std::size_t>(i)] < lo ||
                letters[static_cast<std::size_t>(i)] < prev)
                ok = false;
            else {
                prev = letters[static_cast<std::size_t>(i)];
                ++len;
            }
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

}  // namespace

TEST_CASE("strict tableau examples") {
    auto both_one = dglpp::enumerate_strict_tableaux(Partition({1, 1}), 1);
    REQUIRE(both_one.size() == 1);
    CHECK(both_one[0].tableau == make_pp({{1}, {1}}));

    auto row = dglpp::enumerate_strict_tableaux(Partition({2}), 2);
    REQUIRE(row.size() == 1);
    CHECK(row[0].tableau == make_pp({{2, 1}}));  // (1,1) repeats value 1 across columns

    CHECK(dglpp::enumerate_strict_tableaux(Partition({1}), 2).empty());
    CHECK(dglpp::f_lambda(Partition{}, 0) == 1);
    CHECK(dglpp::f_lambda(Partition{}, 1) == 0);
    CHECK(dglpp::f_lambda(Partition({1}), 1) == 1);

    CHECK_THROWS_AS(dglpp::StrictTableau(make_pp({{1, 1}}), 1), std::invalid_argument);
    CHECK_NOTHROW(dglpp::StrictTableau(make_pp({{2, 1}}), 2));
}

TEST_CASE("gpl measure") {
    for (const Partition& lam :
         {Partition({2}), Partition({1, 1}), Partition({2, 1}), Partition({2, 2})})
        CHECK(dglpp::gpl_measure(2, 2, lam) == Rational(1, 4));

    CHECK(dglpp::gpl_measure(1, 4, Partition({4})) == Rational(1));
    CHECK(dglpp::gpl_measure(2, 1, Partition({1})) == Rational(1, 2));
    CHECK(dglpp::gpl_measure(2, 1, Partition({1, 1})) == Rational(1, 2));
    CHECK_THROWS_AS(dglpp::gpl_measure(2, 2, Partition({3})), std::invalid_argument);

    // Total mass one over the (n^m) box.
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            Rational total(0);
            for (const Partition& lam :
                 dglpp::enumerate_subpartitions(Partition(std::vector<int>(m, n))))
                total += dglpp::gpl_measure(m, n, lam);
            CHECK(total == Rational(1));
        }
    }
}

TEST_CASE("word L statistics") {
    CHECK(dglpp::word_L_stats(Word({2, 1, 2}, 2), 2) == Partition({2, 2}));
    CHECK(dglpp::word_L_stats(Word({2, 1}, 2), 2) == Partition({1, 1}));
    CHECK(dglpp::word_L_stats(Word({1, 1, 1, 1}, 2), 2) == Partition({4, 0}));
    CHECK_THROWS_AS(Word({0, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Word({3}, 2), std::invalid_argument);

    // Against the bitmask oracle over every word, m = 3, n <= 4.
    const int m = 3;
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> letters(static_cast<std::size_t>(n), 1);
        for (;;) {
            Partition lam = dglpp::word_L_stats(Word(letters, m), m);
            for (int i = 1; i <= m; ++i)
                CHECK(lam[static_cast<std::size_t>(m - i)] == lwis_oracle(letters, m - i + 1));
            int count_top = 0;
            for (int c : letters)
                if (c == m) ++count_top;
            CHECK(lam[static_cast<std::size_t>(m - 1)] == count_top);  // L_1 counts the m's
            CHECK(lam.first_part() <= n);

            int pos = n - 1;
            while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == m) {
                letters[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++letters[static_cast<std::size_t>(pos)];
        }
    }
}

TEST_CASE("word law equals the gpl measure") {
    auto dist = dglpp::word_distribution_exhaustive(2, 2);
    REQUIRE(dist.mass.size() == 4);
    CHECK(dist.mass_at(Partition({2, 0})) == Rational(1, 4));
    CHECK(dist.mass_at(Partition({2, 1})) == Rational(1, 4));
    CHECK(dist.mass_at(Partition({1, 1})) == Rational(1, 4));
    CHECK(dist.mass_at(Partition({2, 2})) == Rational(1, 4));

    CHECK(dglpp::word_distribution_exhaustive(1, 3).mass_at(Partition({3})) == Rational(1));

    auto half = dglpp::word_distribution_exhaustive(2, 1);
    CHECK(half.mass_at(Partition({1, 0})) == Rational(1, 2));
    CHECK(half.mass_at(Partition({1, 1})) == Rational(1, 2));

    for (auto [m, n] : {std::pair<int, int>{2, 3}, {3, 2}}) {
        auto words = dglpp::word_distribution_exhaustive(m, n);
        Rational total(0);
        for (const Partition& lam :
             dglpp::enumerate_subpartitions(Partition(std::vector<int>(m, n)))) {
            CHECK(words.mass_at(lam) == dglpp::gpl_measure(m, n, lam));
            total += words.mass_at(lam);
        }
        CHECK(total == Rational(1));
    }

    CHECK_THROWS_AS(dglpp::word_distribution_exhaustive(2, 40), std::runtime_error);
}

TEST_CASE("last part is binomial") {
    auto report = dglpp::lambda_m_binomial_check(2, 2);
    CHECK(report.exact_match);
    CHECK(report.marginal.at(0) == Rational(1, 4));
    CHECK(report.marginal.at(1) == Rational(1, 2));
    CHECK(report.marginal.at(2) == Rational(1, 4));

    auto trivial = dglpp::lambda_m_binomial_check(1, 4);
    CHECK(trivial.exact_match);
    CHECK(trivial.marginal.at(4) == Rational(1));

    auto three = dglpp::lambda_m_binomial_check(3, 2);
    CHECK(three.exact_match);
    CHECK(three.marginal.at(0) == Rational(4, 9));
    CHECK(three.marginal.at(1) == Rational(4, 9));
    CHECK(three.marginal.at(2) == Rational(1, 9));
}

TEST_CASE("plancherel limit table") {
    // Empty shape: the right side is exactly e^{-m gamma}, and the left side
    // climbs toward it.
    auto empty = dglpp::plancherel_limit_check(2, Partition{}, Rational(1), {10, 20, 40, 80});
    CHECK(empty.truncation == 0);
    CHECK(empty.rows.size() == 4);
    CHECK(std::fabs(empty.rows[0].rhs - std::exp(-2.0)) < 1e-12);
    for (std::size_t i = 0; i + 1 < empty.rows.size(); ++i)
        CHECK(empty.rows[i + 1].abs_diff < empty.rows[i].abs_diff);

    // Single box, one letter: the series collapses to e^{-gamma}.
    auto one = dglpp::plancherel_limit_check(1, Partition({1}), Rational(1), {10, 20});
    CHECK(std::fabs(one.rows[0].rhs - std::exp(-1.0)) < 1e-12);

    auto col = dglpp::plancherel_limit_check(2, Partition({1, 1}), Rational(1), {10, 20, 40, 80});
    CHECK(col.truncation == 2);
    CHECK(std::fabs(col.rows[0].rhs - 1.5 * std::exp(-2.0)) < 1e-12);
    for (std::size_t i = 0; i + 1 < col.rows.size(); ++i)
        CHECK(col.rows[i + 1].abs_diff < col.rows[i].abs_diff);

    std::string csv = col.csv();
    CHECK(csv.find("n,lhs,rhs,abs_diff") != std::string::npos);
    CHECK(csv.find("truncated at k=2") != std::string::npos);

    CHECK_THROWS_AS(dglpp::plancherel_limit_check(2, Partition{}, Rational(0), {10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dglpp::plancherel_limit_check(2, Partition{}, Rational(12), {10, 20}),
                    std::invalid_argument);
}
