#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dglpp/distribution.hpp"
#include "dglpp/partition.hpp"
#include "dglpp/plane_partition.hpp"
#include "dglpp/rational.hpp"

namespace dglpp {

inline constexpr std::uint64_t kDefaultWordBudget = 100'000'000ULL;

// Plane partition whose entries are exactly the values [1, content_n], each
// value confined to a single column of the tableau.
struct StrictTableau {
    PlanePartition tableau;
    int content_n = 0;

    StrictTableau(PlanePartition pp, int n);
};

// All strict tableaux of `shape` with content [1, n]. Empty for n > |shape|
// (each value needs its own cell) and for n < longest column (a column's
// entries are distinct).
std::vector<StrictTableau> enumerate_strict_tableaux(const Partition& shape, int n);
long f_lambda(const Partition& shape, int n);

// P_gpl(lambda) = f_lambda(n) / m^n; requires lambda inside the (n^m) box.
Rational gpl_measure(int m, int n, const Partition& shape);

// Word of length n over the alphabet [1, m].
struct Word {
    std::vector<int> letters;

    Word(std::vector<int> ls, int m);
};

// (L_m, ..., L_1): L_i is the longest weakly increasing subsequence using
// only the letters {m-i+1, ..., m}. The vector is weakly decreasing.
Partition word_L_stats(const Word& w, int m);

// Exact law of word_L_stats over all m^n words, each weighted 1/m^n.
JointDistribution word_distribution_exhaustive(int m, int n,
                                               std::uint64_t budget = kDefaultWordBudget);

// One row per requested n: exact P_{m,n}(lambda) at q_i = gamma/n versus the
// truncated limit series e^{-m gamma} sum_k f_lambda(k) (m gamma)^k / (k! m^k).
struct ConvergenceTable {
    int m = 0;
    Partition shape;
    Rational gamma;
    int truncation = 0;  // series index beyond which f_lambda vanishes

    struct Row {
        int n;
        double lhs;
        double rhs;
        double abs_diff;
    };
    std::vector<Row> rows;

    // "n,lhs,rhs,abs_diff" lines after a '#' header noting the truncation.
    std::string csv() const;
};

ConvergenceTable plancherel_limit_check(int m, const Partition& shape, const Rational& gamma,
                                        const std::vector<int>& n_values);

// lambda_m marginal of the exhaustive word law versus Binomial(n, 1/m).
struct BinomialReport {
    int m = 0;
    int n = 0;
    std::map<int, Rational> marginal;
    std::map<int, Rational> binomial;
    bool exact_match = false;
};

BinomialReport lambda_m_binomial_check(int m, int n, std::uint64_t budget = kDefaultWordBudget);

}  // namespace dglpp
