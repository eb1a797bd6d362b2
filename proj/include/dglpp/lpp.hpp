#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dglpp/distribution.hpp"
#include "dglpp/matrix.hpp"
#include "dglpp/partition.hpp"
#include "dglpp/rational.hpp"
#include "dglpp/symfunc.hpp"

namespace dglpp {

using WeightMatrix = IntMatrix;

// Geometric weight model: w_{ij} ~ Geom(q_j) independently, with the
// parameter attached to the column, Prob(w = k) = (1 - q_j) q_j^k on k >= 0.
struct GeometricParams {
    int m = 0;
    int n = 0;
    std::vector<Rational> q;

    GeometricParams(int rows, int cols, std::vector<Rational> qs);
};

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000ULL;

// Deterministic function of (seed, stream): same pair, same matrix. Cells
// are drawn row-major by inversion, k = floor(log U / log q), U in (0,1).
WeightMatrix sample_weights(const GeometricParams& params, std::uint64_t seed,
                            std::uint64_t stream);

// Full percolation matrix: G(i,j) = w(i,j) + max(G(i-1,j), G(i,j-1)).
IntMatrix last_passage(const WeightMatrix& w);

// (G(m,n), G(m-1,n), ..., G(1,n)) down column `col` (0-based); weakly
// decreasing, hence a partition.
Partition column_vector(const IntMatrix& g, int col);

// Closed form Prob(G(m,n) = l_1, ..., G(1,n) = l_m)
//   = prod_i (1 - q_i)^m * g_lambda(q_1, ..., q_n).
Rational theorem_distribution(const GeometricParams& params, const Partition& shape);

// Closed form Prob(G(m,n) <= l_1, ..., G(1,n) <= l_m)
//   = prod_i (1 - q_i)^m * g_lambda(1, q_1, ..., q_n).
Rational cdf_distribution(const GeometricParams& params, const Partition& shape);

// Prob(G(m,n) <= a) = prod_i (1 - q_i)^m * s_{(a^m)}(1^m, q_1, ..., q_n).
Rational single_point_cdf(int m, int n, std::span<const Rational> qs, int a);

// Prob(lambda_k <= a) under the column law = Prob(G(m-k+1, n) <= a);
// k is 1-based.
Rational marginal_cdf(const GeometricParams& params, int k, int a);

// Every m x n matrix with entries in [0, cap], in odometer order.
void for_each_weight_matrix(int m, int n, int cap,
                            const std::function<void(const WeightMatrix&)>& fn);

// Exhaustive truncated oracle: enumerates all (cap+1)^(mn) weight matrices,
// accumulating exact probability onto the column vector of each. Records
// the tail bound m * sum_j q_j^(cap+1). Throws when the enumeration exceeds
// `budget` matrices.
JointDistribution oracle_distribution(const GeometricParams& params, int cap,
                                      std::uint64_t budget = kDefaultOracleBudget);

// Empirical law over `samples` draws. Per-sample stream index = sample
// index, so the result is a deterministic function of (seed, samples)
// independent of the worker count.
JointDistribution monte_carlo_distribution(const GeometricParams& params,
                                           std::uint64_t samples, std::uint64_t seed,
                                           int workers = 1);

// Closed-form law restricted to lambda_1 <= max_part.
JointDistribution closed_form_distribution(const GeometricParams& params, int max_part);

}  // namespace dglpp
