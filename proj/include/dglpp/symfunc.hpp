#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dglpp/partition.hpp"
#include "dglpp/plane_partition.hpp"
#include "dglpp/rational.hpp"

namespace dglpp {

// Evaluation point (1^ones, q_1, ..., q_n). The multiplicity of the leading
// 1s is kept symbolic so row-dependent paddings in the Jacobi-Trudi
// determinants cost nothing.
struct EvalPoint {
    int ones = 0;
    std::vector<Rational> qs;

    EvalPoint() = default;
    EvalPoint(int ones_count, std::vector<Rational> q);
    explicit EvalPoint(std::vector<Rational> q) : EvalPoint(0, std::move(q)) {}

    std::size_t var_count() const { return static_cast<std::size_t>(ones) + qs.size(); }
    // Explicit variable list with the 1s materialized.
    std::vector<Rational> materialize() const;

    // "1^2;1/2,1/3"; the ones prefix is optional ("1/2,1/3").
    static EvalPoint parse(std::string_view text);
    std::string str() const;
};

// Comma-separated rationals ("1/2,1/3"); empty string means no variables.
std::vector<Rational> parse_q_list(std::string_view text);

// Complete homogeneous symmetric polynomial h_k at pt; h_0 = 1, h_k = 0 for
// k < 0. Coefficient extraction from prod_i 1/(1 - x_i t) truncated at t^k.
Rational h_eval(long k, const EvalPoint& pt);

// Elementary symmetric polynomial e_k at pt; e_0 = 1, e_k = 0 for k < 0 or
// k > number of variables.
Rational e_eval(long k, const EvalPoint& pt);

// Schur polynomial via the Jacobi-Trudi determinant det[h_{l_i - i + j}].
Rational schur_eval(const Partition& shape, const EvalPoint& pt);

// Dual Grothendieck polynomial g_lambda, summed directly over all fillings
// of `shape` with entries at most n = #variables, each filling weighted by
// prod_l x_l^{c_l}. Exponential in |shape|; this is the reference oracle.
Rational g_eval_combinatorial(const Partition& shape, std::span<const Rational> xs);
Rational g_eval_combinatorial(const Partition& shape, const EvalPoint& pt);

// g_lambda via det[h_{l_i - i + j}(1^{i-1}, q_1, ..., q_n)]_{i,j=1}^{m};
// pt's own ones are prepended on top of the row-dependent 1s.
Rational g_eval_det_h(const Partition& shape, int m, const EvalPoint& pt);

// g_lambda via det[e_{l'_i - i + j}(1^{l'_i - 1}, q_1, ..., q_n)]_{i,j=1}^{l_1}.
Rational g_eval_det_e(const Partition& shape, const EvalPoint& pt);

// Sum of g_mu over all mu contained in `shape`; by the branching relation
// this equals g_shape(1, q_1, ..., q_n), which tests check rather than assume.
Rational g_branching_sum(const Partition& shape, std::span<const Rational> qs);

// Exact determinant: denominators cleared row by row, then fraction-free
// (Bareiss) elimination over integers. Singular matrices return 0.
Rational rational_det(std::vector<std::vector<Rational>> a);

// Coefficient of x^k of the unique polynomial interpolating (points[i],
// values[i]); exact Lagrange expansion. Points must be distinct.
Rational interpolate_coefficient(std::span<const Rational> points,
                                 std::span<const Rational> values, std::size_t k);

}  // namespace dglpp
