#include "dglpp/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace dglpp {

EvalPoint::EvalPoint(int ones_count, std::vector<Rational> q)
    : ones(ones_count), qs(std::move(q)) {
    if (ones < 0) throw std::invalid_argument("EvalPoint: negative ones multiplicity");
}

std::vector<Rational> EvalPoint::materialize() const {
    std::vector<Rational> xs(static_cast<std::size_t>(ones), Rational(1));
    xs.insert(xs.end(), qs.begin(), qs.end());
    return xs;
}

std::vector<Rational> parse_q_list(std::string_view text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string_view tok = text.substr(
            pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(Rational::parse(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

EvalPoint EvalPoint::parse(std::string_view text) {
    int ones = 0;
    auto semi = text.find(';');
    if (semi != std::string_view::npos) {
        std::string_view head = text.substr(0, semi);
        if (head.rfind("1^", 0) != 0)
            throw std::invalid_argument("EvalPoint::parse: expected '1^k;' prefix");
        for (char c : head.substr(2)) {
            if (c < '0' || c > '9') throw std::invalid_argument("EvalPoint::parse: bad multiplicity");
            ones = ones * 10 + (c - '0');
        }
        text = text.substr(semi + 1);
    }
    return EvalPoint(ones, parse_q_list(text));
}

std::string EvalPoint::str() const {
    std::string out;
    if (ones > 0) out += "1^" + std::to_string(ones) + ";";
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) out += ',';
        out += qs[i].str();
    }
    return out;
}

Rational h_eval(long k, const EvalPoint& pt) {
    if (k < 0) return Rational(0);
    std::vector<Rational> h(static_cast<std::size_t>(k) + 1, Rational(0));
    h[0] = Rational(1);
    // Multiply the series by 1/(1 - x t) per variable, truncated at t^k.
    for (int rep = 0; rep < pt.ones; ++rep)
        for (long i = 1; i <= k; ++i) h[i] += h[i - 1];
    for (const Rational& q : pt.qs)
        for (long i = 1; i <= k; ++i) h[i] += q * h[i - 1];
    return h[static_cast<std::size_t>(k)];
}

Rational e_eval(long k, const EvalPoint& pt) {
    if (k < 0) return Rational(0);
    if (k > static_cast<long>(pt.var_count())) return Rational(0);
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
    e[0] = Rational(1);
    // Multiply by (1 + x t) per variable; high-to-low keeps it in place.
    for (int rep = 0; rep < pt.ones; ++rep)
        for (long i = k; i >= 1; --i) e[i] += e[i - 1];
    for (const Rational& q : pt.qs)
        for (long i = k; i >= 1; --i) e[i] += q * e[i - 1];
    return e[static_cast<std::size_t>(k)];
}

Rational schur_eval(const Partition& shape, const EvalPoint& pt) {
    Partition lam = shape.trimmed();
    std::size_t n = lam.length();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = h_eval(lam[i] - static_cast<long>(i) + static_cast<long>(j), pt);
    return rational_det(std::move(a));
}

Rational g_eval_combinatorial(const Partition& shape, std::span<const Rational> xs) {
    Rational total(0);
    const int n = static_cast<int>(xs.size());
    for_each_plane_partition(shape, n, [&](const PlanePartition& p) {
        Rational term(1);
        for (int level = 1; level <= n; ++level) {
            int c = column_content(p, level);
            if (c > 0) term *= xs[static_cast<std::size_t>(level - 1)].pow(static_cast<unsigned long>(c));
        }
        total += term;
    });
    return total;
}

Rational g_eval_combinatorial(const Partition& shape, const EvalPoint& pt) {
    std::vector<Rational> xs = pt.materialize();
    return g_eval_combinatorial(shape, xs);
}

Rational g_eval_det_h(const Partition& shape, int m, const EvalPoint& pt) {
    Partition lam = shape.padded(static_cast<std::size_t>(m));
    if (m == 0) return Rational(1);
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m),
                                         std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    for (int i = 0; i < m; ++i) {
        EvalPoint row_pt(pt.ones + i, pt.qs);
        for (int j = 0; j < m; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                h_eval(lam[static_cast<std::size_t>(i)] - i + j, row_pt);
    }
    return rational_det(std::move(a));
}

Rational g_eval_det_e(const Partition& shape, const EvalPoint& pt) {
    Partition conj = conjugate(shape);
    const int width = static_cast<int>(conj.length());  // = lambda_1
    if (width == 0) return Rational(1);
    std::vector<std::vector<Rational>> a(
        static_cast<std::size_t>(width),
        std::vector<Rational>(static_cast<std::size_t>(width), Rational(0)));
    for (int i = 0; i < width; ++i) {
        EvalPoint row_pt(pt.ones + conj[static_cast<std::size_t>(i)] - 1, pt.qs);
        for (int j = 0; j < width; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                e_eval(conj[static_cast<std::size_t>(i)] - i + j, row_pt);
    }
    return rational_det(std::move(a));
}

Rational g_branching_sum(const Partition& shape, std::span<const Rational> qs) {
    Rational total(0);
    for (const Partition& mu : enumerate_subpartitions(shape))
        total += g_eval_combinatorial(mu, qs);
    return total;
}

Rational rational_det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("rational_det: non-square matrix");
    if (n == 0) return Rational(1);

    // Clear denominators row by row, tracking the scale factor.
    Integer scale(1L);
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Integer rowden(1L);
        for (std::size_t j = 0; j < n; ++j) rowden = rowden.lcm(a[i][j].denominator());
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = a[i][j] * Rational(rowden);
            m[i][j] = scaled.numerator();  // denominator is 1 by construction
        }
        scale *= rowden;
    }

    // Bareiss fraction-free elimination; every division is exact.
    int sign = 1;
    Integer prev(1L);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).div_exact(prev);
            m[i][k] = Integer(0L);
        }
        prev = m[k][k];
    }
    Integer det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

Rational interpolate_coefficient(std::span<const Rational> points,
                                 std::span<const Rational> values, std::size_t k) {
    const std::size_t n = points.size();
    if (values.size() != n || n == 0)
        throw std::invalid_argument("interpolate_coefficient: need matching nonempty samples");
    if (k >= n) return Rational(0);
    std::vector<Rational> coeff(n, Rational(0));
    std::vector<Rational> basis;  // coefficients of prod_{j != i} (x - t_j)
    for (std::size_t i = 0; i < n; ++i) {
        basis.assign(1, Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis.push_back(Rational(0));
            for (std::size_t d = basis.size() - 1; d >= 1; --d)
                basis[d] = basis[d - 1] - points[j] * basis[d];
            basis[0] = -points[j] * basis[0];
            denom *= points[i] - points[j];
        }
        if (denom.is_zero())
            throw std::invalid_argument("interpolate_coefficient: repeated points");
        Rational w = values[i] / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) coeff[d] += w * basis[d];
    }
    return coeff[k];
}

}  // namespace dglpp
