#include "dglpp/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dglpp/lpp.hpp"
#include "dglpp/symfunc.hpp"

namespace dglpp {

namespace {

bool is_strict_filling(const PlanePartition& p, int n) {
    // Every value in [1, n] present, each in exactly one column.
    int width = p.row_count() == 0 ? 0 : static_cast<int>(p.row(0).size());
    for (int value = 1; value <= n; ++value) {
        int columns = 0;
        for (int j = 0; j < width; ++j) {
            for (std::size_t i = 0; i < p.row_count(); ++i) {
                if (p.entry(i, static_cast<std::size_t>(j)) == value) {
                    ++columns;
                    break;
                }
            }
        }
        if (columns != 1) return false;
    }
    // No entry outside [1, n].
    return p.max_entry() <= n;
}

}  // namespace

StrictTableau::StrictTableau(PlanePartition pp, int n) : tableau(std::move(pp)), content_n(n) {
    if (n < 0) throw std::invalid_argument("StrictTableau: negative content");
    if (!is_strict_filling(tableau, n))
        throw std::invalid_argument("StrictTableau: filling violates the strict-tableau conditions");
}

std::vector<StrictTableau> enumerate_strict_tableaux(const Partition& shape, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_strict_tableaux: n must be >= 0");
    std::vector<StrictTableau> out;
    Partition sh = shape.trimmed();
    if (n == 0) {
        if (sh.length() == 0) out.emplace_back(PlanePartition{}, 0);
        return out;
    }
    if (static_cast<long>(n) > sh.weight()) return out;  // not enough cells
    for_each_plane_partition(sh, n, [&](const PlanePartition& p) {
        if (is_strict_filling(p, n)) out.emplace_back(p, n);
    });
    return out;
}

long f_lambda(const Partition& shape, int n) {
    return static_cast<long>(enumerate_strict_tableaux(shape, n).size());
}

Rational gpl_measure(int m, int n, const Partition& shape) {
    if (m < 1 || n < 0) throw std::invalid_argument("gpl_measure: need m >= 1, n >= 0");
    Partition box(std::vector<int>(static_cast<std::size_t>(m), n));
    if (!box.contains(shape))
        throw std::invalid_argument("gpl_measure: shape must fit inside the (n^m) box");
    return Rational(f_lambda(shape, n)) / Rational(static_cast<long>(m)).pow(static_cast<unsigned long>(n));
}

Word::Word(std::vector<int> ls, int m) : letters(std::move(ls)) {
    for (int c : letters)
        if (c < 1 || c > m) throw std::invalid_argument("Word: letter outside [1, m]");
}

Partition word_L_stats(const Word& w, int m) {
    if (m < 1) throw std::invalid_argument("word_L_stats: m must be >= 1");
    std::vector<int> parts(static_cast<std::size_t>(m), 0);
    // For each suffix alphabet {lo..m}: counting DP, best[c] = longest
    // weakly increasing subsequence ending exactly in letter c.
    for (int i = 1; i <= m; ++i) {
        const int lo = m - i + 1;
        std::vector<int> best(static_cast<std::size_t>(m) + 1, 0);
        for (int c : w.letters) {
            if (c < lo) continue;
            int prefix = 0;
            for (int v = lo; v <= c; ++v) prefix = std::max(prefix, best[static_cast<std::size_t>(v)]);
            best[static_cast<std::size_t>(c)] = prefix + 1;
        }
        int longest = 0;
        for (int v = lo; v <= m; ++v) longest = std::max(longest, best[static_cast<std::size_t>(v)]);
        parts[static_cast<std::size_t>(m - i)] = longest;  // parts = (L_m, ..., L_1)
    }
    return Partition(std::move(parts));
}

JointDistribution word_distribution_exhaustive(int m, int n, std::uint64_t budget) {
    if (m < 1 || n < 1) throw std::invalid_argument("word_distribution_exhaustive: m, n must be >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(m);
        if (total > budget)
            throw std::runtime_error("word_distribution_exhaustive: enumeration budget exceeded");
    }

    std::map<Partition, std::uint64_t> counts;
    std::vector<int> letters(static_cast<std::size_t>(n), 1);
    for (;;) {
        ++counts[word_L_stats(Word(letters, m), m)];
        int pos = n - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == m) {
            letters[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++letters[static_cast<std::size_t>(pos)];
    }

    JointDistribution dist;
    dist.m = m;
    dist.n = n;
    dist.provenance = JointDistribution::Provenance::ClosedForm;
    Rational denom = Rational(static_cast<long>(m)).pow(static_cast<unsigned long>(n));
    for (const auto& [key, c] : counts)
        dist.mass[key] = Rational(static_cast<long>(c)) / denom;
    return dist;
}

std::string ConvergenceTable::csv() const {
    std::ostringstream os;
    os << "# m=" << m << " shape=" << shape.str() << " gamma=" << gamma.str()
       << " series truncated at k=" << truncation << " (f_lambda vanishes beyond)\n";
    os << "n,lhs,rhs,abs_diff\n";
    os.precision(17);
    for (const Row& r : rows)
        os << r.n << ',' << r.lhs << ',' << r.rhs << ',' << r.abs_diff << '\n';
    return os.str();
}

ConvergenceTable plancherel_limit_check(int m, const Partition& shape, const Rational& gamma,
                                        const std::vector<int>& n_values) {
    if (m < 1) throw std::invalid_argument("plancherel_limit_check: m must be >= 1");
    if (gamma <= Rational(0)) throw std::invalid_argument("plancherel_limit_check: gamma must be > 0");
    for (int n : n_values)
        if (gamma >= Rational(n))
            throw std::invalid_argument("plancherel_limit_check: need gamma/n < 1 for every n");

    ConvergenceTable table;
    table.m = m;
    table.shape = shape.trimmed();
    table.gamma = gamma;
    table.truncation = static_cast<int>(table.shape.weight());

    // Right side: e^{-m gamma} sum_k f_lambda(k) (m gamma)^k / (k! m^k),
    // finite because f_lambda(k) = 0 once k exceeds the cell count.
    const double mgamma = static_cast<double>(m) * gamma.to_double();
    double series = 0.0;
    double term_base = 1.0;  // gamma^k / k!
    for (int k = 0; k <= table.truncation; ++k) {
        if (k > 0) term_base *= gamma.to_double() / static_cast<double>(k);
        series += static_cast<double>(f_lambda(table.shape, k)) * term_base;
    }
    const double rhs = std::exp(-mgamma) * series;

    for (int n : n_values) {
        Rational qn = gamma / Rational(n);
        std::vector<Rational> qs(static_cast<std::size_t>(n), qn);
        Rational lhs_exact = (Rational(1) - qn).pow(static_cast<unsigned long>(m) *
                                                    static_cast<unsigned long>(n)) *
                             g_eval_det_h(table.shape.padded(static_cast<std::size_t>(m)), m,
                                          EvalPoint(qs));
        double lhs = lhs_exact.to_double();
        table.rows.push_back({n, lhs, rhs, std::fabs(lhs - rhs)});
    }
    return table;
}

BinomialReport lambda_m_binomial_check(int m, int n, std::uint64_t budget) {
    JointDistribution dist = word_distribution_exhaustive(m, n, budget);
    BinomialReport report;
    report.m = m;
    report.n = n;
    for (int k = 0; k <= n; ++k) report.marginal[k] = Rational(0);
    for (const auto& [lam, p] : dist.mass)
        report.marginal[lam[static_cast<std::size_t>(m - 1)]] += p;
    Rational pm = Rational(1, m);
    for (int k = 0; k <= n; ++k)
        report.binomial[k] = Rational(Integer::binomial(static_cast<unsigned long>(n),
                                                        static_cast<unsigned long>(k))) *
                             pm.pow(static_cast<unsigned long>(k)) *
                             (Rational(1) - pm).pow(static_cast<unsigned long>(n - k));
    report.exact_match = report.marginal == report.binomial;
    return report;
}

}  // namespace dglpp
