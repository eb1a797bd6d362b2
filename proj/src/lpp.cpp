#include "dglpp/lpp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "dglpp/distribution.hpp"

namespace dglpp {

Rational JointDistribution::total_mass() const {
    Rational total(0);
    for (const auto& [key, p] : mass) total += p;
    return total;
}

Rational JointDistribution::mass_at(const Partition& key) const {
    auto it = mass.find(key.padded(static_cast<std::size_t>(m)));
    return it == mass.end() ? Rational(0) : it->second;
}

double JointDistribution::freq_at(const Partition& key) const {
    auto it = freq.find(key.padded(static_cast<std::size_t>(m)));
    return it == freq.end() ? 0.0 : it->second;
}

std::string JointDistribution::provenance_str() const {
    switch (provenance) {
        case Provenance::ClosedForm:
            return "closed-form";
        case Provenance::Oracle:
            return "oracle(cap=" + std::to_string(cap) + ")";
        case Provenance::MonteCarlo:
            return "monte-carlo(samples=" + std::to_string(samples) +
                   ",seed=" + std::to_string(seed) + ")";
    }
    return "?";
}

GeometricParams::GeometricParams(int rows, int cols, std::vector<Rational> qs)
    : m(rows), n(cols), q(std::move(qs)) {
    if (m < 1 || n < 1) throw std::invalid_argument("GeometricParams: m, n must be >= 1");
    if (static_cast<int>(q.size()) != n)
        throw std::invalid_argument("GeometricParams: need one q per column");
    for (const Rational& v : q)
        if (v <= Rational(0) || v >= Rational(1))
            throw std::invalid_argument("GeometricParams: q must lie in (0,1)");
}

namespace {

// Counter-based splitmix64; each (seed, stream) pair opens an independent
// deterministic substream, which is what makes worker count irrelevant.
struct SampleRng {
    std::uint64_t state;

    static std::uint64_t scramble(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    SampleRng(std::uint64_t seed, std::uint64_t stream)
        : state(scramble(seed ^ scramble(stream ^ 0xD1B54A32D192ED03ULL))) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on (0,1); the zero draw is rejected so log stays finite.
    double uniform_open() {
        for (;;) {
            double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }
};

}  // namespace

WeightMatrix sample_weights(const GeometricParams& params, std::uint64_t seed,
                            std::uint64_t stream) {
    SampleRng rng(seed, stream);
    std::vector<double> logq(static_cast<std::size_t>(params.n));
    for (int j = 0; j < params.n; ++j)
        logq[static_cast<std::size_t>(j)] = std::log(params.q[static_cast<std::size_t>(j)].to_double());
    WeightMatrix w(params.m, params.n);
    for (int i = 0; i < params.m; ++i)
        for (int j = 0; j < params.n; ++j)
            w.at(i, j) = static_cast<int>(std::floor(std::log(rng.uniform_open()) /
                                                     logq[static_cast<std::size_t>(j)]));
    return w;
}

IntMatrix last_passage(const WeightMatrix& w) {
    IntMatrix g(w.rows(), w.cols());
    for (int i = 0; i < w.rows(); ++i) {
        for (int j = 0; j < w.cols(); ++j) {
            int best = 0;
            if (i > 0) best = std::max(best, g.at(i - 1, j));
            if (j > 0) best = std::max(best, g.at(i, j - 1));
            g.at(i, j) = w.at(i, j) + best;
        }
    }
    return g;
}

Partition column_vector(const IntMatrix& g, int col) {
    if (col < 0 || col >= g.cols()) throw std::invalid_argument("column_vector: column out of range");
    std::vector<int> parts(static_cast<std::size_t>(g.rows()));
    for (int i = 0; i < g.rows(); ++i)
        parts[static_cast<std::size_t>(i)] = g.at(g.rows() - 1 - i, col);
    return Partition(std::move(parts));
}

namespace {

Rational one_minus_q_power(const GeometricParams& params) {
    Rational prefactor(1);
    for (const Rational& qi : params.q)
        prefactor *= (Rational(1) - qi).pow(static_cast<unsigned long>(params.m));
    return prefactor;
}

}  // namespace

Rational theorem_distribution(const GeometricParams& params, const Partition& shape) {
    Partition lam = shape.padded(static_cast<std::size_t>(params.m));
    return one_minus_q_power(params) * g_eval_det_h(lam, params.m, EvalPoint(params.q));
}

Rational cdf_distribution(const GeometricParams& params, const Partition& shape) {
    Partition lam = shape.padded(static_cast<std::size_t>(params.m));
    return one_minus_q_power(params) * g_eval_det_h(lam, params.m, EvalPoint(1, params.q));
}

Rational single_point_cdf(int m, int n, std::span<const Rational> qs, int a) {
    if (m < 1 || n < 1) throw std::invalid_argument("single_point_cdf: m, n must be >= 1");
    if (a < 0) throw std::invalid_argument("single_point_cdf: a must be >= 0");
    if (static_cast<int>(qs.size()) != n)
        throw std::invalid_argument("single_point_cdf: need one q per column");
    Rational prefactor(1);
    for (const Rational& qi : qs) {
        if (qi <= Rational(0) || qi >= Rational(1))
            throw std::invalid_argument("single_point_cdf: q must lie in (0,1)");
        prefactor *= (Rational(1) - qi).pow(static_cast<unsigned long>(m));
    }
    Partition rect(std::vector<int>(static_cast<std::size_t>(m), a));
    EvalPoint pt(m, std::vector<Rational>(qs.begin(), qs.end()));
    return prefactor * schur_eval(rect, pt);
}

Rational marginal_cdf(const GeometricParams& params, int k, int a) {
    if (k < 1 || k > params.m) throw std::invalid_argument("marginal_cdf: k out of range");
    return single_point_cdf(params.m - k + 1, params.n, params.q, a);
}

void for_each_weight_matrix(int m, int n, int cap,
                            const std::function<void(const WeightMatrix&)>& fn) {
    if (m < 1 || n < 1 || cap < 0) throw std::invalid_argument("for_each_weight_matrix: bad arguments");
    WeightMatrix w(m, n);
    const int cells = m * n;
    for (;;) {
        fn(w);
        int pos = cells - 1;
        while (pos >= 0 && w.at(pos / n, pos % n) == cap) {
            w.at(pos / n, pos % n) = 0;
            --pos;
        }
        if (pos < 0) break;
        ++w.at(pos / n, pos % n);
    }
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9E3779B9ULL;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace

JointDistribution oracle_distribution(const GeometricParams& params, int cap,
                                      std::uint64_t budget) {
    if (cap < 0) throw std::invalid_argument("oracle_distribution: cap must be >= 0");
    const int m = params.m, n = params.n;
    std::uint64_t count = 1;
    for (int c = 0; c < m * n; ++c) {
        count *= static_cast<std::uint64_t>(cap) + 1;
        if (count > budget)
            throw std::runtime_error("oracle_distribution: enumeration budget exceeded");
    }

    // Hot loop counts matrices by (column vector, column sums); the exact
    // rational pass happens once per distinct key since the probability of a
    // matrix only depends on its column sums.
    std::unordered_map<std::vector<int>, std::uint64_t, VecHash> tally;
    std::vector<int> key(static_cast<std::size_t>(m + n));
    std::vector<int> g(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for_each_weight_matrix(m, n, cap, [&](const WeightMatrix& w) {
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) {
                int best = 0;
                if (i > 0) best = std::max(best, g[static_cast<std::size_t>((i - 1) * n + j)]);
                if (j > 0) best = std::max(best, g[static_cast<std::size_t>(i * n + j - 1)]);
                g[static_cast<std::size_t>(i * n + j)] = w.at(i, j) + best;
            }
        }
        for (int i = 0; i < m; ++i)
            key[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>((m - 1 - i) * n + (n - 1))];
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int i = 0; i < m; ++i) s += w.at(i, j);
            key[static_cast<std::size_t>(m + j)] = s;
        }
        ++tally[key];
    });

    // q_j^t tables up to the maximum possible column sum.
    std::vector<std::vector<Rational>> qpow(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        auto& tab = qpow[static_cast<std::size_t>(j)];
        tab.reserve(static_cast<std::size_t>(m * cap) + 1);
        tab.push_back(Rational(1));
        for (int t = 1; t <= m * cap; ++t) tab.push_back(tab.back() * params.q[static_cast<std::size_t>(j)]);
    }
    Rational prefactor = one_minus_q_power(params);

    JointDistribution dist;
    dist.m = m;
    dist.n = n;
    dist.q = params.q;
    dist.provenance = JointDistribution::Provenance::Oracle;
    dist.cap = cap;
    for (const auto& [k, c] : tally) {
        Rational p = prefactor * Rational(static_cast<long>(c));
        for (int j = 0; j < n; ++j)
            p *= qpow[static_cast<std::size_t>(j)][static_cast<std::size_t>(k[static_cast<std::size_t>(m + j)])];
        Partition lam(std::vector<int>(k.begin(), k.begin() + m));
        dist.mass[lam] += p;
    }

    Rational tail(0);
    for (const Rational& qj : params.q) tail += qj.pow(static_cast<unsigned long>(cap) + 1);
    dist.tail_bound = Rational(static_cast<long>(m)) * tail;
    return dist;
}

JointDistribution monte_carlo_distribution(const GeometricParams& params,
                                           std::uint64_t samples, std::uint64_t seed,
                                           int workers) {
    if (samples < 1) throw std::invalid_argument("monte_carlo_distribution: samples must be >= 1");
    if (workers < 1) throw std::invalid_argument("monte_carlo_distribution: workers must be >= 1");

    const int t = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), samples));
    std::vector<std::map<Partition, std::uint64_t>> local(static_cast<std::size_t>(t));
    auto run = [&](int worker) {
        auto& counts = local[static_cast<std::size_t>(worker)];
        // Contiguous sample ranges; each sample keyed by its own stream
        // index, so the split has no effect on the result.
        std::uint64_t lo = samples * static_cast<std::uint64_t>(worker) / static_cast<std::uint64_t>(t);
        std::uint64_t hi = samples * (static_cast<std::uint64_t>(worker) + 1) / static_cast<std::uint64_t>(t);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            WeightMatrix w = sample_weights(params, seed, idx);
            Partition lam = column_vector(last_passage(w), params.n - 1);
            ++counts[lam];
        }
    };
    if (t == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) pool.emplace_back(run, i);
        for (auto& th : pool) th.join();
    }

    std::map<Partition, std::uint64_t> merged;
    for (const auto& counts : local)
        for (const auto& [key, c] : counts) merged[key] += c;

    JointDistribution dist;
    dist.m = params.m;
    dist.n = params.n;
    dist.q = params.q;
    dist.provenance = JointDistribution::Provenance::MonteCarlo;
    dist.samples = samples;
    dist.seed = seed;
    for (const auto& [key, c] : merged)
        dist.freq[key] = static_cast<double>(c) / static_cast<double>(samples);
    return dist;
}

JointDistribution closed_form_distribution(const GeometricParams& params, int max_part) {
    if (max_part < 0) throw std::invalid_argument("closed_form_distribution: max_part must be >= 0");
    JointDistribution dist;
    dist.m = params.m;
    dist.n = params.n;
    dist.q = params.q;
    dist.provenance = JointDistribution::Provenance::ClosedForm;
    for (const Partition& lam : enumerate_partitions(params.m, max_part))
        dist.mass[lam] = theorem_distribution(params, lam);
    return dist;
}

}  // namespace dglpp
