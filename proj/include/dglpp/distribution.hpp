#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dglpp/partition.hpp"
#include "dglpp/rational.hpp"

namespace dglpp {

// Distribution over length-m partitions, keyed by the full m-slot vector.
// Exact modes (closed-form, capped oracle) carry rational masses; Monte
// Carlo carries empirical frequencies. Oracle mode records the union-bound
// mass excluded by its entry cap.
struct JointDistribution {
    enum class Provenance { ClosedForm, Oracle, MonteCarlo };

    int m = 0;
    int n = 0;
    std::vector<Rational> q;
    Provenance provenance = Provenance::ClosedForm;

    std::map<Partition, Rational> mass;  // closed-form / oracle
    std::map<Partition, double> freq;    // monte carlo

    Rational tail_bound;    // oracle only
    int cap = 0;            // oracle only
    std::uint64_t samples = 0;  // monte carlo only
    std::uint64_t seed = 0;     // monte carlo only

    bool exact() const { return provenance != Provenance::MonteCarlo; }
    Rational total_mass() const;
    // Mass at `key` (padded to m); zero when absent.
    Rational mass_at(const Partition& key) const;
    double freq_at(const Partition& key) const;
    std::string provenance_str() const;
};

}  // namespace dglpp
