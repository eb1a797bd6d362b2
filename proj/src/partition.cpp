#include "dglpp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dglpp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    if (text.empty() || text == "0") return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        if (tok.empty()) throw std::invalid_argument("Partition::parse: empty component");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') throw std::invalid_argument("Partition::parse: bad digit");
            value = value * 10 + (c - '0');
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::size_t Partition::positive_count() const {
    std::size_t k = parts_.size();
    while (k > 0 && parts_[k - 1] == 0) --k;
    return k;
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::trimmed() const {
    Partition out;
    out.parts_.assign(parts_.begin(), parts_.begin() + positive_count());
    return out;
}

Partition Partition::padded(std::size_t m) const {
    if (positive_count() > m)
        throw std::invalid_argument("Partition::padded: more than m positive parts");
    Partition out = trimmed();
    out.parts_.resize(m, 0);
    return out;
}

bool Partition::contains(const Partition& mu) const {
    std::size_t n = std::max(parts_.size(), mu.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int a = i < parts_.size() ? parts_[i] : 0;
        int b = i < mu.parts_.size() ? mu.parts_[i] : 0;
        if (b > a) return false;
    }
    return true;
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<std::size_t>(p.first_part()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int count = 0;
        for (std::size_t j = 0; j < p.length(); ++j)
            if (p[j] >= static_cast<int>(i) + 1) ++count;
        out[i] = count;
    }
    return Partition(std::move(out));
}

namespace {

void descend_partitions(std::vector<int>& parts, std::size_t depth, std::size_t m, int bound,
                        std::vector<Partition>& out) {
    if (depth == m) {
        out.push_back(Partition(parts));
        return;
    }
    for (int v = bound; v >= 0; --v) {
        parts.push_back(v);
        descend_partitions(parts, depth + 1, m, v, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m, int max_part) {
    if (m < 1) throw std::invalid_argument("enumerate_partitions: m must be >= 1");
    if (max_part < 0) throw std::invalid_argument("enumerate_partitions: max_part must be >= 0");
    std::vector<Partition> out;
    std::vector<int> parts;
    descend_partitions(parts, 0, static_cast<std::size_t>(m), max_part, out);
    return out;
}

std::vector<Partition> enumerate_subpartitions(const Partition& bound) {
    Partition lam = bound.trimmed();
    std::vector<Partition> out;
    std::vector<int> parts;
    // DFS over mu_i in [0, min(mu_{i-1}, lambda_i)], largest first; zero stops
    // the row since anything below a zero part is zero.
    auto rec = [&](auto&& self, std::size_t i, int prev) -> void {
        if (i == lam.length()) {
            Partition mu(parts);
            out.push_back(mu.trimmed());
            return;
        }
        int hi = std::min(prev, lam[i]);
        for (int v = hi; v >= 1; --v) {
            parts.push_back(v);
            self(self, i + 1, v);
            parts.pop_back();
        }
        out.push_back(Partition(parts).trimmed());  // mu_i = 0 ends mu
    };
    if (lam.length() == 0) return {Partition{}};
    rec(rec, 0, lam[0]);
    return out;
}

}  // namespace dglpp
