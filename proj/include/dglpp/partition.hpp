#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dglpp {

// Integer partition: weakly decreasing nonnegative parts with an explicit
// declared length (trailing zeros are significant for equality, so that a
// joint-distribution key over m values never collides with one over m' != m).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // "3,2,1"; the empty partition is "0" or the empty string.
    static Partition parse(std::string_view text);

    std::size_t length() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<int>& parts() const { return parts_; }

    // Number of positive parts.
    std::size_t positive_count() const;
    // lambda_1, or 0 when there are no parts.
    int first_part() const { return parts_.empty() ? 0 : parts_[0]; }
    // |lambda| = sum of parts.
    long weight() const;
    bool is_empty_shape() const { return positive_count() == 0; }

    // Same parts with trailing zeros stripped.
    Partition trimmed() const;
    // Padded (or zero-trimmed) to declared length m; throws if more than m
    // positive parts.
    Partition padded(std::size_t m) const;

    // Componentwise mu_i <= lambda_i (comparing beyond either length as 0).
    bool contains(const Partition& mu) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
};

// lambda'_i = |{j : lambda_j >= i}|; the result carries no trailing zeros.
Partition conjugate(const Partition& p);

// All lambda with at most m parts and lambda_1 <= max_part, in
// lexicographically decreasing order, each with declared length m.
// The count is binomial(max_part + m, m).
std::vector<Partition> enumerate_partitions(int m, int max_part);

// All mu with mu_i <= bound_i componentwise, trimmed, in lexicographically
// decreasing order.
std::vector<Partition> enumerate_subpartitions(const Partition& bound);

}  // namespace dglpp
