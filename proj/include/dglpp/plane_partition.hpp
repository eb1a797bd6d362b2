#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dglpp/partition.hpp"

namespace dglpp {

// Plane partition: positive entries weakly decreasing along rows and
// columns, stored as ragged rows (zeros outside the shape are implicit).
class PlanePartition {
public:
    PlanePartition() = default;
    // Trailing empty rows are dropped; rows must form a valid filling of a
    // Young-diagram shape.
    explicit PlanePartition(std::vector<std::vector<int>> rows);

    std::size_t row_count() const { return rows_.size(); }
    const std::vector<int>& row(std::size_t i) const { return rows_[i]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Entry at (i, j), 0-based; 0 outside the shape.
    int entry(std::size_t i, std::size_t j) const;
    Partition shape() const;
    int max_entry() const;
    long cell_count() const;

    bool operator==(const PlanePartition& o) const { return rows_ == o.rows_; }
    bool operator<(const PlanePartition& o) const { return rows_ < o.rows_; }

    // Rows separated by '/', entries by ',' ("4,4,2/4,2,1/2,2"); "0" when empty.
    std::string str() const;

private:
    std::vector<std::vector<int>> rows_;
};

// c_l(p): number of columns of p containing the value `level` (level >= 1).
int column_content(const PlanePartition& p, int level);

// All fillings of `shape` with entries in [1, max_entry], weakly decreasing
// along rows and columns. Cell-by-cell row-major DFS, entries tried from
// largest to smallest; this order is a contract (golden-file tests pin it).
void for_each_plane_partition(const Partition& shape, int max_entry,
                              const std::function<void(const PlanePartition&)>& fn);
std::vector<PlanePartition> enumerate_plane_partitions(const Partition& shape, int max_entry);

// All of PP(m, n) -- at most m rows, entries at most n -- with shape width
// bounded by max_width. Shapes in lexicographically decreasing order,
// fillings per shape in the order above.
std::vector<PlanePartition> enumerate_pp_bounded(int m, int n, int max_width);

}  // namespace dglpp
