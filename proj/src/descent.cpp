#include "dglpp/descent.hpp"

#include <stdexcept>

namespace dglpp {

std::vector<int> descent_level_set(const PlanePartition& p, int row, int level) {
    if (row < 0 || level < 1) throw std::invalid_argument("descent_level_set: bad row/level");
    std::vector<int> cols;
    if (row >= static_cast<int>(p.row_count())) return cols;
    const auto& r = p.row(static_cast<std::size_t>(row));
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] == level && level > p.entry(static_cast<std::size_t>(row) + 1, j))
            cols.push_back(static_cast<int>(j));
    }
    return cols;
}

DescentMatrix phi(const PlanePartition& p, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("phi: negative dimensions");
    if (static_cast<int>(p.row_count()) > m)
        throw std::invalid_argument("phi: plane partition has more than m rows");
    if (p.max_entry() > n) throw std::invalid_argument("phi: entry exceeds n");
    DescentMatrix d(m, n);
    for (int i = 0; i < static_cast<int>(p.row_count()); ++i)
        for (int level = 1; level <= n; ++level)
            d.at(i, level - 1) = static_cast<int>(descent_level_set(p, i, level).size());
    return d;
}

PlanePartition phi_inverse(const DescentMatrix& d) {
    const int m = d.rows();
    const int n = d.cols();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m));
    std::vector<int> below;  // row i+1; row m is empty
    for (int i = m - 1; i >= 0; --i) {
        std::vector<int> cur;
        std::size_t filled = 0;  // columns already holding values > level
        for (int level = n; level >= 1; --level) {
            // Columns of the lower row still uncovered at this level must be
            // matched (column monotonicity), then d_{i,level} fresh ones.
            int forced = 0;
            for (std::size_t j = filled; j < below.size(); ++j)
                if (below[j] == level) ++forced;
            int block = forced + d.at(i, level - 1);
            cur.insert(cur.end(), static_cast<std::size_t>(block), level);
            filled += static_cast<std::size_t>(block);
        }
        rows[static_cast<std::size_t>(i)] = cur;
        below = std::move(cur);
    }
    return PlanePartition(std::move(rows));
}

Partition shape_via_max_paths(const DescentMatrix& d) {
    const int m = d.rows();
    const int n = d.cols();
    if (m == 0 || n == 0) return Partition(std::vector<int>(static_cast<std::size_t>(m), 0));
    // best(i,l) = d(i,l) + max over the down/right successor; only paths that
    // reach (m-1, n-1) count, which in a full rectangle is all of them.
    std::vector<long> best(static_cast<std::size_t>(m) * n, 0);
    auto b = [&](int i, int l) -> long& { return best[static_cast<std::size_t>(i) * n + l]; };
    for (int i = m - 1; i >= 0; --i) {
        for (int l = n - 1; l >= 0; --l) {
            long follow = 0;
            if (i + 1 < m && l + 1 < n)
                follow = std::max(b(i + 1, l), b(i, l + 1));
            else if (i + 1 < m)
                follow = b(i + 1, l);
            else if (l + 1 < n)
                follow = b(i, l + 1);
            b(i, l) = d.at(i, l) + follow;
        }
    }
    std::vector<int> parts(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) parts[static_cast<std::size_t>(k)] = static_cast<int>(b(k, 0));
    return Partition(std::move(parts));
}

}  // namespace dglpp
