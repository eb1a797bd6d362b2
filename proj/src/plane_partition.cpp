#include "dglpp/plane_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace dglpp {

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& row = rows_[i];
        if (row.empty()) throw std::invalid_argument("PlanePartition: empty row inside shape");
        if (i > 0 && row.size() > rows_[i - 1].size())
            throw std::invalid_argument("PlanePartition: row lengths must weakly decrease");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] <= 0) throw std::invalid_argument("PlanePartition: entries must be positive");
            if (j > 0 && row[j] > row[j - 1])
                throw std::invalid_argument("PlanePartition: rows must weakly decrease");
            if (i > 0 && row[j] > rows_[i - 1][j])
                throw std::invalid_argument("PlanePartition: columns must weakly decrease");
        }
    }
}

int PlanePartition::entry(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= rows_[i].size()) return 0;
    return rows_[i][j];
}

Partition PlanePartition::shape() const {
    std::vector<int> lens;
    lens.reserve(rows_.size());
    for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lens));
}

int PlanePartition::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int v : row) m = std::max(m, v);
    return m;
}

long PlanePartition::cell_count() const {
    long n = 0;
    for (const auto& row : rows_) n += static_cast<long>(row.size());
    return n;
}

std::string PlanePartition::str() const {
    if (rows_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += '/';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

int column_content(const PlanePartition& p, int level) {
    if (level < 1) throw std::invalid_argument("column_content: level must be >= 1");
    int width = p.row_count() == 0 ? 0 : static_cast<int>(p.row(0).size());
    int count = 0;
    for (int j = 0; j < width; ++j) {
        for (std::size_t i = 0; i < p.row_count(); ++i) {
            if (p.entry(i, static_cast<std::size_t>(j)) == level) {
                ++count;
                break;
            }
        }
    }
    return count;
}

namespace {

struct FillState {
    const Partition* shape;
    int max_entry;
    std::vector<std::vector<int>> rows;
    const std::function<void(const PlanePartition&)>* fn;
};

// Row-major DFS; entry at (i, j) ranges over [1, min(left, above, max_entry)],
// largest value first.
void fill_cell(FillState& st, std::size_t i, std::size_t j) {
    const Partition& shape = *st.shape;
    if (i == shape.length()) {
        (*st.fn)(PlanePartition(st.rows));
        return;
    }
    if (j == static_cast<std::size_t>((*st.shape)[i])) {
        fill_cell(st, i + 1, 0);
        return;
    }
    int hi = st.max_entry;
    if (j > 0) hi = std::min(hi, st.rows[i][j - 1]);
    if (i > 0) hi = std::min(hi, st.rows[i - 1][j]);
    for (int v = hi; v >= 1; --v) {
        st.rows[i].push_back(v);
        fill_cell(st, i, j + 1);
        st.rows[i].pop_back();
    }
}

}  // namespace

void for_each_plane_partition(const Partition& shape, int max_entry,
                              const std::function<void(const PlanePartition&)>& fn) {
    Partition sh = shape.trimmed();
    if (sh.length() == 0) {
        fn(PlanePartition{});
        return;
    }
    if (max_entry < 1) return;  // no fillings
    FillState st{&sh, max_entry, std::vector<std::vector<int>>(sh.length()), &fn};
    fill_cell(st, 0, 0);
}

std::vector<PlanePartition> enumerate_plane_partitions(const Partition& shape, int max_entry) {
    std::vector<PlanePartition> out;
    for_each_plane_partition(shape, max_entry, [&](const PlanePartition& p) { out.push_back(p); });
    return out;
}

std::vector<PlanePartition> enumerate_pp_bounded(int m, int n, int max_width) {
    if (m < 1 || n < 1) throw std::invalid_argument("enumerate_pp_bounded: m, n must be >= 1");
    if (max_width < 0) throw std::invalid_argument("enumerate_pp_bounded: max_width must be >= 0");
    std::vector<PlanePartition> out;
    for (const Partition& shape : enumerate_partitions(m, max_width))
        for_each_plane_partition(shape, n, [&](const PlanePartition& p) { out.push_back(p); });
    return out;
}

}  // namespace dglpp
