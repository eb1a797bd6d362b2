#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dglpp {

// Dense matrix of nonnegative integers with explicit dimensions. Serves as
// both the descent matrix (image of phi) and the geometric weight matrix;
// the two are structurally identical.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols, int fill = 0);
    IntMatrix(int rows, int cols, std::vector<int> data);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    int& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<int>& data() const { return data_; }

    bool operator==(const IntMatrix& o) const = default;

    // Rows separated by ';', entries by ',' ("0,1,0,1;1,0,0,1;0,2,0,0").
    static IntMatrix parse(std::string_view text);
    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> data_;
};

}  // namespace dglpp
