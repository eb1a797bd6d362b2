#include "dglpp/matrix.hpp"

#include <stdexcept>

namespace dglpp {

IntMatrix::IntMatrix(int rows, int cols, int fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    if (fill < 0) throw std::invalid_argument("IntMatrix: entries must be nonnegative");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("IntMatrix: data size mismatch");
    for (int v : data_)
        if (v < 0) throw std::invalid_argument("IntMatrix: entries must be nonnegative");
}

IntMatrix IntMatrix::parse(std::string_view text) {
    std::vector<int> data;
    int rows = 0, cols = -1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        std::string_view rowtext =
            text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
        int rowlen = 0;
        std::size_t rpos = 0;
        while (rpos <= rowtext.size()) {
            auto comma = rowtext.find(',', rpos);
            std::string_view tok = rowtext.substr(
                rpos, comma == std::string_view::npos ? std::string_view::npos : comma - rpos);
            if (tok.empty()) throw std::invalid_argument("IntMatrix::parse: empty entry");
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw std::invalid_argument("IntMatrix::parse: bad digit");
                value = value * 10 + (c - '0');
            }
            data.push_back(value);
            ++rowlen;
            if (comma == std::string_view::npos) break;
            rpos = comma + 1;
        }
        if (cols == -1)
            cols = rowlen;
        else if (rowlen != cols)
            throw std::invalid_argument("IntMatrix::parse: ragged rows");
        ++rows;
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return IntMatrix(rows, cols, std::move(data));
}

std::string IntMatrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        if (i) out += ';';
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ',';
            out += std::to_string(at(i, j));
        }
    }
    return out;
}

}  // namespace dglpp
