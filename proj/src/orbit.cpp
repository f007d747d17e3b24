#include "deltalab/orbit.hpp"

#include <stdexcept>

#include "deltalab/diff.hpp"

namespace deltalab {

OrbitMatrix::OrbitMatrix(std::size_t degree, std::vector<BitWord> rows, std::size_t cols)
    : degree_(degree), cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("OrbitMatrix: row width mismatch");
        }
    }
}

bool OrbitMatrix::cell(std::size_t row, std::size_t col) const {
    if (col >= cols_) {
        throw std::out_of_range("OrbitMatrix::cell: column out of range");
    }
    return rows_.at(row).get(col);
}

OrbitMatrix build_orbit(const ExprPtr& base, std::size_t d, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("build_orbit: rows and cols must be >= 1");
    }
    BitWord cur = materialize(base, cols + d * (rows - 1));
    std::vector<BitWord> out;
    out.reserve(rows);
    out.push_back(truncate(cur, cols));
    for (std::size_t n = 1; n < rows; ++n) {
        cur = block_diff(d, cur);
        out.push_back(truncate(cur, cols));
    }
    return OrbitMatrix(d, std::move(out), cols);
}

}  // namespace deltalab
