#pragma once

#include <cstddef>
#include <vector>

#include "deltalab/bitword.hpp"
#include "deltalab/stream.hpp"

namespace deltalab {

// A rows x cols window of a block-difference orbit: row n, column i holds
// bit i of the n-th iterate. Row n+1 is the d+1-block difference of row n
// on the columns where the window is wide enough.
class OrbitMatrix {
public:
    OrbitMatrix(std::size_t degree, std::vector<BitWord> rows, std::size_t cols);

    std::size_t degree() const noexcept { return degree_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool cell(std::size_t row, std::size_t col) const;
    const BitWord& row(std::size_t n) const { return rows_.at(n); }

    friend bool operator==(const OrbitMatrix&, const OrbitMatrix&) = default;

private:
    std::size_t degree_;
    std::size_t cols_;
    std::vector<BitWord> rows_;
};

// Materializes cols + d*(rows-1) base bits and fills the window by
// successive block differences; every stored row is exactly cols wide.
OrbitMatrix build_orbit(const ExprPtr& base, std::size_t d, std::size_t rows, std::size_t cols);

}  // namespace deltalab
