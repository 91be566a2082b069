#pragma once

#include <vector>

#include "forkalg/laurent.hpp"

namespace forkalg {

// Dense exact-integer matrix for rank and nullspace computations.
struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Int> data;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}
    Int& at(size_t r, size_t c) { return data[r * cols + c]; }
    const Int& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

// Rank over Q via exact rational elimination.
size_t rank(const IntMatrix& m);

// Dimension of the right nullspace over Q.
inline size_t nullity(const IntMatrix& m) { return m.cols - rank(m); }

// Incremental row-space builder: feed rows one at a time, tracks the rank.
// Rows that are linear combinations of earlier ones are discarded, so memory
// stays bounded by rank x cols.
class RowSpace {
public:
    explicit RowSpace(size_t cols) : cols_(cols) {}

    // returns true when the row enlarged the span
    bool add_row(std::vector<Rat> row);
    size_t rank() const { return pivots_.size(); }
    size_t cols() const { return cols_; }

private:
    size_t cols_;
    std::vector<std::vector<Rat>> echelon_;  // reduced rows
    std::vector<size_t> pivots_;             // pivot column of each row
};

}  // namespace forkalg
