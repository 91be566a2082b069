#include "forkalg/linalg.hpp"

namespace forkalg {

bool RowSpace::add_row(std::vector<Rat> row) {
    if (row.size() != cols_) throw std::invalid_argument("RowSpace: wrong row length");
    for (size_t r = 0; r < echelon_.size(); ++r) {
        const Rat& lead = row[pivots_[r]];
        if (lead != 0) {
            Rat factor = lead;  // echelon rows are normalized to pivot 1
            for (size_t c = 0; c < cols_; ++c) row[c] -= factor * echelon_[r][c];
        }
    }
    size_t pivot = cols_;
    for (size_t c = 0; c < cols_; ++c)
        if (row[c] != 0) { pivot = c; break; }
    if (pivot == cols_) return false;
    Rat inv = row[pivot];
    for (size_t c = 0; c < cols_; ++c) row[c] /= inv;
    // keep earlier rows reduced against the new pivot
    for (size_t r = 0; r < echelon_.size(); ++r) {
        Rat f = echelon_[r][pivot];
        if (f != 0)
            for (size_t c = 0; c < cols_; ++c) echelon_[r][c] -= f * row[c];
    }
    echelon_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

size_t rank(const IntMatrix& m) {
    RowSpace rs(m.cols);
    std::vector<Rat> row(m.cols);
    for (size_t r = 0; r < m.rows; ++r) {
        bool nonzero = false;
        for (size_t c = 0; c < m.cols; ++c) {
            row[c] = Rat(m.at(r, c));
            nonzero = nonzero || m.at(r, c) != 0;
        }
        if (nonzero) rs.add_row(row);
    }
    return rs.rank();
}

}  // namespace forkalg
