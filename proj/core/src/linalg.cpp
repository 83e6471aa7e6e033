#include "gradix/linalg.hpp"

namespace gradix {

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, FieldElement::zero(field_)) {}

std::vector<std::size_t> DenseMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = rows_;
        for (std::size_t r = row; r < rows_; ++r) {
            if (!at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(row, c), at(pivot, c));
        FieldElement inv = at(row, col).invert();
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            FieldElement factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t DenseMatrix::rank() const {
    DenseMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<FieldElement>> DenseMatrix::kernel_basis() const {
    DenseMatrix copy = *this;
    std::vector<std::size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
        v[free_col] = FieldElement::one(field_);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -copy.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool DenseMatrix::row_span_contains(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw usage_error("vector length does not match matrix width");
    DenseMatrix aug(field_, rows_ + 1, cols_);
    aug.data_ = data_;
    aug.data_.insert(aug.data_.end(), v.begin(), v.end());
    return aug.rank() == rank();
}

}  // namespace gradix
