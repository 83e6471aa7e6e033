#ifndef GRADIX_LINALG_HPP
#define GRADIX_LINALG_HPP

#include <vector>

#include "gradix/field.hpp"

namespace gradix {

/// Dense matrix over an exact field; just enough elimination for kernels,
/// ranks and span membership at desk scale.
class DenseMatrix {
  public:
    DenseMatrix(Field field, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    /// Basis of the right kernel {v : A v = 0}, one vector per non-pivot
    /// column, in reduced echelon shape (deterministic).
    std::vector<std::vector<FieldElement>> kernel_basis() const;

    /// True iff `v` lies in the row span.
    bool row_span_contains(const std::vector<FieldElement>& v) const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

}  // namespace gradix

#endif
