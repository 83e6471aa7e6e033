#ifndef GRADIX_GRADED_FIELD_HPP
#define GRADIX_GRADED_FIELD_HPP

#include <vector>

#include "gradix/field.hpp"
#include "gradix/grading.hpp"

namespace gradix {

/// A point of the grading group Z^m.
using LatticeVector = std::vector<std::int64_t>;

/// Subgroup of Z^m in canonical form: Hermite-normal-form basis rows with
/// positive pivots and reduced entries above them.
class SupportLattice {
  public:
    SupportLattice(std::size_t ambient_rank, const std::vector<LatticeVector>& generators);

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<LatticeVector>& basis() const { return basis_; }

    bool contains(const LatticeVector& v) const;
    bool operator==(const SupportLattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    std::string to_string() const;  // ((1,1); (0,2))

  private:
    std::size_t ambient_;
    std::vector<LatticeVector> basis_;
};

SupportLattice support_lattice(std::size_t ambient_rank,
                               const std::vector<LatticeVector>& degrees);
bool membership_in_support(const LatticeVector& v, const SupportLattice& lattice);

/// Graded field presented as the group algebra k_0[G'], G' a subgroup of Z^m.
/// A homogeneous element is scalar * lattice monomial; every nonzero one is a
/// unit, which is what makes homogeneous elimination run without fractions of
/// non-units.
struct GradedFieldPresentation {
    Field base_field;
    std::size_t ambient_rank;
    SupportLattice support;
};

/// Homogeneous element c * e(v): the scalar and the lattice exponent. Zero is
/// represented by a zero scalar.
struct GradedFieldElement {
    FieldElement scalar;
    LatticeVector exponent;
    bool is_zero() const { return scalar.is_zero(); }
};

/// Matrix with degree-labeled rows and columns over a graded field; every
/// nonzero entry must be homogeneous of degree rowdeg - coldeg, which must lie
/// in the support. Rows present module generators, columns relations.
class HomogeneousMatrix {
  public:
    HomogeneousMatrix(GradedFieldPresentation presentation, std::vector<LatticeVector> row_degrees,
                      std::vector<LatticeVector> col_degrees,
                      std::vector<GradedFieldElement> entries_row_major);

    const GradedFieldPresentation& presentation() const { return pres_; }
    std::size_t rows() const { return row_degrees_.size(); }
    std::size_t cols() const { return col_degrees_.size(); }
    const std::vector<LatticeVector>& row_degrees() const { return row_degrees_; }
    const std::vector<LatticeVector>& col_degrees() const { return col_degrees_; }
    const GradedFieldElement& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols() + c];
    }

  private:
    GradedFieldPresentation pres_;
    std::vector<LatticeVector> row_degrees_;
    std::vector<LatticeVector> col_degrees_;
    std::vector<GradedFieldElement> entries_;
};

/// Outcome of homogeneous Gaussian elimination on a presentation matrix.
struct FreeModuleReport {
    std::size_t matrix_rank = 0;
    /// (row, column, pivot degree) for each elimination step; every pivot was
    /// a nonzero homogeneous element, hence a unit.
    std::vector<std::tuple<std::size_t, std::size_t, LatticeVector>> pivots;
    /// Degrees of the free generators of the cokernel, in row order.
    std::vector<LatticeVector> cokernel_degrees;
    std::size_t free_rank() const { return cokernel_degrees.size(); }
};

/// Column-reduces the presentation matrix using only homogeneous unit pivots
/// and reads off a free basis of the cokernel: the module presented by a
/// homogeneous matrix over a graded field is free of rank rows - rank.
FreeModuleReport graded_free_basis(const HomogeneousMatrix& matrix);

}  // namespace gradix

#endif
