#include "gradix/graded_field.hpp"

#include <algorithm>
#include <cstdlib>

namespace gradix {

namespace {

LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

}  // namespace

SupportLattice::SupportLattice(std::size_t ambient_rank,
                               const std::vector<LatticeVector>& generators)
    : ambient_(ambient_rank) {
    std::vector<LatticeVector> rows;
    for (const auto& g : generators) {
        if (g.size() != ambient_)
            throw usage_error("lattice generator has the wrong length");
        rows.push_back(g);
    }
    // Row Hermite normal form by Euclidean row operations.
    std::size_t top = 0;
    for (std::size_t col = 0; col < ambient_ && top < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best == rows.size() ||
                     std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
                    best = r;
            if (best == rows.size()) break;  // column is clear below top
            std::swap(rows[top], rows[best]);
            bool clear = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                std::int64_t q = rows[r][col] / rows[top][col];
                for (std::size_t c = 0; c < ambient_; ++c) rows[r][c] -= q * rows[top][c];
                if (rows[r][col] != 0) clear = false;
            }
            if (clear) break;
        }
        if (rows[top][col] == 0) continue;
        if (rows[top][col] < 0)
            for (auto& v : rows[top]) v = -v;
        ++top;
    }
    rows.resize(top);
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t pc = 0;
        while (pc < ambient_ && rows[r][pc] == 0) ++pc;
        for (std::size_t above = 0; above < r; ++above) {
            std::int64_t v = rows[above][pc];
            std::int64_t p = rows[r][pc];
            std::int64_t q = (v % p + p) % p;  // target residue
            std::int64_t k = (v - q) / p;
            for (std::size_t c = 0; c < ambient_; ++c) rows[above][c] -= k * rows[r][c];
        }
    }
    basis_ = std::move(rows);
}

bool SupportLattice::contains(const LatticeVector& v) const {
    if (v.size() != ambient_) throw usage_error("lattice point has the wrong length");
    LatticeVector g = v;
    for (const auto& row : basis_) {
        std::size_t pc = 0;
        while (pc < ambient_ && row[pc] == 0) ++pc;
        if (pc == ambient_) continue;
        if (g[pc] % row[pc] != 0) {
            if (g[pc] != 0) return false;
            continue;
        }
        std::int64_t q = g[pc] / row[pc];
        for (std::size_t c = 0; c < ambient_; ++c) g[c] -= q * row[c];
    }
    return std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; });
}

std::string SupportLattice::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += "; ";
        s += degree_to_string(basis_[i]);
    }
    return s + ")";
}

SupportLattice support_lattice(std::size_t ambient_rank,
                               const std::vector<LatticeVector>& degrees) {
    return SupportLattice(ambient_rank, degrees);
}

bool membership_in_support(const LatticeVector& v, const SupportLattice& lattice) {
    return lattice.contains(v);
}

HomogeneousMatrix::HomogeneousMatrix(GradedFieldPresentation presentation,
                                     std::vector<LatticeVector> row_degrees,
                                     std::vector<LatticeVector> col_degrees,
                                     std::vector<GradedFieldElement> entries_row_major)
    : pres_(std::move(presentation)),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(std::move(entries_row_major)) {
    if (entries_.size() != row_degrees_.size() * col_degrees_.size())
        throw usage_error("entry count does not match the matrix shape");
    for (const auto& d : row_degrees_)
        if (d.size() != pres_.ambient_rank) throw usage_error("row degree has the wrong length");
    for (const auto& d : col_degrees_)
        if (d.size() != pres_.ambient_rank) throw usage_error("column degree has the wrong length");
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            const GradedFieldElement& e = at(r, c);
            if (e.is_zero()) continue;
            if (e.scalar.field() != pres_.base_field)
                throw usage_error("entry scalar is not in the base field");
            LatticeVector expected = subtract(row_degrees_[r], col_degrees_[c]);
            if (e.exponent != expected)
                throw precondition_error("non-homogeneous entry at row " + std::to_string(r) +
                                         ", column " + std::to_string(c) + ": degree " +
                                         degree_to_string(e.exponent) + ", labels demand " +
                                         degree_to_string(expected));
            if (!pres_.support.contains(e.exponent))
                throw precondition_error("entry degree " + degree_to_string(e.exponent) +
                                         " lies outside the support lattice");
        }
    }
}

FreeModuleReport graded_free_basis(const HomogeneousMatrix& matrix) {
    const std::size_t nr = matrix.rows();
    const std::size_t nc = matrix.cols();
    const Field& k0 = matrix.presentation().base_field;

    // Scalar working copy; degrees of entries stay pinned to the labels, so
    // the column operations below combine only equal-degree terms.
    std::vector<FieldElement> a(nr * nc, FieldElement::zero(k0));
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) a[r * nc + c] = matrix.at(r, c).scalar;

    FreeModuleReport report;
    std::vector<bool> col_used(nc, false);
    std::vector<bool> row_pivotal(nr, false);
    for (std::size_t r = 0; r < nr; ++r) {
        std::size_t pivot_col = nc;
        for (std::size_t c = 0; c < nc; ++c)
            if (!col_used[c] && !a[r * nc + c].is_zero()) {
                pivot_col = c;
                break;
            }
        if (pivot_col == nc) continue;

        const FieldElement pivot = a[r * nc + pivot_col];
        LatticeVector pivot_degree =
            subtract(matrix.row_degrees()[r], matrix.col_degrees()[pivot_col]);
        // Unit-pivot witness: nonzero scalar, degree inside the support.
        if (pivot.is_zero() || !matrix.presentation().support.contains(pivot_degree))
            throw error("internal: pivot is not a unit of the graded field");

        FieldElement inv = pivot.invert();
        for (std::size_t c = 0; c < nc; ++c) {
            if (c == pivot_col || a[r * nc + c].is_zero()) continue;
            FieldElement factor = a[r * nc + c] * inv;
            for (std::size_t i = 0; i < nr; ++i)
                a[i * nc + c] -= factor * a[i * nc + pivot_col];
        }
        col_used[pivot_col] = true;
        row_pivotal[r] = true;
        report.pivots.emplace_back(r, pivot_col, std::move(pivot_degree));
    }
    report.matrix_rank = report.pivots.size();
    for (std::size_t r = 0; r < nr; ++r)
        if (!row_pivotal[r]) report.cokernel_degrees.push_back(matrix.row_degrees()[r]);
    return report;
}

}  // namespace gradix
