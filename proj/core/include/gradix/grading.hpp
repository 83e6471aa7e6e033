#ifndef GRADIX_GRADING_HPP
#define GRADIX_GRADING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradix/polynomial.hpp"

namespace gradix {

/// Degree in the grading group Z^m. Vector comparison is lexicographic, which
/// totally orders the degrees.
using DegreeVector = std::vector<std::int64_t>;

std::string degree_to_string(const DegreeVector& d);

/// Z^m-grading of a polynomial ring given by an integer weight matrix: column
/// j is the degree of x_j. Entries may be negative.
class GradingMap {
  public:
    /// `weights` is m rows by nvars columns.
    GradingMap(std::vector<std::vector<std::int64_t>> weights, std::size_t nvars);

    /// The standard Z-grading (every variable weighs 1).
    static GradingMap standard(std::size_t nvars);
    /// The fine Z^n-grading (identity weight matrix).
    static GradingMap fine(std::size_t nvars);

    std::size_t rank() const { return weights_.size(); }  // m
    std::size_t nvars() const { return nvars_; }
    const std::vector<std::vector<std::int64_t>>& weights() const { return weights_; }
    std::int64_t weight(std::size_t row, std::size_t var) const { return weights_[row][var]; }
    bool nonnegative() const;

    DegreeVector degree_of(const Monomial& m) const;

    bool operator==(const GradingMap& o) const {
        return nvars_ == o.nvars_ && weights_ == o.weights_;
    }

    std::string to_string() const;  // [[1,1],[0,2]] style

  private:
    std::vector<std::vector<std::int64_t>> weights_;
    std::size_t nvars_;
};

/// Splits f into its homogeneous pieces; keys are the occurring degrees.
/// Empty map exactly when f = 0; the pieces sum back to f.
std::map<DegreeVector, Polynomial> homogeneous_components(const Polynomial& f,
                                                          const GradingMap& grading);

/// Homogeneity classification. The zero polynomial is homogeneous of every
/// degree and is reported with `zero` set and no degree.
struct Homogeneity {
    bool homogeneous = false;
    bool zero = false;
    std::optional<DegreeVector> degree;
};

Homogeneity classify_homogeneous(const Polynomial& f, const GradingMap& grading);
bool is_homogeneous(const Polynomial& f, const GradingMap& grading);

}  // namespace gradix

#endif
