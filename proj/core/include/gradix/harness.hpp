#ifndef GRADIX_HARNESS_HPP
#define GRADIX_HARNESS_HPP

#include <cstdint>
#include <vector>

#include "gradix/artinian.hpp"
#include "gradix/monomial_ideal.hpp"
#include "gradix/report.hpp"
#include "gradix/star.hpp"

namespace gradix {

/// Planar rational points, pairwise distinct and never the origin. The ideal
/// of such a configuration is radical with one minimal prime per point, which
/// makes its index of reducibility known by construction.
struct PointConfiguration {
    Field field;
    std::vector<std::pair<FieldElement, FieldElement>> points;
};

/// Validates the invariants and fixes the ambient ring QQ[x,y] (or the
/// configured field).
PointConfiguration make_point_configuration(
    const Field& field, const std::vector<std::pair<FieldElement, FieldElement>>& points);

Ring point_ring(const PointConfiguration& config);

/// Intersection of the maximal ideals (x - a_i, y - b_i).
Ideal ideal_of_points(const PointConfiguration& config);

/// The vanishing ideal of the line through the origin and (a, b): (b x - a y).
Ideal line_ideal_of_point(const Ring& ring, const FieldElement& a, const FieldElement& b);

/// Comparison of the reducibility indices of a point ideal and its largest
/// graded subideal under the standard grading. The counts are ground truth by
/// construction (points for the ideal, distinct directions through the origin
/// for its star); the engine's star output is checked against the predicted
/// intersection of line ideals.
struct StarComparisonReport {
    std::size_t ir_ideal = 0;
    std::size_t ir_star = 0;
    bool bijective = false;            // the star map matches components one-to-one
    bool inequality_holds = false;     // ir_ideal >= ir_star
    bool star_matches_prediction = false;
    bool star_components_prime = false;
    Ideal star_ideal;
    /// point -> generator of its star image, printed.
    std::vector<std::pair<std::string, std::string>> details;
};

StarComparisonReport theorem51_check(const PointConfiguration& config);

/// Golden values: the three built-in reference examples (the collinear point
/// family and the two primary ideals with socle ranks 1/2 and 3/2), checked
/// quantity by quantity.
Report reference_examples_report(std::vector<Ideal>* collect = nullptr);

/// Randomized suite over point configurations: inequality, the bijection
/// criterion, the predicted star ideal, primality of the per-point star
/// images, and star/intersection commutation.
Report theorem51_suite(std::uint64_t seed, std::size_t cases,
                       std::vector<Ideal>* collect = nullptr);

/// Randomized cross-validation on monomial ideals primary to (x_1..x_n): the
/// irreducible-decomposition count must equal the socle rank.
Report monomial_socle_suite(std::uint64_t seed, std::size_t cases,
                            std::vector<Ideal>* collect = nullptr);

/// Randomized star laws over GF(32003): containment, idempotence, the graded
/// fixed-point criterion, oracle agreement, and commutation with intersection
/// on pairs.
Report star_laws_suite(std::uint64_t seed, std::size_t cases, std::size_t pair_cases,
                       std::vector<Ideal>* collect = nullptr);

/// Randomized homogeneous matrices over GF(p)[Z^2]: unit-pivot elimination,
/// rank-nullity against an independent dense elimination, and invariance of
/// the rank under labeled row/column shuffles.
Report graded_field_suite(std::uint64_t seed, std::size_t cases);

/// Groebner soundness over a pool of ideals: every input generator and every
/// S-polynomial of the reduced basis reduces to zero, plus agreement between
/// normal-form membership and the truncated-span oracle on sampled pairs.
Report groebner_soundness_report(const std::vector<Ideal>& pool, std::uint64_t seed,
                                 std::size_t membership_pairs);

}  // namespace gradix

#endif
