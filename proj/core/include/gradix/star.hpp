#ifndef GRADIX_STAR_HPP
#define GRADIX_STAR_HPP

#include "gradix/grading.hpp"
#include "gradix/ideal.hpp"

namespace gradix {

/// Result of the largest-graded-subideal computation. Every generator of the
/// output is itself a homogeneous member of the input ideal; `witnesses`
/// pairs each generator with that certificate (here the generator itself,
/// re-verified), keeping the computation self-auditing.
struct StarResult {
    Ideal star_ideal;
    std::vector<std::pair<Polynomial, Polynomial>> witnesses;
};

/// Largest graded subideal of `ideal` with respect to `grading`.
///
/// Method: in k[u_1..u_m, x_1..x_n] substitute x_j -> u^(W e_j) x_j into each
/// generator, clear u-denominators per generator (this absorbs negative
/// weights), saturate by u_1*...*u_m, and eliminate the u block. Each scaled
/// generator is homogeneous for the combined grading deg u_i = -e_i,
/// deg x_j = W e_j, so the contraction is graded; specializing u = 1 maps the
/// extended ideal into the input, giving containment, and homogeneous members
/// of the input survive the substitution up to a unit power of u.
StarResult star(const Ideal& ideal, const GradingMap& grading);

/// Degree-truncated brute force: for every group of monomials of total degree
/// <= bound sharing one grading degree, solve exactly for the combinations
/// lying in the ideal, and return the ideal those homogeneous members
/// generate. Requires nonnegative weights.
Ideal star_truncated_oracle(const Ideal& ideal, const GradingMap& grading, std::int64_t bound);

/// True iff every homogeneous component of every reduced-basis element lies
/// in the ideal (equivalently, the ideal is graded).
bool is_graded(const Ideal& ideal, const GradingMap& grading);

/// Report for star applied to a constructed prime (a rational point's maximal
/// ideal or a principal prime): records the star ideal and the structural
/// checks that it is graded and prime on this class.
struct StarPrimeReport {
    Ideal star_ideal;
    bool graded = false;
    bool prime = false;
    std::string note;
};

StarPrimeReport star_of_prime_check(const Ideal& prime, const GradingMap& grading);

}  // namespace gradix

#endif
