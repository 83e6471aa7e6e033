#ifndef GRADIX_ARTINIAN_HPP
#define GRADIX_ARTINIAN_HPP

#include "gradix/ideal.hpp"

namespace gradix {

/// Vector-space basis of R/I for a zero-dimensional ideal: the monomials
/// outside the leading-term ideal of the reduced basis.
struct QuotientBasis {
    Ideal ideal;
    std::vector<Monomial> standard_monomials;
    std::size_t dim() const { return standard_monomials.size(); }
};

/// True iff the staircase of the canonical basis is finite (the quotient is a
/// finite-dimensional vector space).
bool is_zero_dimensional(const Ideal& ideal);

/// Enumerates the staircase complement; throws dimension_error on
/// positive-dimensional input.
QuotientBasis standard_monomials(const Ideal& ideal);

/// True iff the ideal is proper and every variable is nilpotent modulo it,
/// i.e. the quotient is local at the ideal of all variables.
bool is_m_primary(const Ideal& ideal);

/// Basis of the socle (I : (x_1,..,x_n))/I as reduced representatives over
/// the standard monomials; elements are in normal form, pairwise independent
/// modulo the ideal, and each is annihilated by every variable.
struct SocleBasis {
    std::vector<Polynomial> elements;
    std::size_t rank() const { return elements.size(); }
};

SocleBasis socle(const Ideal& ideal);

/// Number of components of any irredundant irreducible decomposition of an
/// ideal primary to the ideal of all variables: the socle rank.
std::size_t index_of_reducibility_primary(const Ideal& ideal);

bool is_irreducible_primary(const Ideal& ideal);

}  // namespace gradix

#endif
