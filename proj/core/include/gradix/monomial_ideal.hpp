#ifndef GRADIX_MONOMIAL_IDEAL_HPP
#define GRADIX_MONOMIAL_IDEAL_HPP

#include <vector>

#include "gradix/ideal.hpp"

namespace gradix {

/// Ideal generated by monomials, kept as the minimal generating set (an
/// antichain under divisibility), canonically sorted by exponent vector.
class MonomialIdeal {
  public:
    MonomialIdeal(Ring ring, std::vector<Monomial> generators);

    const Ring& ring() const { return ring_; }
    const std::vector<Monomial>& minimal_generators() const { return gens_; }

    bool contains(const Monomial& m) const;
    /// Membership both ways on minimal generators.
    bool equals(const MonomialIdeal& o) const;
    bool subset_of(const MonomialIdeal& o) const;

    MonomialIdeal intersect(const MonomialIdeal& o) const;

    /// Every minimal generator is a power of a single variable.
    bool is_pure_powers() const;
    /// Every minimal generator is squarefree.
    bool is_squarefree() const;

    Ideal as_ideal() const;
    std::string to_string() const;

  private:
    Ring ring_;
    std::vector<Monomial> gens_;
};

struct IrreducibleDecomposition {
    std::vector<MonomialIdeal> components;
    std::size_t count() const { return components.size(); }
};

/// Irredundant decomposition into ideals generated by pure variable powers,
/// by recursive generator splitting followed by redundancy pruning.
IrreducibleDecomposition irreducible_decomposition(const MonomialIdeal& ideal);

/// Component count of the irredundant irreducible decomposition.
std::size_t index_of_reducibility_monomial(const MonomialIdeal& ideal);

/// Minimal primes of a squarefree monomial ideal as variable-index subsets
/// (the inclusion-minimal vertex covers of the generator supports).
std::vector<std::vector<std::size_t>> minimal_primes_squarefree(const MonomialIdeal& ideal);

}  // namespace gradix

#endif
