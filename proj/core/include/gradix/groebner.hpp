#ifndef GRADIX_GROEBNER_HPP
#define GRADIX_GROEBNER_HPP

#include <vector>

#include "gradix/polynomial.hpp"

namespace gradix {

/// Reduced Groebner basis: monic elements, no term of one divisible by the
/// leading monomial of another, sorted ascending by leading monomial. For a
/// fixed ideal and order this representation is canonical.
class GroebnerBasis {
  public:
    GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements)
        : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {}

    const Ring& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    bool is_trivial_unit() const;  // basis == {1}
    bool is_zero_ideal() const { return elements_.empty(); }

    bool operator==(const GroebnerBasis& o) const;

  private:
    Ring ring_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

/// S-polynomial of two nonzero polynomials under their common order.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Deterministic full normal form: the highest reducible term is always
/// rewritten by the first basis element (in stored order) whose leading
/// monomial divides it. The result has no term divisible by any leading
/// monomial of the basis, and f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reducers);

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// Gebauer-Moeller pair-elimination criteria; output is the reduced basis.
GroebnerBasis buchberger(const Ring& ring, MonomialOrder order,
                         const std::vector<Polynomial>& generators);

}  // namespace gradix

#endif
