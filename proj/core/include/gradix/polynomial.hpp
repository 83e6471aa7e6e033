#ifndef GRADIX_POLYNOMIAL_HPP
#define GRADIX_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gradix/field.hpp"
#include "gradix/monomial.hpp"
#include "gradix/ring.hpp"

namespace gradix {

struct Term {
    FieldElement coeff;
    Monomial mono;
};

/// Sparse multivariate polynomial: nonzero terms kept strictly descending in
/// the attached monomial order. The zero polynomial is the empty term list.
class Polynomial {
  public:
    /// Zero polynomial.
    Polynomial(Ring ring, MonomialOrder order)
        : ring_(std::move(ring)), order_(order) {}
    /// From arbitrary (coeff, monomial) pairs; merges duplicates, drops zeros.
    Polynomial(Ring ring, MonomialOrder order, const std::vector<Term>& terms);

    static Polynomial zero(const Ring& ring, MonomialOrder order) { return {ring, order}; }
    static Polynomial constant(const Ring& ring, MonomialOrder order, const FieldElement& c);
    static Polynomial monomial(const Ring& ring, MonomialOrder order, const FieldElement& c,
                               const Monomial& m);
    static Polynomial variable(const Ring& ring, MonomialOrder order, std::size_t index);

    const Ring& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Largest total degree over the terms; -1 for the zero polynomial.
    std::int64_t total_degree() const;

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const FieldElement& leading_coeff() const { return leading_term().coeff; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    /// Multiply by a single term c*m.
    Polynomial times_term(const FieldElement& c, const Monomial& m) const;
    Polynomial times_scalar(const FieldElement& c) const;
    /// Leading coefficient scaled to 1.
    Polynomial monic() const;

    /// Same polynomial re-sorted under another order.
    Polynomial with_order(MonomialOrder order) const;
    /// Structural equality as ring elements (independent of the stored order).
    bool equals(const Polynomial& o) const;

    FieldElement coefficient_of(const Monomial& m) const;
    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    std::string to_string() const;

  private:
    void check_compatible(const Polynomial& o) const;

    Ring ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

}  // namespace gradix

#endif
