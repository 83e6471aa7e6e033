#include "gradix/artinian.hpp"

#include <algorithm>

#include "gradix/linalg.hpp"

namespace gradix {

bool is_zero_dimensional(const Ideal& ideal) {
    const GroebnerBasis& gb = ideal.canonical_basis();
    if (gb.is_trivial_unit()) return true;  // the zero ring
    const std::size_t n = ideal.ring().nvars();
    // Finite staircase iff some leading monomial is a pure power of each variable.
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& g : gb.elements()) {
            const Monomial& lm = g.leading_monomial();
            if (lm.exponent(v) > 0 && lm.support_size() == 1) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

QuotientBasis standard_monomials(const Ideal& ideal) {
    if (!is_zero_dimensional(ideal))
        throw dimension_error("standard monomials require a zero-dimensional ideal");
    const GroebnerBasis& gb = ideal.canonical_basis();
    const std::size_t n = ideal.ring().nvars();

    std::vector<std::int32_t> cap(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (const auto& g : gb.elements()) {
            const Monomial& lm = g.leading_monomial();
            if (lm.exponent(v) > 0 && lm.support_size() == 1)
                cap[v] = cap[v] == 0 ? lm.exponent(v) : std::min(cap[v], lm.exponent(v));
        }

    std::vector<Monomial> staircase;
    std::vector<std::int32_t> current(n, 0);
    auto reducible = [&](const Monomial& m) {
        return std::any_of(gb.elements().begin(), gb.elements().end(),
                           [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
    };
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            Monomial m(current);
            if (!reducible(m)) staircase.push_back(std::move(m));
            return;
        }
        for (std::int32_t e = 0; e < std::max(cap[pos], 1); ++e) {
            current[pos] = e;
            self(self, pos + 1);
        }
        current[pos] = 0;
    };
    if (!gb.is_trivial_unit()) rec(rec, 0);

    MonomialOrder order = MonomialOrder::grevlex();
    std::sort(staircase.begin(), staircase.end(),
              [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    return QuotientBasis{ideal, std::move(staircase)};
}

bool is_m_primary(const Ideal& ideal) {
    if (ideal.is_unit_ideal()) return false;  // primary ideals are proper
    if (!is_zero_dimensional(ideal)) return false;
    QuotientBasis basis = standard_monomials(ideal);
    const std::size_t n = ideal.ring().nvars();
    const std::int32_t bound = static_cast<std::int32_t>(basis.dim()) + 1;
    for (std::size_t v = 0; v < n; ++v) {
        Polynomial power = Polynomial::monomial(ideal.ring(), MonomialOrder::grevlex(),
                                                FieldElement::one(ideal.ring().field()),
                                                Monomial::variable(n, v, bound));
        if (!ideal.contains(power)) return false;
    }
    return true;
}

namespace {

// Multiplication-by-x_v endomorphism of R/I on the standard-monomial basis.
DenseMatrix multiplication_matrix(const QuotientBasis& basis, std::size_t v) {
    const Ring& ring = basis.ideal.ring();
    const std::size_t d = basis.dim();
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index[basis.standard_monomials[i]] = i;

    DenseMatrix mat(ring.field(), d, d);
    MonomialOrder order = MonomialOrder::grevlex();
    const GroebnerBasis& gb = basis.ideal.canonical_basis();
    for (std::size_t c = 0; c < d; ++c) {
        Monomial shifted = basis.standard_monomials[c] * Monomial::variable(ring.nvars(), v);
        Polynomial nf = normal_form(
            Polynomial::monomial(ring, order, FieldElement::one(ring.field()), shifted), gb);
        for (const auto& t : nf.terms()) mat.at(index.at(t.mono), c) = t.coeff;
    }
    return mat;
}

}  // namespace

SocleBasis socle(const Ideal& ideal) {
    if (!is_m_primary(ideal))
        throw precondition_error("socle requires an ideal primary to the ideal of all variables");
    QuotientBasis basis = standard_monomials(ideal);
    const Ring& ring = ideal.ring();
    const std::size_t n = ring.nvars();
    const std::size_t d = basis.dim();

    // Stacked system: v in the common kernel of all multiplication maps.
    DenseMatrix stacked(ring.field(), n * d, d);
    for (std::size_t v = 0; v < n; ++v) {
        DenseMatrix mv = multiplication_matrix(basis, v);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) stacked.at(v * d + r, c) = mv.at(r, c);
    }

    SocleBasis out;
    for (const auto& v : stacked.kernel_basis()) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < d; ++i)
            if (!v[i].is_zero()) terms.push_back(Term{v[i], basis.standard_monomials[i]});
        out.elements.push_back(Polynomial(ring, MonomialOrder::grevlex(), terms));
    }
    return out;
}

std::size_t index_of_reducibility_primary(const Ideal& ideal) { return socle(ideal).rank(); }

bool is_irreducible_primary(const Ideal& ideal) {
    return index_of_reducibility_primary(ideal) == 1;
}

}  // namespace gradix
