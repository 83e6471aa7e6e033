#include "gradix/groebner.hpp"

#include <algorithm>
#include <list>

namespace gradix {

bool GroebnerBasis::is_trivial_unit() const {
    return elements_.size() == 1 && elements_[0].term_count() == 1 &&
           elements_[0].leading_monomial().is_unit();
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    if (ring_ != o.ring_ || order_ != o.order_ || elements_.size() != o.elements_.size())
        return false;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (!elements_[i].equals(o.elements_[i])) return false;
    return true;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    Polynomial a = f.times_term(f.leading_coeff().invert(), l / f.leading_monomial());
    Polynomial b = g.times_term(g.leading_coeff().invert(), l / g.leading_monomial());
    return a - b;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& reducers) {
    Polynomial rest = f;
    Polynomial result(f.ring(), f.order());
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        const Polynomial* reducer = nullptr;
        for (const auto& g : reducers) {
            if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            FieldElement c = lt.coeff / reducer->leading_coeff();
            rest = rest - reducer->times_term(c, lt.mono / reducer->leading_monomial());
        } else {
            // Head term is irreducible; move it to the result.
            result = result + Polynomial(f.ring(), f.order(), {lt});
            rest = rest - Polynomial(f.ring(), f.order(), {lt});
        }
    }
    return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.ring() != basis.ring())
        throw usage_error("normal form across different rings");
    Polynomial g = f.order() == basis.order() ? f : f.with_order(basis.order());
    return normal_form(g, basis.elements());
}

namespace {

struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
};

// Interreduce a generating set that is already a Groebner basis: drop
// elements with redundant leading monomials, then fully reduce each element
// against the others and scale monic. Output sorted ascending by LM.
std::vector<Polynomial> reduce_basis(const Ring& ring, MonomialOrder order,
                                     std::vector<Polynomial> basis) {
    // Minimal leading monomials only.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial nf = normal_form(minimal[i], others);
        reduced.push_back(nf.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(), b.leading_monomial());
    });
    return reduced;
}

}  // namespace

GroebnerBasis buchberger(const Ring& ring, MonomialOrder order,
                         const std::vector<Polynomial>& generators) {
    std::vector<Polynomial> basis;
    std::list<Pair> pairs;

    // Gebauer-Moeller update: add h to the basis, pruning the pair set.
    auto update = [&](const Polynomial& h) {
        const std::size_t t = basis.size();
        const Monomial& lm_h = h.leading_monomial();

        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i)
            fresh.push_back(Pair{i, t, basis[i].leading_monomial().lcm(lm_h)});

        // Criterion M: drop (i,t) when another new pair's lcm properly divides its lcm.
        std::vector<bool> keep(fresh.size(), true);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
                if (a == b || !keep[b]) continue;
                if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm))
                    keep[a] = false;
            }
        }
        // Criterion F: of pairs sharing one lcm keep only the first.
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            for (std::size_t b = a + 1; b < fresh.size(); ++b)
                if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
        }
        // Criterion B (Buchberger's coprime test) on the survivors.
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (keep[a] &&
                basis[fresh[a].i].leading_monomial().coprime(lm_h))
                keep[a] = false;
        }
        // Prune old pairs strictly subsumed by h.
        for (auto it = pairs.begin(); it != pairs.end();) {
            const Monomial& lij = it->lcm;
            if (lm_h.divides(lij) &&
                basis[it->i].leading_monomial().lcm(lm_h) != lij &&
                basis[it->j].leading_monomial().lcm(lm_h) != lij) {
                it = pairs.erase(it);
            } else {
                ++it;
            }
        }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (keep[a]) pairs.push_back(fresh[a]);
        basis.push_back(h.monic());
    };

    for (const auto& g : generators) {
        if (g.ring() != ring) throw usage_error("generator from a different ring");
        Polynomial h = normal_form(g.with_order(order), basis);
        if (!h.is_zero()) update(h);
    }

    while (!pairs.empty()) {
        // Normal strategy: smallest lcm in the active order, ties by indices.
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            int c = order.compare(it->lcm, best->lcm);
            if (c < 0 || (c == 0 && (it->i < best->i || (it->i == best->i && it->j < best->j))))
                best = it;
        }
        Pair p = *best;
        pairs.erase(best);
        Polynomial s = s_polynomial(basis[p.i], basis[p.j]);
        Polynomial h = normal_form(s, basis);
        if (!h.is_zero()) update(h);
    }

    return GroebnerBasis(ring, order, reduce_basis(ring, order, std::move(basis)));
}

}  // namespace gradix
