#include "gradix/ideal.hpp"

#include <algorithm>
#include <set>

#include "gradix/linalg.hpp"

namespace gradix {

Polynomial map_to_ring(const Polynomial& f, const Ring& target, MonomialOrder order) {
    const Ring& src = f.ring();
    if (src.field() != target.field())
        throw usage_error("cannot map polynomial across coefficient fields");
    std::vector<std::optional<std::size_t>> where(src.nvars());
    for (std::size_t i = 0; i < src.nvars(); ++i)
        where[i] = target.variable_index(src.variable(i));
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        std::vector<std::int32_t> e(target.nvars(), 0);
        for (std::size_t i = 0; i < src.nvars(); ++i) {
            std::int32_t k = t.mono.exponent(i);
            if (k == 0) continue;
            if (!where[i])
                throw usage_error("variable '" + src.variable(i) +
                                  "' does not exist in ring " + target.to_string());
            e[*where[i]] += k;
        }
        terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(target, order, terms);
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::int64_t bound) {
    std::vector<Monomial> out;
    if (bound < 0) return out;
    std::vector<std::int32_t> current(nvars, 0);
    // Lexicographic enumeration by recursion over variable positions.
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t remaining) -> void {
        if (pos == nvars) {
            out.emplace_back(current);
            return;
        }
        for (std::int32_t e = 0; e <= remaining; ++e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        current[pos] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
        if (g.ring() != ring_)
            throw usage_error("generator does not belong to ring " + ring_.to_string());
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(const Ring& ring) {
    return Ideal(ring, {Polynomial::constant(ring, MonomialOrder::grevlex(),
                                             FieldElement::one(ring.field()))});
}

const GroebnerBasis& Ideal::groebner(MonomialOrder order) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it == cache_->bases.end())
        it = cache_->bases.emplace(order, buchberger(ring_, order, gens_)).first;
    return it->second;
}

bool Ideal::contains(const Polynomial& f) const {
    return normal_form(f, canonical_basis()).is_zero();
}

std::string Ideal::to_string() const {
    if (gens_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s;
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
    if (f.ring() != ideal.ring()) throw usage_error("membership across different rings");
    return ideal.contains(f);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw usage_error("ideal comparison across different rings");
    return a.canonical_basis() == b.canonical_basis();
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw usage_error("ideal comparison across different rings");
    return std::all_of(a.generators().begin(), a.generators().end(),
                       [&](const Polynomial& g) { return b.contains(g); });
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw usage_error("ideal sum across different rings");
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

namespace {

// Contract a Groebner basis computed under an elimination order back to the
// original ring: keep exactly the elements free of the auxiliary variables.
// Those elements form a reduced basis of the contraction under the order the
// block order induces on the remaining variables (grevlex here).
std::vector<Polynomial> contract_basis(const GroebnerBasis& basis, const Ring& aux_ring,
                                       std::size_t aux_count, const Ring& target) {
    std::vector<Polynomial> out;
    for (const auto& g : basis.elements()) {
        bool pure = true;
        for (const auto& t : g.terms()) {
            for (std::size_t v = 0; v < aux_count && pure; ++v)
                if (t.mono.exponent(v) != 0) pure = false;
            if (!pure) break;
        }
        if (pure) out.push_back(map_to_ring(g, target, MonomialOrder::grevlex()));
    }
    (void)aux_ring;
    return out;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw usage_error("intersection across different rings");
    const Ring& ring = a.ring();
    auto names = ring.fresh_names("t", 1);
    Ring ext = ring.with_prepended(names);
    MonomialOrder elim = MonomialOrder::elimination_block(1);
    Polynomial t = Polynomial::variable(ext, elim, 0);
    Polynomial one = Polynomial::constant(ext, elim, FieldElement::one(ring.field()));

    std::vector<Polynomial> gens;
    for (const auto& f : a.generators()) gens.push_back(t * map_to_ring(f, ext, elim));
    for (const auto& g : b.generators()) gens.push_back((one - t) * map_to_ring(g, ext, elim));
    GroebnerBasis gb = buchberger(ext, elim, gens);
    return Ideal(ring, contract_basis(gb, ext, 1, ring));
}

std::optional<Polynomial> try_divide(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw usage_error("division by the zero polynomial");
    Polynomial rest = g.ring() == f.ring() && g.order() == f.order()
                          ? g
                          : map_to_ring(g, f.ring(), f.order());
    Polynomial q(f.ring(), f.order());
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        if (!f.leading_monomial().divides(lt.mono)) return std::nullopt;
        FieldElement c = lt.coeff / f.leading_coeff();
        Monomial m = lt.mono / f.leading_monomial();
        q = q + Polynomial::monomial(f.ring(), f.order(), c, m);
        rest = rest - f.times_term(c, m);
    }
    return q;
}

Ideal quotient(const Ideal& a, const Ideal& b) {
    if (a.ring() != b.ring()) throw usage_error("quotient across different rings");
    std::vector<Polynomial> divisors;
    for (const auto& g : b.generators())
        if (!g.is_zero()) divisors.push_back(g);
    if (divisors.empty()) return Ideal::unit(a.ring());  // (a : 0) = (1)

    std::optional<Ideal> result;
    for (const auto& f : divisors) {
        Ideal meet = intersect(a, Ideal(a.ring(), {f}));
        std::vector<Polynomial> gens;
        for (const auto& k : meet.generators()) {
            auto q = try_divide(k, f);
            if (!q) throw error("internal: intersection generator not divisible in colon");
            gens.push_back(*q);
        }
        Ideal colon(a.ring(), std::move(gens));
        result = result ? intersect(*result, colon) : colon;
    }
    return *result;
}

Ideal saturate(const Ideal& a, const Polynomial& f) {
    if (f.ring() != a.ring()) throw usage_error("saturation across different rings");
    if (f.is_zero()) throw usage_error("saturation by the zero polynomial");
    const Ring& ring = a.ring();
    auto names = ring.fresh_names("z", 1);
    Ring ext = ring.with_prepended(names);
    MonomialOrder elim = MonomialOrder::elimination_block(1);
    Polynomial z = Polynomial::variable(ext, elim, 0);
    Polynomial one = Polynomial::constant(ext, elim, FieldElement::one(ring.field()));

    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(map_to_ring(g, ext, elim));
    gens.push_back(one - z * map_to_ring(f, ext, elim));
    GroebnerBasis gb = buchberger(ext, elim, gens);
    return Ideal(ring, contract_basis(gb, ext, 1, ring));
}

Ideal eliminate(const Ideal& a, const std::vector<std::string>& variables) {
    if (variables.empty()) return a;
    const Ring& ring = a.ring();
    std::set<std::size_t> drop;
    for (const auto& name : variables) {
        auto idx = ring.variable_index(name);
        if (!idx) throw usage_error("unknown variable '" + name + "' in elimination");
        drop.insert(*idx);
    }
    // Permuted ring: eliminated variables first.
    std::vector<std::string> perm;
    for (auto i : drop) perm.push_back(ring.variable(i));
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        if (!drop.count(i)) perm.push_back(ring.variable(i));
    Ring permuted(ring.field(), perm);
    MonomialOrder elim = MonomialOrder::elimination_block(drop.size());

    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(map_to_ring(g, permuted, elim));
    GroebnerBasis gb = buchberger(permuted, elim, gens);

    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements()) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (std::size_t v = 0; v < drop.size() && pure; ++v)
                if (t.mono.exponent(v) != 0) pure = false;
        if (pure) kept.push_back(map_to_ring(g, ring, MonomialOrder::grevlex()));
    }
    return Ideal(ring, std::move(kept));
}

bool membership_span_oracle(const Polynomial& f, const Ideal& ideal, std::int64_t bound) {
    if (f.ring() != ideal.ring()) throw usage_error("membership across different rings");
    const Ring& ring = ideal.ring();
    MonomialOrder order = MonomialOrder::grevlex();

    std::vector<Polynomial> products;
    for (const auto& g : ideal.generators()) {
        std::int64_t room = bound - g.total_degree();
        if (room < 0) continue;
        for (const auto& m : monomials_up_to_degree(ring.nvars(), room))
            products.push_back(g.with_order(order).times_term(FieldElement::one(ring.field()), m));
    }

    // Column index: every monomial seen in the products or in f.
    std::map<Monomial, std::size_t> columns;
    auto index_terms = [&](const Polynomial& p) {
        for (const auto& t : p.terms()) columns.emplace(t.mono, 0);
    };
    for (const auto& p : products) index_terms(p);
    Polynomial fr = f.with_order(order);
    index_terms(fr);
    std::size_t next = 0;
    for (auto& [m, idx] : columns) idx = next++;

    DenseMatrix mat(ring.field(), products.size(), columns.size());
    for (std::size_t r = 0; r < products.size(); ++r)
        for (const auto& t : products[r].terms()) mat.at(r, columns[t.mono]) = t.coeff;

    std::vector<FieldElement> target(columns.size(), FieldElement::zero(ring.field()));
    for (const auto& t : fr.terms()) target[columns[t.mono]] = t.coeff;
    return mat.row_span_contains(target);
}

}  // namespace gradix
