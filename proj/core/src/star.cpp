#include "gradix/star.hpp"

#include <algorithm>

#include "gradix/linalg.hpp"

namespace gradix {

namespace {

// x_j -> u^(W e_j) x_j applied to f, with the componentwise-minimal u-power
// divided out so all u-exponents are nonnegative. The result is homogeneous
// for the combined grading deg u_i = -e_i, deg x_j = W e_j.
Polynomial torus_twist(const Polynomial& f, const GradingMap& grading, const Ring& ext,
                       MonomialOrder order, std::size_t lead_aux) {
    const std::size_t m = grading.rank();
    const std::size_t n = f.ring().nvars();
    std::vector<DegreeVector> degs;
    degs.reserve(f.term_count());
    DegreeVector mins(m, 0);
    bool first = true;
    for (const auto& t : f.terms()) {
        degs.push_back(grading.degree_of(t.mono));
        for (std::size_t i = 0; i < m; ++i)
            mins[i] = first ? degs.back()[i] : std::min(mins[i], degs.back()[i]);
        first = false;
    }
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (std::size_t k = 0; k < f.terms().size(); ++k) {
        const Term& t = f.terms()[k];
        std::vector<std::int32_t> e(ext.nvars(), 0);
        for (std::size_t i = 0; i < m; ++i)
            e[lead_aux + i] = static_cast<std::int32_t>(degs[k][i] - mins[i]);
        for (std::size_t j = 0; j < n; ++j)
            e[lead_aux + m + j] = t.mono.exponent(j);
        terms.push_back(Term{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial(ext, order, terms);
}

}  // namespace

StarResult star(const Ideal& ideal, const GradingMap& grading) {
    const Ring& ring = ideal.ring();
    if (grading.nvars() != ring.nvars())
        throw usage_error("grading does not match the ring's variable count");
    const std::size_t m = grading.rank();

    auto aux = ring.fresh_names("u", m);
    auto sat = ring.fresh_names("z", 1);
    std::vector<std::string> prefix = {sat[0]};
    prefix.insert(prefix.end(), aux.begin(), aux.end());
    Ring ext = ring.with_prepended(prefix);
    MonomialOrder elim = MonomialOrder::elimination_block(1 + m);

    std::vector<Polynomial> gens;
    for (const auto& f : ideal.generators())
        gens.push_back(torus_twist(f, grading, ext, elim, 1));

    // 1 - z * u_1...u_m; eliminating z saturates by the u product.
    std::vector<std::int32_t> e(ext.nvars(), 0);
    e[0] = 1;
    for (std::size_t i = 0; i < m; ++i) e[1 + i] = 1;
    Polynomial zu = Polynomial::monomial(ext, elim, FieldElement::one(ring.field()), Monomial(e));
    gens.push_back(Polynomial::constant(ext, elim, FieldElement::one(ring.field())) - zu);

    GroebnerBasis gb = buchberger(ext, elim, gens);

    std::vector<Polynomial> contracted;
    for (const auto& g : gb.elements()) {
        bool pure = true;
        for (const auto& t : g.terms())
            for (std::size_t v = 0; v < 1 + m && pure; ++v)
                if (t.mono.exponent(v) != 0) pure = false;
        if (pure) contracted.push_back(map_to_ring(g, ring, MonomialOrder::grevlex()));
    }

    StarResult result{Ideal(ring, contracted), {}};
    for (const auto& g : contracted) {
        if (!is_homogeneous(g, grading))
            throw error("internal: star produced a non-homogeneous generator " + g.to_string());
        if (!ideal.contains(g))
            throw error("internal: star generator escapes the input ideal: " + g.to_string());
        result.witnesses.emplace_back(g, g);
    }
    return result;
}

Ideal star_truncated_oracle(const Ideal& ideal, const GradingMap& grading, std::int64_t bound) {
    const Ring& ring = ideal.ring();
    if (grading.nvars() != ring.nvars())
        throw usage_error("grading does not match the ring's variable count");
    if (!grading.nonnegative())
        throw precondition_error("truncated star oracle requires nonnegative weights");
    if (bound < 0) throw precondition_error("negative degree bound");

    MonomialOrder order = MonomialOrder::grevlex();
    const GroebnerBasis& gb = ideal.canonical_basis();

    std::map<DegreeVector, std::vector<Monomial>> groups;
    for (const auto& mono : monomials_up_to_degree(ring.nvars(), bound))
        groups[grading.degree_of(mono)].push_back(mono);

    std::vector<Polynomial> found;
    for (const auto& [deg, monos] : groups) {
        std::vector<Polynomial> residues;
        residues.reserve(monos.size());
        std::map<Monomial, std::size_t> support;
        for (const auto& mono : monos) {
            residues.push_back(normal_form(
                Polynomial::monomial(ring, order, FieldElement::one(ring.field()), mono), gb));
            for (const auto& t : residues.back().terms()) support.emplace(t.mono, 0);
        }
        std::size_t next = 0;
        for (auto& [mono, idx] : support) idx = next++;

        DenseMatrix mat(ring.field(), support.size(), monos.size());
        for (std::size_t c = 0; c < residues.size(); ++c)
            for (const auto& t : residues[c].terms()) mat.at(support[t.mono], c) = t.coeff;

        for (const auto& v : mat.kernel_basis()) {
            std::vector<Term> terms;
            for (std::size_t c = 0; c < monos.size(); ++c)
                if (!v[c].is_zero()) terms.push_back(Term{v[c], monos[c]});
            found.push_back(Polynomial(ring, order, terms));
        }
    }
    return Ideal(ring, std::move(found));
}

bool is_graded(const Ideal& ideal, const GradingMap& grading) {
    for (const auto& g : ideal.canonical_basis().elements())
        for (const auto& [deg, component] : homogeneous_components(g, grading))
            if (!ideal.contains(component)) return false;
    return true;
}

StarPrimeReport star_of_prime_check(const Ideal& prime, const GradingMap& grading) {
    StarResult sr = star(prime, grading);
    StarPrimeReport report{sr.star_ideal, false, false, ""};
    report.graded = is_graded(report.star_ideal, grading);

    const auto& basis = report.star_ideal.canonical_basis().elements();
    if (basis.empty()) {
        report.prime = true;  // the zero ideal of a domain
        report.note = "zero ideal";
    } else if (ideal_equal(report.star_ideal, prime)) {
        report.prime = true;
        report.note = "fixed point of star";
    } else if (basis.size() == 1 && basis[0].total_degree() == 1) {
        report.prime = true;  // a linear form is irreducible
        report.note = "principal, linear generator";
    } else {
        report.note = "primality not determined on this class";
    }
    return report;
}

}  // namespace gradix
