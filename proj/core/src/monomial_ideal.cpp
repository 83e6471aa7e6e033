#include "gradix/monomial_ideal.hpp"

#include <algorithm>

namespace gradix {

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
    for (auto& m : generators) {
        if (m.nvars() != ring_.nvars())
            throw usage_error("monomial arity does not match ring " + ring_.to_string());
        bool redundant = false;
        for (const auto& g : gens_)
            if (g.divides(m)) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        std::erase_if(gens_, [&](const Monomial& g) { return m.divides(g); });
        gens_.push_back(std::move(m));
    }
    std::sort(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::subset_of(const MonomialIdeal& o) const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return o.contains(g); });
}

bool MonomialIdeal::equals(const MonomialIdeal& o) const {
    return gens_ == o.gens_;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
    std::vector<Monomial> meet;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) meet.push_back(a.lcm(b));
    return MonomialIdeal(ring_, std::move(meet));
}

bool MonomialIdeal::is_pure_powers() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.support_size() <= 1; });
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        for (std::size_t v = 0; v < g.nvars(); ++v)
            if (g.exponent(v) > 1) return false;
    return true;
}

Ideal MonomialIdeal::as_ideal() const {
    std::vector<Polynomial> gens;
    for (const auto& m : gens_)
        gens.push_back(Polynomial::monomial(ring_, MonomialOrder::grevlex(),
                                            FieldElement::one(ring_.field()), m));
    return Ideal(ring_, std::move(gens));
}

std::string MonomialIdeal::to_string() const { return as_ideal().to_string(); }

namespace {

void split_recursive(const MonomialIdeal& ideal, std::vector<MonomialIdeal>& leaves) {
    const auto& gens = ideal.minimal_generators();
    // Pivot: first generator touching at least two variables, split at its
    // first variable. Any pivot choice prunes to the same irredundant set.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].support_size() < 2) continue;
        std::size_t v = 0;
        while (gens[i].exponent(v) == 0) ++v;
        Monomial u = Monomial::variable(gens[i].nvars(), v, gens[i].exponent(v));
        Monomial rest = gens[i] / u;

        std::vector<Monomial> left, right;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == i) continue;
            left.push_back(gens[j]);
            right.push_back(gens[j]);
        }
        left.push_back(u);
        right.push_back(rest);
        split_recursive(MonomialIdeal(ideal.ring(), std::move(left)), leaves);
        split_recursive(MonomialIdeal(ideal.ring(), std::move(right)), leaves);
        return;
    }
    leaves.push_back(ideal);
}

}  // namespace

IrreducibleDecomposition irreducible_decomposition(const MonomialIdeal& ideal) {
    std::vector<MonomialIdeal> leaves;
    split_recursive(ideal, leaves);

    // Dedupe, then drop components containing another one (their intersection
    // is the smaller component).
    std::vector<MonomialIdeal> unique;
    for (const auto& c : leaves) {
        bool seen = std::any_of(unique.begin(), unique.end(),
                                [&](const MonomialIdeal& u) { return u.equals(c); });
        if (!seen) unique.push_back(c);
    }
    std::vector<MonomialIdeal> kept;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < unique.size() && !redundant; ++j) {
            if (i == j) continue;
            if (unique[j].subset_of(unique[i]) &&
                (!unique[i].subset_of(unique[j]) || j < i))
                redundant = true;
        }
        if (!redundant) kept.push_back(unique[i]);
    }
    // Full irredundance: drop any component containing the meet of the others.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::optional<MonomialIdeal> meet;
            for (std::size_t j = 0; j < kept.size(); ++j) {
                if (i == j) continue;
                meet = meet ? meet->intersect(kept[j]) : kept[j];
            }
            if (meet && meet->subset_of(kept[i])) {
                kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    std::sort(kept.begin(), kept.end(), [](const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.minimal_generators() < b.minimal_generators();
    });
    return IrreducibleDecomposition{std::move(kept)};
}

std::size_t index_of_reducibility_monomial(const MonomialIdeal& ideal) {
    return irreducible_decomposition(ideal).count();
}

std::vector<std::vector<std::size_t>> minimal_primes_squarefree(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw precondition_error("minimal primes on this route require a squarefree monomial ideal");
    const std::size_t n = ideal.ring().nvars();
    const auto& gens = ideal.minimal_generators();

    std::vector<std::vector<std::size_t>> covers;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool cover = true;
        for (const auto& g : gens) {
            bool hit = false;
            for (std::size_t v = 0; v < n && !hit; ++v)
                if (g.exponent(v) > 0 && (mask >> v & 1)) hit = true;
            if (!hit) {
                cover = false;
                break;
            }
        }
        if (!cover) continue;
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < n; ++v)
            if (mask >> v & 1) vars.push_back(v);
        covers.push_back(std::move(vars));
    }
    // Keep the inclusion-minimal covers.
    std::vector<std::vector<std::size_t>> minimal;
    for (const auto& c : covers) {
        bool dominated = false;
        for (const auto& d : covers) {
            if (d.size() >= c.size() || d == c) continue;
            if (std::includes(c.begin(), c.end(), d.begin(), d.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

}  // namespace gradix
