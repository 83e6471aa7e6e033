#ifndef GRADIX_IDEAL_HPP
#define GRADIX_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gradix/groebner.hpp"

namespace gradix {

/// Remaps a polynomial onto another ring by variable name. Every variable
/// occurring in f must exist in the target ring; everything else is an error.
Polynomial map_to_ring(const Polynomial& f, const Ring& target, MonomialOrder order);

/// All monomials in `nvars` variables of total degree at most `bound`,
/// enumerated deterministically.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, std::int64_t bound);

/// Finitely generated ideal with a per-order cache of reduced Groebner bases.
/// Values are cheap to copy; copies share the cache.
class Ideal {
  public:
    Ideal(Ring ring, std::vector<Polynomial> generators);

    static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
    static Ideal unit(const Ring& ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// Reduced Groebner basis under `order`, computed once and cached.
    const GroebnerBasis& groebner(MonomialOrder order) const;
    /// The canonical basis used for equality and membership decisions.
    const GroebnerBasis& canonical_basis() const { return groebner(MonomialOrder::grevlex()); }

    bool contains(const Polynomial& f) const;
    bool is_zero_ideal() const { return canonical_basis().is_zero_ideal(); }
    bool is_unit_ideal() const { return canonical_basis().is_trivial_unit(); }

    std::string to_string() const;

  private:
    Ring ring_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::mutex mutex;
        std::map<MonomialOrder, GroebnerBasis> bases;
    };
    std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// True iff a is contained in b.
bool ideal_subset(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
/// Colon ideal (a : b) = { f : f*b in a }.
Ideal quotient(const Ideal& a, const Ideal& b);
/// Saturation (a : f^infinity); f must be nonzero.
Ideal saturate(const Ideal& a, const Polynomial& f);
/// Intersection with the subring spanned by the variables NOT listed; output
/// generators live in the same ring but avoid the eliminated variables.
Ideal eliminate(const Ideal& a, const std::vector<std::string>& variables);

/// Exact polynomial quotient g / f, or nullopt when f does not divide g.
std::optional<Polynomial> try_divide(const Polynomial& g, const Polynomial& f);

/// Truncated-span membership oracle: true iff f is a field-linear combination
/// of the products {m * g : g generator, m monomial, deg(m*g) <= bound}.
/// Membership implies span membership for large enough bound; the converse
/// holds at any bound.
bool membership_span_oracle(const Polynomial& f, const Ideal& ideal, std::int64_t bound);

}  // namespace gradix

#endif
