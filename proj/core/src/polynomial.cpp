#include "gradix/polynomial.hpp"

#include <algorithm>

namespace gradix {

namespace {

// Canonical (order-free) term map used to normalize arbitrary term lists.
using TermMap = std::map<Monomial, FieldElement>;

std::vector<Term> sorted_terms(const Ring& ring, const MonomialOrder& order, TermMap&& map) {
    std::vector<Term> out;
    out.reserve(map.size());
    for (auto& [m, c] : map) {
        if (m.nvars() != ring.nvars())
            throw usage_error("monomial arity does not match ring " + ring.to_string());
        if (!c.is_zero()) out.push_back(Term{std::move(c), m});
    }
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return out;
}

}  // namespace

Polynomial::Polynomial(Ring ring, MonomialOrder order, const std::vector<Term>& terms)
    : ring_(std::move(ring)), order_(order) {
    TermMap map;
    for (const auto& t : terms) {
        if (t.coeff.field() != ring_.field())
            throw usage_error("coefficient field does not match ring " + ring_.to_string());
        auto [it, inserted] = map.emplace(t.mono, t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    terms_ = sorted_terms(ring_, order_, std::move(map));
}

Polynomial Polynomial::constant(const Ring& ring, MonomialOrder order, const FieldElement& c) {
    return Polynomial(ring, order, {Term{c, Monomial::unit(ring.nvars())}});
}

Polynomial Polynomial::monomial(const Ring& ring, MonomialOrder order, const FieldElement& c,
                                const Monomial& m) {
    return Polynomial(ring, order, {Term{c, m}});
}

Polynomial Polynomial::variable(const Ring& ring, MonomialOrder order, std::size_t index) {
    return Polynomial(ring, order,
                      {Term{FieldElement::one(ring.field()), Monomial::variable(ring.nvars(), index)}});
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw error("leading term of zero polynomial");
    return terms_.front();
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (ring_ != o.ring_)
        throw usage_error("ring mismatch: " + ring_.to_string() + " vs " + o.ring_.to_string());
    if (order_ != o.order_)
        throw usage_error("monomial order mismatch: " + order_.to_string() + " vs " +
                          o.order_.to_string());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = order_.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back(Term{std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_, order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{-t.coeff, t.mono});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    TermMap map;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            FieldElement c = a.coeff * b.coeff;
            auto [it, inserted] = map.emplace(std::move(m), c);
            if (!inserted) it->second += c;
        }
    }
    Polynomial r(ring_, order_);
    r.terms_ = sorted_terms(ring_, order_, std::move(map));
    return r;
}

Polynomial Polynomial::times_term(const FieldElement& c, const Monomial& m) const {
    Polynomial r(ring_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        FieldElement cc = t.coeff * c;
        if (!cc.is_zero()) r.terms_.push_back(Term{std::move(cc), t.mono * m});
    }
    return r;
}

Polynomial Polynomial::times_scalar(const FieldElement& c) const {
    return times_term(c, Monomial::unit(ring_.nvars()));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return times_scalar(leading_coeff().invert());
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    Polynomial r(ring_, order);
    r.terms_ = terms_;
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    return r;
}

bool Polynomial::equals(const Polynomial& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    auto key = [](const Polynomial& p) {
        std::vector<std::pair<Monomial, FieldElement>> v;
        v.reserve(p.terms_.size());
        for (const auto& t : p.terms_) v.emplace_back(t.mono, t.coeff);
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };
    auto a = key(*this), b = key(o);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
    return true;
}

FieldElement Polynomial::coefficient_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return FieldElement::zero(ring_.field());
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != ring_.nvars())
        throw usage_error("evaluation point arity does not match ring");
    FieldElement acc = FieldElement::zero(ring_.field());
    for (const auto& t : terms_) {
        FieldElement v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::int32_t k = 0; k < t.mono.exponent(i); ++k) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const bool rational = ring_.field().is_rationals();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        std::string coeff = t.coeff.to_string();
        bool negative = rational && coeff.size() && coeff[0] == '-';
        if (i == 0) {
            if (negative) {
                out += "-";
                coeff.erase(coeff.begin());
            }
        } else {
            out += negative ? " - " : " + ";
            if (negative) coeff.erase(coeff.begin());
        }
        std::string mono;
        for (std::size_t v = 0; v < ring_.nvars(); ++v) {
            std::int32_t e = t.mono.exponent(v);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_.variable(v);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += coeff;
        } else if (coeff == "1") {
            out += mono;
        } else {
            out += coeff + mono;
        }
    }
    return out;
}

}  // namespace gradix
