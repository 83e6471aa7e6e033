#include "gradix/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace gradix {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::int32_t power) {
    std::vector<std::int32_t> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
}

std::int64_t Monomial::total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
}

bool Monomial::is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](std::int32_t x) { return x == 0; });
}

int Monomial::support_size() const {
    return static_cast<int>(std::count_if(e_.begin(), e_.end(), [](std::int32_t x) { return x > 0; }));
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::int32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::operator/(const Monomial& o) const {
    std::vector<std::int32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r[i] = e_[i] - o.e_[i];
        if (r[i] < 0) throw error("inexact monomial quotient");
    }
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<std::int32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], o.e_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& o) const {
    std::vector<std::int32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::min(e_[i], o.e_[i]);
    return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

namespace {

int compare_lex(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b,
                std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// Graded reverse lexicographic on the coordinate window [lo, hi).
int compare_grevlex(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b,
                    std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;  // smaller last exponent wins
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    if (ea.size() != eb.size()) throw usage_error("monomial comparison across rings");
    switch (kind_) {
        case Kind::lex:
            return compare_lex(ea, eb, 0, ea.size());
        case Kind::grevlex:
            return compare_grevlex(ea, eb, 0, ea.size());
        case Kind::elimination_block: {
            std::size_t k = std::min(block_, ea.size());
            int c = compare_grevlex(ea, eb, 0, k);
            if (c != 0) return c;
            return compare_grevlex(ea, eb, k, ea.size());
        }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case Kind::lex: return "lex";
        case Kind::grevlex: return "grevlex";
        case Kind::elimination_block: return "elim(" + std::to_string(block_) + ")";
    }
    return "?";
}

}  // namespace gradix
