#ifndef GRADIX_MONOMIAL_HPP
#define GRADIX_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "gradix/errors.hpp"

namespace gradix {

/// Exponent vector of a power product. The ambient variable count is the
/// vector length; arithmetic requires equal lengths.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int32_t> exponents) : e_(std::move(exponents)) {}
    static Monomial unit(std::size_t nvars) { return Monomial(std::vector<std::int32_t>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t index, std::int32_t power = 1);

    std::size_t nvars() const { return e_.size(); }
    std::int32_t exponent(std::size_t i) const { return e_[i]; }
    const std::vector<std::int32_t>& exponents() const { return e_; }
    std::int64_t total_degree() const;
    bool is_unit() const;
    /// Number of variables with positive exponent.
    int support_size() const;

    Monomial operator*(const Monomial& o) const;
    /// Exact quotient; requires o | *this.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // *this | o
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    /// Order-free comparison (plain lexicographic on exponent vectors); used
    /// only for canonical container keys, never as a term order.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

  private:
    std::vector<std::int32_t> e_;
};

/// Total, multiplicative well-orders on monomials: lex, graded reverse lex,
/// and the block order that eliminates the first `block` variables.
class MonomialOrder {
  public:
    enum class Kind { lex, grevlex, elimination_block };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder elimination_block(std::size_t k) {
        return MonomialOrder(Kind::elimination_block, k);
    }

    Kind kind() const { return kind_; }
    std::size_t block() const { return block_; }

    /// -1, 0, +1 for a < b, a = b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && block_ == o.block_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
    bool operator<(const MonomialOrder& o) const {
        return kind_ != o.kind_ ? kind_ < o.kind_ : block_ < o.block_;
    }

    std::string to_string() const;

  private:
    MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}
    Kind kind_;
    std::size_t block_;
};

}  // namespace gradix

#endif
