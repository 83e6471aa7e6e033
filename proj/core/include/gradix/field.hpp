#ifndef GRADIX_FIELD_HPP
#define GRADIX_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "gradix/errors.hpp"

namespace gradix {

/// Descriptor of a coefficient field: the rationals QQ or a prime field GF(p),
/// p an odd-or-even prime below 2^31.
class Field {
  public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(std::uint32_t p);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    std::uint32_t modulus() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

/// One exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field residues in [0, p). Elements of different fields
/// never mix in arithmetic.
class FieldElement {
  public:
    FieldElement() : field_(Field::rationals()), res_(0) {}

    static FieldElement zero(const Field& f) { return FieldElement(f); }
    static FieldElement one(const Field& f);
    /// Image of an integer under the canonical map Z -> field.
    static FieldElement from_integer(const Field& f, const mpz_class& v);
    static FieldElement from_integer(const Field& f, long v) { return from_integer(f, mpz_class(v)); }
    /// Rational a/b in QQ; GF(p) rejects this constructor unless b is a unit mod p.
    static FieldElement fraction(const Field& f, const mpz_class& num, const mpz_class& den);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement invert() const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.invert(); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// QQ payload; only meaningful when field().is_rationals().
    const mpq_class& rational_value() const { return rat_; }
    /// GF(p) payload in [0, p); only meaningful for prime fields.
    std::int64_t residue_value() const { return res_; }

    /// `a/b` or `a` for QQ, a decimal residue for GF(p).
    std::string to_string() const;

  private:
    explicit FieldElement(const Field& f) : field_(f), res_(0) {}
    void check_same_field(const FieldElement& o) const;

    Field field_;
    mpq_class rat_;
    std::int64_t res_;
};

}  // namespace gradix

#endif
