#include "gradix/field.hpp"

namespace gradix {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime_u32(p))
        throw usage_error("GF modulus must be a prime below 2^31, got " + std::to_string(p));
    return Field(Kind::prime, p);
}

std::string Field::to_string() const {
    return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::int64_t mod_reduce(const mpz_class& v, std::uint32_t p) {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return r.get_si();
}

// Extended Euclid inverse of a modulo p, a in (0, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return t;
}

}  // namespace

FieldElement FieldElement::one(const Field& f) {
    FieldElement e(f);
    if (f.is_rationals())
        e.rat_ = 1;
    else
        e.res_ = 1;
    return e;
}

FieldElement FieldElement::from_integer(const Field& f, const mpz_class& v) {
    FieldElement e(f);
    if (f.is_rationals())
        e.rat_ = mpq_class(v);
    else
        e.res_ = mod_reduce(v, f.modulus());
    return e;
}

FieldElement FieldElement::fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw division_by_zero("zero denominator");
    FieldElement e(f);
    if (f.is_rationals()) {
        e.rat_ = mpq_class(num, den);
        e.rat_.canonicalize();
    } else {
        e = from_integer(f, num) * from_integer(f, den).invert();
    }
    return e;
}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (field_ != o.field_)
        throw usage_error("mixed-field operation: " + field_.to_string() + " vs " +
                          o.field_.to_string());
}

bool FieldElement::is_zero() const {
    return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    FieldElement e(field_);
    if (field_.is_rationals())
        e.rat_ = rat_ + o.rat_;
    else
        e.res_ = (res_ + o.res_) % field_.modulus();
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    FieldElement e(field_);
    if (field_.is_rationals()) {
        e.rat_ = rat_ - o.rat_;
    } else {
        std::int64_t p = field_.modulus();
        e.res_ = ((res_ - o.res_) % p + p) % p;
    }
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    FieldElement e(field_);
    if (field_.is_rationals())
        e.rat_ = rat_ * o.rat_;
    else
        e.res_ = (res_ * o.res_) % field_.modulus();  // p < 2^31, no overflow
    return e;
}

FieldElement FieldElement::operator-() const {
    FieldElement e(field_);
    if (field_.is_rationals())
        e.rat_ = -rat_;
    else
        e.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
    return e;
}

FieldElement FieldElement::invert() const {
    if (is_zero()) throw division_by_zero("inverse of zero in " + field_.to_string());
    FieldElement e(field_);
    if (field_.is_rationals())
        e.rat_ = 1 / rat_;
    else
        e.res_ = mod_inverse(res_, field_.modulus());
    return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string FieldElement::to_string() const {
    if (field_.is_rationals()) return rat_.get_str();
    return std::to_string(res_);
}

}  // namespace gradix
