#include "motzeta/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace motzeta {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);  // operator/ canonicalizes
}

Rational Rational::from_string(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

mpz_class Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
    return v_.get_num();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::pow(unsigned long e) const {
    Rational r;
    mpz_pow_ui(r.v_.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.v_.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return r;  // powers of a canonical fraction stay canonical
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational int_pow(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return Rational(r);
}

}  // namespace motzeta
