#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "motzeta/rational.hpp"

namespace motzeta {

// Dense univariate polynomial over Q. Coefficient i is the coefficient of
// t^i. The zero polynomial is the empty coefficient sequence; otherwise the
// trailing coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial one() { return Polynomial(Rational(1)); }
    // t^k with a given coefficient
    static Polynomial monomial(const Rational& c, int k);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    // coefficient of t^i; zero beyond the degree
    const Rational& coeff(int i) const;
    Rational constant_term() const { return c_.empty() ? Rational(0) : c_[0]; }
    Rational leading() const;

    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    Polynomial derivative() const;

    // Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
    // Division known to be exact; throws std::domain_error on nonzero remainder.
    friend Polynomial div_exact(const Polynomial& a, const Polynomial& b);

    // Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    const std::vector<Rational>& coefficients() const { return c_; }

    std::string str(const char* var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace motzeta
