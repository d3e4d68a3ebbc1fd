#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "motzeta/polynomial.hpp"
#include "motzeta/rational.hpp"

namespace motzeta {

// Truncated power series over Q. Order N means coefficients of t^0..t^N are
// stored (length N+1). Binary operations on series of different orders
// truncate to the minimum of the two orders.
class PowerSeries {
public:
    explicit PowerSeries(int order);  // zero series
    PowerSeries(std::vector<Rational> coeffs, int order);

    static PowerSeries one(int order);
    static PowerSeries from_polynomial(const Polynomial& p, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coefficients() const { return c_; }

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    PowerSeries scaled(const Rational& c) const;

    // 1/s; requires a nonzero constant term.
    PowerSeries reciprocal() const;

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

    std::string str(const char* var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

private:
    std::vector<Rational> c_;
};

// log(s) for s with constant term 1; the result has constant term 0.
PowerSeries series_log(const PowerSeries& s);

// exp(s) for s with constant term 0; the result has constant term 1.
PowerSeries series_exp(const PowerSeries& s);

// Expansion of num/den to the given order; requires den(0) != 0.
PowerSeries rational_to_series(const Polynomial& num, const Polynomial& den, int order);

}  // namespace motzeta
