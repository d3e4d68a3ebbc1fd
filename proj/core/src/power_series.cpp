#include "motzeta/power_series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace motzeta {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::domain_error("PowerSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order) : PowerSeries(order) {
    const size_t n = std::min(coeffs.size(), c_.size());
    for (size_t i = 0; i < n; ++i) c_[i] = std::move(coeffs[i]);
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.c_[0] = Rational(1);
    return s;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, int order) {
    PowerSeries s(order);
    const int n = std::min(order, p.degree());
    for (int i = 0; i <= n; ++i) s.c_[static_cast<size_t>(i)] = p.coeff(i);
    return s;
}

const Rational& PowerSeries::coeff(int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("PowerSeries: coefficient beyond order");
    return c_[static_cast<size_t>(i)];
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i)
        r.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i)
        r.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] - b.c_[static_cast<size_t>(i)];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j)
            r.c_[static_cast<size_t>(i + j)] +=
                a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return r;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
    PowerSeries r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

PowerSeries PowerSeries::reciprocal() const {
    if (c_[0].is_zero())
        throw std::domain_error("PowerSeries: reciprocal of series with zero constant term");
    const int n = order();
    PowerSeries r(n);
    const Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    // (s * r)_k = 0 for k >= 1
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += c_[static_cast<size_t>(i)] * r.c_[static_cast<size_t>(k - i)];
        r.c_[static_cast<size_t>(k)] = -acc * inv0;
    }
    return r;
}

PowerSeries series_log(const PowerSeries& s) {
    if (!s.coeff(0).is_one())
        throw std::domain_error("series_log: constant term must be 1");
    const int n = s.order();
    // l = log s satisfies s * l' = s', i.e.
    // k*l_k = k*s_k - sum_{i=1}^{k-1} i*l_i*s_{k-i}
    std::vector<Rational> l(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) {
        Rational acc = s.coeff(k) * Rational(static_cast<long>(k));
        for (int i = 1; i < k; ++i)
            acc -= l[static_cast<size_t>(i)] * Rational(static_cast<long>(i)) * s.coeff(k - i);
        l[static_cast<size_t>(k)] = acc / Rational(static_cast<long>(k));
    }
    return PowerSeries(std::move(l), n);
}

PowerSeries series_exp(const PowerSeries& s) {
    if (!s.coeff(0).is_zero())
        throw std::domain_error("series_exp: constant term must be 0");
    const int n = s.order();
    // e = exp(s) satisfies e' = s'*e: k*e_k = sum_{i=1}^{k} i*s_i*e_{k-i}
    std::vector<Rational> e(static_cast<size_t>(n) + 1, Rational(0));
    e[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += s.coeff(i) * Rational(static_cast<long>(i)) * e[static_cast<size_t>(k - i)];
        e[static_cast<size_t>(k)] = acc / Rational(static_cast<long>(k));
    }
    return PowerSeries(std::move(e), n);
}

PowerSeries rational_to_series(const Polynomial& num, const Polynomial& den, int order) {
    if (den.constant_term().is_zero())
        throw std::domain_error("rational_to_series: denominator constant term is zero");
    const PowerSeries n = PowerSeries::from_polynomial(num, order);
    const PowerSeries d = PowerSeries::from_polynomial(den, order);
    return n * d.reciprocal();
}

std::string PowerSeries::str(const char* var) const {
    Polynomial p(c_);
    std::string body = p.str(var);
    return body + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
    return os << s.str();
}

}  // namespace motzeta
