#include "motzeta/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace motzeta {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, int k) {
    if (k < 0) throw std::domain_error("Polynomial: negative exponent");
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

Rational Polynomial::leading() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> v;
    v.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    Polynomial r = a;
    std::vector<Rational> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0,
                            Rational(0));
    const Rational lead = b.leading();
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const int k = r.degree() - db;
        const Rational f = r.leading() / lead;
        q[static_cast<size_t>(k)] = f;
        // r -= f * t^k * b
        for (int i = 0; i <= db; ++i)
            r.c_[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
        r.trim();
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("Polynomial: division is not exact");
    return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.leading());  // monic
}

std::string Polynomial::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational c = c_[i];
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (i == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << c.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

}  // namespace motzeta
