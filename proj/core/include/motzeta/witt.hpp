#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "motzeta/polynomial.hpp"
#include "motzeta/power_series.hpp"
#include "motzeta/rational.hpp"

namespace motzeta {

// An element of W(Q)_rat: the power series num/den in 1 + tQ[[t]], stored as
// a reduced fraction of polynomials with num(0) = den(0) = 1.
//
// Conventions. Witt "addition" is multiplication of power series; the
// additive identity is 1. Witt multiplication * is the unique bilinear law
// multiplying ghost components, where ghost_n(w) = [t^n] t (d/dt) log w.
// Under this convention (1-at)^-1 * (1-bt)^-1 = (1-abt)^-1 and the
// multiplicative unit is (1-t)^-1.
class WittVector {
public:
    WittVector();  // the additive identity 1
    WittVector(Polynomial num, Polynomial den);  // validates and reduces

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_one() && den_.is_one(); }

    friend bool operator==(const WittVector& a, const WittVector& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const WittVector& a, const WittVector& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const WittVector& w);

private:
    Polynomial num_, den_;
};

// Ghost components g_1..g_N of a Witt vector; entry n-1 holds g_n. For zeta
// functions of varieties these are the point counts over F_{q^n}.
struct GhostSequence {
    std::vector<Rational> values;

    GhostSequence() = default;
    explicit GhostSequence(std::vector<Rational> v) : values(std::move(v)) {}

    int order() const { return static_cast<int>(values.size()); }
    // 1-based accessor: g(n) = g_n
    const Rational& g(int n) const { return values.at(static_cast<size_t>(n - 1)); }

    friend bool operator==(const GhostSequence& a, const GhostSequence& b) {
        return a.values == b.values;
    }
    friend bool operator!=(const GhostSequence& a, const GhostSequence& b) { return !(a == b); }
};

// Group law of W(Q): multiplication of the underlying series.
WittVector w_add(const WittVector& u, const WittVector& v);

// Additive inverse: the reciprocal series (num and den swap).
WittVector w_neg(const WittVector& u);

// Ring multiplication *, computed exactly on rational Witt vectors through
// characteristic series of Kronecker products of companion matrices.
WittVector w_mul(const WittVector& u, const WittVector& v);

// Multiplicative identity (1-t)^-1, the element with ghost identically 1.
WittVector w_one();

// g_n = [t^n] t (d/dt) log(num/den) for n = 1..order.
GhostSequence ghost(const WittVector& u, int order);

// exp(sum_{n=1}^{N} g_n t^n / n) truncated at order N; the inverse of ghost
// on truncations.
PowerSeries from_counts(const GhostSequence& g);

// Series expansion of the Witt vector to the given order.
PowerSeries to_series(const WittVector& u, int order);

}  // namespace motzeta
