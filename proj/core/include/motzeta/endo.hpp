#pragma once

#include <map>

#include "motzeta/matrix.hpp"
#include "motzeta/rational.hpp"
#include "motzeta/witt.hpp"

namespace motzeta {

// A graded tuple of square matrices: degree i carries the endomorphism f_i of
// a free module, modeling a perfect complex with endomorphism. Degrees with
// 0-dimensional matrices are dropped; the empty complex is the zero object.
// The twist is trace-neutral bookkeeping.
class EndoComplex {
public:
    EndoComplex() = default;
    explicit EndoComplex(std::map<int, Matrix> components, long twist = 0);

    static EndoComplex zero() { return EndoComplex(); }
    // single component in the given degree
    static EndoComplex single(int degree, Matrix f, long twist = 0);

    bool is_zero() const { return comps_.empty(); }
    long twist() const { return twist_; }
    const std::map<int, Matrix>& components() const { return comps_; }

    friend bool operator==(const EndoComplex& a, const EndoComplex& b) {
        return a.twist_ == b.twist_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const EndoComplex& a, const EndoComplex& b) { return !(a == b); }

private:
    std::map<int, Matrix> comps_;
    long twist_ = 0;
};

// sum_i (-1)^i Tr(f_i)
Rational euler_trace(const EndoComplex& e);

// Trace of the identity: sum_i (-1)^i dim_i. Always an integer.
Rational euler_char(const EndoComplex& e);

// prod_i char_series(f_i)^( (-1)^{i+1} ): odd degrees contribute to the
// numerator, even degrees to the denominator. Its ghost sequence is
// g_n = sum_i (-1)^i Tr(f_i^n).
WittVector zeta(const EndoComplex& e);

// Reindexes degree i -> i+k; flips euler_trace by (-1)^k.
EndoComplex shift(const EndoComplex& e, int k);

// Adds n to the twist; traces and zeta are unchanged.
EndoComplex tate_twist(const EndoComplex& e, long n);

// Degreewise block-diagonal sum. Traces add; zeta multiplies (w_add).
EndoComplex dsum(const EndoComplex& a, const EndoComplex& b);

// Total-degree graded tensor product: degree k is the block-diagonal sum of
// kronecker(f_i, g_j) over i+j = k. Twists add.
EndoComplex tensor(const EndoComplex& a, const EndoComplex& b);

// Section of zeta: a two-term complex with companion matrices realizing den
// in degree 0 and num in degree 1, so that zeta(from_witt(w)) = w.
EndoComplex from_witt(const WittVector& w);

}  // namespace motzeta
