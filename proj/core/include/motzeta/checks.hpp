#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "motzeta/endo.hpp"
#include "motzeta/variety.hpp"
#include "motzeta/witt.hpp"

namespace motzeta {

struct LefschetzRow {
    unsigned n;
    Rational brute;      // direct enumeration over F_{q^n}
    Rational predicted;  // ghost_n of zeta of the cohomology data
    bool pass;
};

struct LefschetzReport {
    std::vector<LefschetzRow> rows;
    bool pass;
};

// Point-counting comparison: for each n <= n_max, the brute-force count of
// rational points of v over F_{p^n} against the alternating trace prediction
// from the endomorphism data. Disagreements are reported, not thrown.
LefschetzReport verify_lefschetz(const VarietySpec& v, const EndoComplex& e, unsigned n_max,
                                 std::uint64_t budget = kDefaultBudget);

// Curve-case functional equation: with w.den = (1-t)(1-qt) and
// deg(w.num) = 2g, checks the coefficient symmetry c_{2g-i} = q^{g-i} c_i.
// Shape violations throw std::domain_error (distinct from returning false).
bool check_functional_equation(const WittVector& w, const mpz_class& q, unsigned g);

// Genus-1 bound: with w.num = 1 - a t + q t^2, checks a^2 <= 4q exactly.
// Shape violations throw std::domain_error.
bool check_weil_bound(const WittVector& w, const mpz_class& q);

}  // namespace motzeta
