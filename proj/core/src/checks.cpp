#include "motzeta/checks.hpp"

#include <stdexcept>

namespace motzeta {

LefschetzReport verify_lefschetz(const VarietySpec& v, const EndoComplex& e, unsigned n_max,
                                 std::uint64_t budget) {
    if (n_max < 1) throw std::invalid_argument("verify_lefschetz: n_max must be >= 1");
    const GhostSequence predicted = ghost(zeta(e), static_cast<int>(n_max));
    LefschetzReport report;
    report.pass = true;
    for (unsigned n = 1; n <= n_max; ++n) {
        const std::uint64_t brute = count_points(v, n, budget);
        const Rational b(mpz_class(static_cast<unsigned long>(brute)));
        const Rational& p = predicted.g(static_cast<int>(n));
        const bool ok = (b == p);
        report.rows.push_back(LefschetzRow{n, b, p, ok});
        report.pass = report.pass && ok;
    }
    return report;
}

bool check_functional_equation(const WittVector& w, const mpz_class& q, unsigned g) {
    if (q < 2) throw std::domain_error("check_functional_equation: q must be >= 2");
    const Polynomial expected_den({Rational(1), -Rational(mpz_class(q + 1)), Rational(q)});
    if (w.den() != expected_den)
        throw std::domain_error("check_functional_equation: denominator must be (1-t)(1-qt)");
    if (w.num().degree() != static_cast<int>(2 * g))
        throw std::domain_error("check_functional_equation: numerator degree must be 2g");
    const Rational qr{mpz_class(q)};
    for (unsigned i = 0; i <= 2 * g; ++i) {
        // c_{2g-i} = q^{g-i} c_i, with q^{g-i} taken in Q for i > g
        const Rational factor = (i <= g) ? qr.pow(g - i) : Rational(1) / qr.pow(i - g);
        if (w.num().coeff(static_cast<int>(2 * g - i)) != factor * w.num().coeff(static_cast<int>(i)))
            return false;
    }
    return true;
}

bool check_weil_bound(const WittVector& w, const mpz_class& q) {
    if (q < 2) throw std::domain_error("check_weil_bound: q must be >= 2");
    const Polynomial& num = w.num();
    if (num.degree() != 2 || num.coeff(2) != Rational(mpz_class(q)))
        throw std::domain_error("check_weil_bound: numerator must be 1 - a t + q t^2");
    const Rational a = -num.coeff(1);
    return a * a <= Rational(mpz_class(4 * q));
}

}  // namespace motzeta
