#include "motzeta/witt.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "motzeta/matrix.hpp"

namespace motzeta {

WittVector::WittVector() : num_(Polynomial::one()), den_(Polynomial::one()) {}

WittVector::WittVector(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!num_.constant_term().is_one() || !den_.constant_term().is_one())
        throw std::domain_error("WittVector: num and den must have constant term 1");
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        // common factors of polynomials with constant term 1 have nonzero
        // constant term; normalize the gcd to g(0) = 1 before dividing
        g = g.scaled(Rational(1) / g.constant_term());
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
}

std::string WittVector::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const WittVector& w) {
    return os << w.str();
}

WittVector w_add(const WittVector& u, const WittVector& v) {
    return WittVector(u.num() * v.num(), u.den() * v.den());
}

WittVector w_neg(const WittVector& u) {
    return WittVector(u.den(), u.num());
}

WittVector w_one() {
    return WittVector(Polynomial::one(), Polynomial{1, -1});  // 1/(1-t)
}

namespace {

// Coefficients 1..order of t (d/dt) log p for a polynomial p with p(0) = 1.
// For p = char_series(A) this equals -Tr(A^n) in degree n.
std::vector<Rational> log_derivative_coeffs(const Polynomial& p, int order) {
    const PowerSeries s = PowerSeries::from_polynomial(p, order);
    const PowerSeries l = series_log(s);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(order));
    // t (d/dt) log p has n-th coefficient n * l_n
    for (int n = 1; n <= order; ++n)
        out.push_back(l.coeff(n) * Rational(static_cast<long>(n)));
    return out;
}

// char_series of the Kronecker product of the companion matrices of p and q,
// reconstructed from the power-trace identity Tr((A (x) B)^n) = Tr(A^n)Tr(B^n)
// rather than by forming the (deg p * deg q)-dimensional product.
Polynomial char_series_of_kron(const Polynomial& p, const Polynomial& q) {
    const int dp = p.degree(), dq = q.degree();
    const int d = dp * dq;
    if (d == 0) return Polynomial::one();
    const std::vector<Rational> tp = power_traces(companion_matrix(p), d);
    const std::vector<Rational> tq = power_traces(companion_matrix(q), d);
    std::vector<Rational> prod(static_cast<size_t>(d));
    for (int n = 0; n < d; ++n)
        prod[static_cast<size_t>(n)] = tp[static_cast<size_t>(n)] * tq[static_cast<size_t>(n)];
    return char_series_from_traces(prod, d);
}

}  // namespace

WittVector w_mul(const WittVector& u, const WittVector& v) {
    // ghost(u)_n = Tr(A_u^n) - Tr(B_u^n) with A_u, B_u the companion matrices
    // of den_u and num_u. The componentwise ghost product then expands to
    //   + Tr((A_u (x) A_v)^n) + Tr((B_u (x) B_v)^n)
    //   - Tr((A_u (x) B_v)^n) - Tr((B_u (x) A_v)^n)
    // so the result has den = cs(A_u (x) A_v) * cs(B_u (x) B_v) and
    // num = cs(A_u (x) B_v) * cs(B_u (x) A_v).
    const Polynomial den = char_series_of_kron(u.den(), v.den()) *
                           char_series_of_kron(u.num(), v.num());
    const Polynomial num = char_series_of_kron(u.den(), v.num()) *
                           char_series_of_kron(u.num(), v.den());
    return WittVector(num, den);
}

GhostSequence ghost(const WittVector& u, int order) {
    if (order < 1) throw std::domain_error("ghost: order must be >= 1");
    const std::vector<Rational> gn = log_derivative_coeffs(u.num(), order);
    const std::vector<Rational> gd = log_derivative_coeffs(u.den(), order);
    std::vector<Rational> out(static_cast<size_t>(order));
    for (int n = 0; n < order; ++n)
        out[static_cast<size_t>(n)] = gn[static_cast<size_t>(n)] - gd[static_cast<size_t>(n)];
    return GhostSequence(std::move(out));
}

PowerSeries from_counts(const GhostSequence& g) {
    const int n = g.order();
    PowerSeries arg(n);
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k)
        coeffs[static_cast<size_t>(k)] = g.g(k) / Rational(static_cast<long>(k));
    return series_exp(PowerSeries(std::move(coeffs), n));
}

PowerSeries to_series(const WittVector& u, int order) {
    return rational_to_series(u.num(), u.den(), order);
}

}  // namespace motzeta
