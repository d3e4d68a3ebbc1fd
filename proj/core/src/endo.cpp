#include "motzeta/endo.hpp"

#include <utility>

namespace motzeta {

EndoComplex::EndoComplex(std::map<int, Matrix> components, long twist) : twist_(twist) {
    for (auto& [deg, f] : components)
        if (f.dim() > 0) comps_.emplace(deg, std::move(f));
}

EndoComplex EndoComplex::single(int degree, Matrix f, long twist) {
    std::map<int, Matrix> m;
    m.emplace(degree, std::move(f));
    return EndoComplex(std::move(m), twist);
}

namespace {
int parity_sign(int i) { return (i % 2 == 0) ? 1 : -1; }
}

Rational euler_trace(const EndoComplex& e) {
    Rational acc(0);
    for (const auto& [deg, f] : e.components()) {
        const Rational t = f.trace();
        acc += (parity_sign(deg) > 0) ? t : -t;
    }
    return acc;
}

Rational euler_char(const EndoComplex& e) {
    Rational acc(0);
    for (const auto& [deg, f] : e.components())
        acc += Rational(static_cast<long>(parity_sign(deg) * f.dim()));
    return acc;
}

WittVector zeta(const EndoComplex& e) {
    Polynomial num = Polynomial::one();
    Polynomial den = Polynomial::one();
    for (const auto& [deg, f] : e.components()) {
        const Polynomial cs = char_series(f);
        if (parity_sign(deg) > 0)
            den = den * cs;
        else
            num = num * cs;
    }
    return WittVector(num, den);
}

EndoComplex shift(const EndoComplex& e, int k) {
    std::map<int, Matrix> m;
    for (const auto& [deg, f] : e.components()) m.emplace(deg + k, f);
    return EndoComplex(std::move(m), e.twist());
}

EndoComplex tate_twist(const EndoComplex& e, long n) {
    return EndoComplex(e.components(), e.twist() + n);
}

EndoComplex dsum(const EndoComplex& a, const EndoComplex& b) {
    std::map<int, Matrix> m = a.components();
    for (const auto& [deg, f] : b.components()) {
        auto it = m.find(deg);
        if (it == m.end())
            m.emplace(deg, f);
        else
            it->second = block_diag(it->second, f);
    }
    // twist is bookkeeping; keep the left operand's unless it is the zero
    // object (so dsum with zero is the identity on the nose)
    const long twist = a.is_zero() ? b.twist() : a.twist();
    return EndoComplex(std::move(m), twist);
}

EndoComplex tensor(const EndoComplex& a, const EndoComplex& b) {
    std::map<int, Matrix> m;
    for (const auto& [i, f] : a.components())
        for (const auto& [j, g] : b.components()) {
            Matrix block = kronecker(f, g);
            auto it = m.find(i + j);
            if (it == m.end())
                m.emplace(i + j, std::move(block));
            else
                it->second = block_diag(it->second, block);
        }
    return EndoComplex(std::move(m), a.twist() + b.twist());
}

EndoComplex from_witt(const WittVector& w) {
    std::map<int, Matrix> m;
    m.emplace(0, companion_matrix(w.den()));
    m.emplace(1, companion_matrix(w.num()));
    return EndoComplex(std::move(m));
}

}  // namespace motzeta
