#include "motzeta/finite_field.hpp"

#include <stdexcept>
#include <string>

namespace motzeta {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Divides a (degree da) by monic divisor g (degree dg) over Z/p in place;
// returns true if the remainder is zero. a has length da+1.
bool divides_exactly(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& g,
                     std::uint64_t p) {
    const int da = static_cast<int>(a.size()) - 1;
    const int dg = static_cast<int>(g.size()) - 1;
    for (int i = da; i >= dg; --i) {
        const std::uint64_t f = a[static_cast<size_t>(i)];
        if (f == 0) continue;
        a[static_cast<size_t>(i)] = 0;
        for (int j = 0; j < dg; ++j) {
            const std::uint64_t sub = (f * g[static_cast<size_t>(j)]) % p;
            std::uint64_t cur = a[static_cast<size_t>(i - dg + j)];
            a[static_cast<size_t>(i - dg + j)] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
    }
    for (std::uint32_t c : a)
        if (c != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(f.size()) - 1;
    if (k == 1) return true;
    // brute-force factor search: any nontrivial factorization has a monic
    // factor of degree <= k/2
    for (unsigned d = 1; 2 * d <= k; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> g(d + 1, 0);
            std::uint64_t rest = idx;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (divides_exactly(f, g, p)) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned k, std::vector<std::uint32_t> mod)
    : p_(p), k_(k), mod_(std::move(mod)) {
    size_ = 1;
    for (unsigned i = 0; i < k; ++i) size_ *= p;
}

FiniteField FiniteField::make(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw std::invalid_argument("gf_make: " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("gf_make: k must be >= 1");
    if (k > kMaxK) throw std::domain_error("gf_make: k exceeds bound " + std::to_string(kMaxK));
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
        size *= p;
        if (size > kMaxSize) throw std::domain_error("gf_make: field size exceeds 2^20");
    }
    // lexicographically smallest monic irreducible, comparing the coefficient
    // tuple (c_0, ..., c_{k-1}) low-degree-first
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        std::vector<std::uint32_t> f(k + 1, 0);
        // c_0 is the most significant digit so the tuple (c_0, ..., c_{k-1})
        // is enumerated in increasing lexicographic order
        std::uint64_t rest = idx;
        for (unsigned i = k; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) return FiniteField(p, k, std::move(f));
    }
    throw std::logic_error("gf_make: no irreducible modulus found");  // unreachable
}

FieldElement FiniteField::zero() const {
    FieldElement e;
    e.f_ = this;
    return e;
}

FieldElement FiniteField::one() const { return from_integer(1); }

FieldElement FiniteField::from_integer(long long c) const {
    FieldElement e = zero();
    long long r = c % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    e.c_[0] = static_cast<std::uint32_t>(r);
    return e;
}

FieldElement FiniteField::element(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("FiniteField: element index out of range");
    FieldElement e = zero();
    for (unsigned i = 0; i < k_ && index != 0; ++i) {
        e.c_[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t FiniteField::index_of(const FieldElement& a) const {
    std::uint64_t idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.c_[i];
    return idx;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = zero();
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a.c_[i]) + b.c_[i];
        if (s >= p_) s -= p_;
        r.c_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement r = zero();
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a.c_[i]) + p_ - b.c_[i];
        if (s >= p_) s -= p_;
        r.c_[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

FieldElement FiniteField::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
    // schoolbook product, then reduction by the monic modulus
    std::array<std::uint64_t, 2 * FieldElement::kMaxDegree> prod{};
    for (unsigned i = 0; i < k_; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % p_;
        }
    }
    for (unsigned i = 2 * k_ - 1; i >= k_ && i < 2 * FieldElement::kMaxDegree; --i) {
        const std::uint64_t f = prod[i];
        if (f == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < k_; ++j) {
            const std::uint64_t sub = (f * mod_[j]) % p_;
            prod[i - k_ + j] = (prod[i - k_ + j] + p_ - sub) % p_;
        }
    }
    FieldElement r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c_[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
}

FieldElement FiniteField::pow(const FieldElement& a, std::uint64_t e) const {
    FieldElement acc = one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
    if (a.is_zero()) throw std::domain_error("FiniteField: inverse of zero");
    return pow(a, size_ - 2);
}

bool FieldElement::is_zero() const {
    for (std::uint32_t c : c_)
        if (c != 0) return false;
    return true;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.c_ == b.c_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return a.field().add(a, b);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a.field().sub(a, b);
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return a.field().mul(a, b);
}
FieldElement FieldElement::operator-() const { return field().neg(*this); }
FieldElement FieldElement::pow(std::uint64_t e) const { return field().pow(*this, e); }
FieldElement FieldElement::inverse() const { return field().inv(*this); }

}  // namespace motzeta
