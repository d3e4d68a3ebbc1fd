#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace motzeta {

class FiniteField;

// Element of a finite field, reduced modulo the field's modulus. Owned
// coefficients of the degree-<k representative, low degree first.
class FieldElement {
public:
    static constexpr unsigned kMaxDegree = 12;

    const FiniteField& field() const { return *f_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    bool is_zero() const;
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement pow(std::uint64_t e) const;
    FieldElement inverse() const;  // throws on zero

private:
    friend class FiniteField;
    const FiniteField* f_ = nullptr;
    std::array<std::uint32_t, kMaxDegree> c_{};
};

// GF(p^k) with the lexicographically smallest monic irreducible modulus
// (coefficients compared low-degree-first), so fields are reproducible
// across runs and platforms. Bounds: k <= 12 and p^k <= 2^20.
class FiniteField {
public:
    static constexpr unsigned kMaxK = 12;
    static constexpr std::uint64_t kMaxSize = 1u << 20;

    // gf_make: throws std::invalid_argument if p is not prime or k < 1,
    // std::domain_error if the size bound is exceeded.
    static FiniteField make(std::uint64_t p, unsigned k);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t size() const { return size_; }
    // monic, degree k, low degree first (length k+1)
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long long c) const;  // c mod p as a constant
    // element with base-p digits of index as coefficients; index < size()
    FieldElement element(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;
    FieldElement inv(const FieldElement& a) const;

private:
    FiniteField(std::uint64_t p, unsigned k, std::vector<std::uint32_t> mod);

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::uint64_t size_ = 0;
    std::vector<std::uint32_t> mod_;
};

bool is_prime(std::uint64_t n);

}  // namespace motzeta
