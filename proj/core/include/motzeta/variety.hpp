#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "motzeta/witt.hpp"

namespace motzeta {

// candidate-tuple cap per count; the CLI can override it via MOTZETA_BUDGET
inline constexpr std::uint64_t kDefaultBudget = 1ull << 24;

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// coeff * prod_j x_j^{exponents[j]}
struct MonomialTerm {
    mpz_class coeff;
    std::vector<unsigned> exponents;
};

using Equation = std::vector<MonomialTerm>;

enum class Ambient { affine, projective };

// Polynomial equations over F_p cutting out a variety in affine or projective
// space. dim is the dimension of the ambient space, so equations use dim
// variables in the affine case and dim+1 in the projective case (and must be
// homogeneous there). An empty equation list is the full ambient space.
struct VarietySpec {
    Ambient ambient = Ambient::affine;
    unsigned dim = 0;
    std::uint64_t p = 2;
    std::vector<Equation> equations;

    unsigned num_vars() const { return ambient == Ambient::projective ? dim + 1 : dim; }

    // throws std::invalid_argument on malformed data
    void validate() const;
};

// Number of F_{p^n}-points, by direct enumeration. Projective points are
// enumerated through normalized representatives (first nonzero coordinate
// equal to 1). Throws BudgetExceeded if the candidate-tuple count exceeds
// the budget.
std::uint64_t count_points(const VarietySpec& v, unsigned n, std::uint64_t budget = kDefaultBudget);

// (count_points(v,1), ..., count_points(v,n_max))
GhostSequence counts_tower(const VarietySpec& v, unsigned n_max,
                           std::uint64_t budget = kDefaultBudget);

}  // namespace motzeta
