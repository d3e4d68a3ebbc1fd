#include "motzeta/variety.hpp"

#include <algorithm>

#include "motzeta/finite_field.hpp"

namespace motzeta {

void VarietySpec::validate() const {
    if (!is_prime(p)) throw std::invalid_argument("VarietySpec: p must be prime");
    const unsigned nv = num_vars();
    for (const auto& eq : equations) {
        long total = -1;
        for (const auto& term : eq) {
            if (term.exponents.size() != nv)
                throw std::invalid_argument(
                    "VarietySpec: exponent vector length must equal the variable count");
            if (ambient == Ambient::projective) {
                long deg = 0;
                for (unsigned e : term.exponents) deg += e;
                if (total < 0)
                    total = deg;
                else if (deg != total)
                    throw std::invalid_argument("VarietySpec: projective equations must be homogeneous");
            }
        }
    }
}

namespace {

struct CompiledTerm {
    FieldElement coeff;
    std::vector<unsigned> exponents;
};

using CompiledEq = std::vector<CompiledTerm>;

std::vector<CompiledEq> compile_equations(const VarietySpec& v, const FiniteField& field) {
    std::vector<CompiledEq> out;
    out.reserve(v.equations.size());
    for (const auto& eq : v.equations) {
        CompiledEq ceq;
        for (const auto& term : eq) {
            mpz_class c = term.coeff % static_cast<long>(field.p());
            CompiledTerm ct{field.from_integer(c.get_si()), term.exponents};
            if (ct.coeff.is_zero()) continue;  // vanishes mod p
            ceq.push_back(std::move(ct));
        }
        out.push_back(std::move(ceq));
    }
    return out;
}

bool satisfies_all(const std::vector<CompiledEq>& eqs, const std::vector<FieldElement>& point,
                   const FiniteField& field) {
    for (const auto& eq : eqs) {
        FieldElement acc = field.zero();
        for (const auto& term : eq) {
            FieldElement m = term.coeff;
            for (size_t j = 0; j < term.exponents.size(); ++j) {
                const unsigned e = term.exponents[j];
                if (e == 0) continue;
                m = m * point[j].pow(e);
            }
            acc = acc + m;
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

// odometer enumeration of #free coordinates, writing into point[offset..]
std::uint64_t enumerate_free(const std::vector<CompiledEq>& eqs, const FiniteField& field,
                             std::vector<FieldElement>& point, size_t offset) {
    const size_t free_count = point.size() - offset;
    std::vector<std::uint64_t> odo(free_count, 0);
    for (size_t i = 0; i < free_count; ++i) point[offset + i] = field.element(0);
    std::uint64_t hits = 0;
    while (true) {
        if (satisfies_all(eqs, point, field)) ++hits;
        size_t i = 0;
        for (; i < free_count; ++i) {
            if (++odo[i] < field.size()) {
                point[offset + i] = field.element(odo[i]);
                break;
            }
            odo[i] = 0;
            point[offset + i] = field.element(0);
        }
        if (i == free_count) break;
    }
    return hits;
}

std::uint64_t checked_tuple_count(const VarietySpec& v, std::uint64_t q, std::uint64_t budget) {
    // affine: q^dim; projective: 1 + q + ... + q^dim
    unsigned exp = v.dim;
    unsigned __int128 total = (v.ambient == Ambient::projective) ? 1 : 0;
    unsigned __int128 power = 1;
    if (v.ambient == Ambient::affine) {
        for (unsigned i = 0; i < exp; ++i) {
            power *= q;
            if (power > budget) throw BudgetExceeded("count_points: candidate tuples exceed budget");
        }
        total = power;
    } else {
        for (unsigned i = 1; i <= exp; ++i) {
            power *= q;
            total += power;
            if (total > budget) throw BudgetExceeded("count_points: candidate tuples exceed budget");
        }
    }
    if (total > budget) throw BudgetExceeded("count_points: candidate tuples exceed budget");
    return static_cast<std::uint64_t>(total);
}

}  // namespace

std::uint64_t count_points(const VarietySpec& v, unsigned n, std::uint64_t budget) {
    if (n < 1) throw std::invalid_argument("count_points: extension degree must be >= 1");
    v.validate();
    const FiniteField field = FiniteField::make(v.p, n);
    checked_tuple_count(v, field.size(), budget);
    const std::vector<CompiledEq> eqs = compile_equations(v, field);

    const unsigned nv = v.num_vars();
    std::vector<FieldElement> point(nv, field.zero());

    if (v.ambient == Ambient::affine) {
        if (nv == 0) return satisfies_all(eqs, point, field) ? 1 : 0;
        return enumerate_free(eqs, field, point, 0);
    }

    // projective: representatives with first nonzero coordinate = 1
    std::uint64_t total = 0;
    for (unsigned pivot = 0; pivot < nv; ++pivot) {
        for (unsigned i = 0; i < pivot; ++i) point[i] = field.zero();
        point[pivot] = field.one();
        total += enumerate_free(eqs, field, point, pivot + 1);
    }
    return total;
}

GhostSequence counts_tower(const VarietySpec& v, unsigned n_max, std::uint64_t budget) {
    if (n_max < 1) throw std::invalid_argument("counts_tower: n_max must be >= 1");
    std::vector<Rational> out;
    out.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        out.emplace_back(mpz_class(static_cast<unsigned long>(count_points(v, n, budget))));
    return GhostSequence(std::move(out));
}

}  // namespace motzeta
