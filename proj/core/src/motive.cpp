#include "motzeta/motive.hpp"

#include <stdexcept>

namespace motzeta {

bool operator==(const MotiveExpr& a, const MotiveExpr& b) {
    const auto& na = a.node();
    const auto& nb = b.node();
    if (na.index() != nb.index()) return false;
    return std::visit(
        [&nb](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(nb);
            if constexpr (std::is_same_v<T, mot::Sum> || std::is_same_v<T, mot::Diff> ||
                          std::is_same_v<T, mot::Prod>) {
                return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
            } else {
                return x == y;
            }
        },
        na);
}

MotivePtr point(unsigned m) {
    if (m < 1) throw std::domain_error("point: m must be >= 1");
    return std::make_shared<MotiveExpr>(mot::Point{m});
}
MotivePtr lefschetz() { return std::make_shared<MotiveExpr>(mot::Lefschetz{}); }
MotivePtr affine(unsigned n) { return std::make_shared<MotiveExpr>(mot::Affine{n}); }
MotivePtr projective(unsigned n) { return std::make_shared<MotiveExpr>(mot::Projective{n}); }
MotivePtr torus(unsigned r) { return std::make_shared<MotiveExpr>(mot::Torus{r}); }
MotivePtr cohomology(EndoComplex data, std::string source) {
    return std::make_shared<MotiveExpr>(mot::Cohomology{std::move(data), std::move(source)});
}
MotivePtr sum(MotivePtr l, MotivePtr r) {
    return std::make_shared<MotiveExpr>(mot::Sum{std::move(l), std::move(r)});
}
MotivePtr diff(MotivePtr l, MotivePtr r) {
    return std::make_shared<MotiveExpr>(mot::Diff{std::move(l), std::move(r)});
}
MotivePtr prod(MotivePtr l, MotivePtr r) {
    return std::make_shared<MotiveExpr>(mot::Prod{std::move(l), std::move(r)});
}

ZetaContext ZetaContext::make(std::uint64_t q, int order) {
    if (q < 2) throw std::invalid_argument("ZetaContext: q must be a prime power >= 2");
    if (order < 1) throw std::invalid_argument("ZetaContext: order must be >= 1");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself is prime
    unsigned k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1)
        throw std::invalid_argument("ZetaContext: " + std::to_string(q) + " is not a prime power");
    return ZetaContext{q, p, k, order};
}

namespace {

// (1 - c t)^-1
WittVector geometric(const Rational& c) {
    return WittVector(Polynomial::one(), Polynomial({Rational(1), -c}));
}

WittVector affine_zeta(const ZetaContext& ctx, unsigned n) {
    return geometric(int_pow(mpz_class(static_cast<unsigned long>(ctx.q)), n));
}

}  // namespace

WittVector eval_zeta(const MotiveExpr& x, const ZetaContext& ctx) {
    return std::visit(
        [&ctx](const auto& node) -> WittVector {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, mot::Point>) {
                // (1 - t^m)^-1
                Polynomial den =
                    Polynomial::one() - Polynomial::monomial(Rational(1), static_cast<int>(node.m));
                return WittVector(Polynomial::one(), den);
            } else if constexpr (std::is_same_v<T, mot::Lefschetz>) {
                return affine_zeta(ctx, 1);
            } else if constexpr (std::is_same_v<T, mot::Affine>) {
                return affine_zeta(ctx, node.n);
            } else if constexpr (std::is_same_v<T, mot::Projective>) {
                // cell decomposition: P^n = A^0 + A^1 + ... + A^n
                WittVector acc;
                for (unsigned i = 0; i <= node.n; ++i) acc = w_add(acc, affine_zeta(ctx, i));
                return acc;
            } else if constexpr (std::is_same_v<T, mot::Torus>) {
                const WittVector gm = w_add(affine_zeta(ctx, 1), w_neg(affine_zeta(ctx, 0)));
                WittVector acc = w_one();
                for (unsigned i = 0; i < node.r; ++i) acc = w_mul(acc, gm);
                return acc;
            } else if constexpr (std::is_same_v<T, mot::Cohomology>) {
                return zeta(node.data);
            } else if constexpr (std::is_same_v<T, mot::Sum>) {
                return w_add(eval_zeta(*node.lhs, ctx), eval_zeta(*node.rhs, ctx));
            } else if constexpr (std::is_same_v<T, mot::Diff>) {
                return w_add(eval_zeta(*node.lhs, ctx), w_neg(eval_zeta(*node.rhs, ctx)));
            } else {
                static_assert(std::is_same_v<T, mot::Prod>);
                return w_mul(eval_zeta(*node.lhs, ctx), eval_zeta(*node.rhs, ctx));
            }
        },
        x.node());
}

GhostSequence point_counts(const MotiveExpr& x, const ZetaContext& ctx, int n_max) {
    if (n_max < 1) throw std::domain_error("point_counts: n_max must be >= 1");
    return ghost(eval_zeta(x, ctx), n_max);
}

mpz_class euler_char_c(const MotiveExpr& x) {
    return std::visit(
        [](const auto& node) -> mpz_class {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, mot::Point>) {
                return mpz_class(node.m);  // m geometric points
            } else if constexpr (std::is_same_v<T, mot::Lefschetz>) {
                return 1;
            } else if constexpr (std::is_same_v<T, mot::Affine>) {
                return 1;
            } else if constexpr (std::is_same_v<T, mot::Projective>) {
                return mpz_class(node.n + 1);
            } else if constexpr (std::is_same_v<T, mot::Torus>) {
                return node.r == 0 ? 1 : 0;  // chi_c(G_m)^r = 0^r
            } else if constexpr (std::is_same_v<T, mot::Cohomology>) {
                return euler_char(node.data).to_integer();
            } else if constexpr (std::is_same_v<T, mot::Sum>) {
                return euler_char_c(*node.lhs) + euler_char_c(*node.rhs);
            } else if constexpr (std::is_same_v<T, mot::Diff>) {
                return euler_char_c(*node.lhs) - euler_char_c(*node.rhs);
            } else {
                static_assert(std::is_same_v<T, mot::Prod>);
                return euler_char_c(*node.lhs) * euler_char_c(*node.rhs);
            }
        },
        x.node());
}

}  // namespace motzeta
