#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "motzeta/endo.hpp"
#include "motzeta/witt.hpp"

namespace motzeta {

class MotiveExpr;
using MotivePtr = std::shared_ptr<const MotiveExpr>;

// AST over the builtin motive classes of the desk-scale Grothendieck ring of
// varieties. There is no normalization: Torus(1) and Diff(Affine(1),
// Point(1)) stay distinct syntactically and agree only after evaluation.
namespace mot {

struct Point {  // Spec F_{q^m}, m >= 1
    unsigned m;
    friend bool operator==(const Point&, const Point&) = default;
};
struct Lefschetz {  // the class of A^1
    friend bool operator==(const Lefschetz&, const Lefschetz&) = default;
};
struct Affine {
    unsigned n;
    friend bool operator==(const Affine&, const Affine&) = default;
};
struct Projective {
    unsigned n;
    friend bool operator==(const Projective&, const Projective&) = default;
};
struct Torus {  // (G_m)^r
    unsigned r;
    friend bool operator==(const Torus&, const Torus&) = default;
};
struct Cohomology {  // user-supplied Frobenius data
    EndoComplex data;
    std::string source;  // file path, kept for printing
    friend bool operator==(const Cohomology&, const Cohomology&) = default;
};
struct Sum {
    MotivePtr lhs, rhs;
};
struct Diff {
    MotivePtr lhs, rhs;
};
struct Prod {
    MotivePtr lhs, rhs;
};

}  // namespace mot

class MotiveExpr {
public:
    using Node = std::variant<mot::Point, mot::Lefschetz, mot::Affine, mot::Projective,
                              mot::Torus, mot::Cohomology, mot::Sum, mot::Diff, mot::Prod>;

    explicit MotiveExpr(Node node) : node_(std::move(node)) {}
    const Node& node() const { return node_; }

private:
    Node node_;
};

bool operator==(const MotiveExpr& a, const MotiveExpr& b);
inline bool operator!=(const MotiveExpr& a, const MotiveExpr& b) { return !(a == b); }

// builders
MotivePtr point(unsigned m);
MotivePtr lefschetz();
MotivePtr affine(unsigned n);
MotivePtr projective(unsigned n);
MotivePtr torus(unsigned r);
MotivePtr cohomology(EndoComplex data, std::string source = {});
MotivePtr sum(MotivePtr l, MotivePtr r);
MotivePtr diff(MotivePtr l, MotivePtr r);
MotivePtr prod(MotivePtr l, MotivePtr r);

// Base field F_q with q = p^k, plus the truncation order used when reporting
// series. Validates that q is a prime power.
struct ZetaContext {
    std::uint64_t q;
    std::uint64_t p;
    unsigned k;
    int order;

    static ZetaContext make(std::uint64_t q, int order = 10);
};

// Ring morphism into W(Q)_rat: Sum -> w_add, Diff -> w_add of w_neg,
// Prod -> w_mul; generators expand to products of (1 - q^i t)^-1 factors.
WittVector eval_zeta(const MotiveExpr& x, const ZetaContext& ctx);

// ghost(eval_zeta(x)): entry n is the virtual point count #X(F_{q^n}) for
// effective classes.
GhostSequence point_counts(const MotiveExpr& x, const ZetaContext& ctx, int n_max);

// Compactly supported Euler characteristic: ring morphism to Z with
// Point(m) -> m, L -> 1, Torus -> 0 and Cohomology -> euler_char.
mpz_class euler_char_c(const MotiveExpr& x);

}  // namespace motzeta
