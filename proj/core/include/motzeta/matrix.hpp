#pragma once

#include <iosfwd>
#include <vector>

#include "motzeta/polynomial.hpp"
#include "motzeta/rational.hpp"

namespace motzeta {

// Square matrix over Q. Dimension 0 is allowed (the empty matrix).
class Matrix {
public:
    Matrix() : dim_(0) {}
    explicit Matrix(int dim);  // zero matrix
    Matrix(int dim, std::vector<Rational> entries);  // row-major

    static Matrix identity(int dim);

    int dim() const { return dim_; }
    const Rational& at(int i, int j) const { return e_[index(i, j)]; }
    void set(int i, int j, const Rational& v) { e_[index(i, j)] = v; }

    Rational trace() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const Rational& c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
    size_t index(int i, int j) const;
    int dim_;
    std::vector<Rational> e_;
};

// det(1 - tA) as a polynomial of degree <= dim with constant term 1,
// computed by the Faddeev-LeVerrier recurrence over exact rationals.
Polynomial char_series(const Matrix& a);

// Kronecker product; block (i,j) equals A[i][j]*B.
Matrix kronecker(const Matrix& a, const Matrix& b);

Matrix block_diag(const Matrix& a, const Matrix& b);

// The matrix whose char_series equals p; requires p(0) = 1. A polynomial of
// degree d yields a d-dimensional companion matrix (d = 0 gives the empty
// matrix).
Matrix companion_matrix(const Polynomial& p);

// Tr(A^1), ..., Tr(A^n).
std::vector<Rational> power_traces(const Matrix& a, int n);

// Reconstructs det(1 - tA) of a d-dimensional matrix from its power traces
// p_n = Tr(A^n), n = 1..d, via the Newton identities. traces may be longer
// than d; only the first d entries are used.
Polynomial char_series_from_traces(const std::vector<Rational>& traces, int d);

}  // namespace motzeta
