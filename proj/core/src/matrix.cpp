#include "motzeta/matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace motzeta {

Matrix::Matrix(int dim) : dim_(dim) {
    if (dim < 0) throw std::domain_error("Matrix: negative dimension");
    e_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), Rational(0));
}

Matrix::Matrix(int dim, std::vector<Rational> entries) : dim_(dim), e_(std::move(entries)) {
    if (dim < 0) throw std::domain_error("Matrix: negative dimension");
    if (e_.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim))
        throw std::invalid_argument("Matrix: entry count does not match dimension");
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, Rational(1));
    return m;
}

size_t Matrix::index(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("Matrix: index out of range");
    return static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j);
}

Rational Matrix::trace() const {
    Rational t(0);
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("Matrix: dimension mismatch in +");
    Matrix r(a.dim_);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("Matrix: dimension mismatch in *");
    const int n = a.dim_;
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.e_[static_cast<size_t>(i) * n + j] += aik * b.at(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix r(*this);
    for (auto& x : r.e_) x *= c;
    return r;
}

Polynomial char_series(const Matrix& a) {
    const int n = a.dim();
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[0] = Rational(1);
    if (n == 0) return Polynomial(std::move(c));
    // Faddeev-LeVerrier: M_1 = A, c_k = -Tr(M_k)/k, M_{k+1} = A*(M_k + c_k*I).
    // Then det(1 - tA) = 1 + c_1 t + ... + c_n t^n.
    Matrix m = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix shifted = m;
            for (int i = 0; i < n; ++i) shifted.set(i, i, shifted.at(i, i) + c[static_cast<size_t>(k - 1)]);
            m = a * shifted;
        }
        c[static_cast<size_t>(k)] = -(m.trace() / Rational(static_cast<long>(k)));
    }
    return Polynomial(std::move(c));
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    const int na = a.dim(), nb = b.dim();
    Matrix r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const Rational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    r.set(i * nb + k, j * nb + l, aij * b.at(k, l));
        }
    return r;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    const int na = a.dim(), nb = b.dim();
    Matrix r(na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) r.set(na + i, na + j, b.at(i, j));
    return r;
}

Matrix companion_matrix(const Polynomial& p) {
    if (!p.constant_term().is_one())
        throw std::domain_error("companion_matrix: constant term must be 1");
    const int d = p.degree();
    Matrix m(d);
    if (d == 0) return m;
    // char_series(m) = 1 + p_1 t + ... + p_d t^d means the characteristic
    // polynomial is x^d + p_1 x^{d-1} + ... + p_d; its companion matrix has
    // subdiagonal 1 and last column -p_d, ..., -p_1 from top to bottom.
    for (int i = 1; i < d; ++i) m.set(i, i - 1, Rational(1));
    for (int i = 0; i < d; ++i) m.set(i, d - 1, -p.coeff(d - i));
    return m;
}

std::vector<Rational> power_traces(const Matrix& a, int n) {
    std::vector<Rational> t;
    if (n <= 0) return t;
    t.reserve(static_cast<size_t>(n));
    Matrix p = a;
    t.push_back(p.trace());
    for (int k = 2; k <= n; ++k) {
        p = p * a;
        t.push_back(p.trace());
    }
    return t;
}

Polynomial char_series_from_traces(const std::vector<Rational>& traces, int d) {
    if (static_cast<int>(traces.size()) < d)
        throw std::invalid_argument("char_series_from_traces: not enough traces");
    // Newton: with det(1 - tA) = sum a_k t^k, a_0 = 1,
    // k*a_k = -sum_{i=1}^{k} p_i * a_{k-i}.
    std::vector<Rational> a(static_cast<size_t>(d) + 1, Rational(0));
    a[0] = Rational(1);
    for (int k = 1; k <= d; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += traces[static_cast<size_t>(i - 1)] * a[static_cast<size_t>(k - i)];
        a[static_cast<size_t>(k)] = -acc / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(a));
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (int i = 0; i < m.dim(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < m.dim(); ++j) os << (j ? " " : "") << m.at(i, j);
    }
    return os << "]";
}

}  // namespace motzeta
