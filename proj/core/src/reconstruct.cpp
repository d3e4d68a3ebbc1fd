#include "motzeta/reconstruct.hpp"

#include <stdexcept>
#include <vector>

namespace motzeta {

namespace {

// Solves A x = b exactly over Q by Gauss-Jordan elimination. Returns the
// particular solution with free variables set to zero, or nullopt if the
// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<size_t> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[row]);
        std::swap(b[sel], b[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols, Rational(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

}  // namespace

std::optional<WittVector> reconstruct_zeta(const GhostSequence& counts) {
    const int len = counts.order();
    if (len < 2) throw std::invalid_argument("reconstruct_zeta: need at least 2 counts");

    // W = exp(sum g_n t^n / n), known exactly to order len
    const PowerSeries w = from_counts(counts);

    for (int total = 0; total <= 2 * (len / 2 - 1); ++total) {
        for (int dd = 0; dd <= total; ++dd) {
            const int dn = total - dd;
            const int d = std::max(dn, dd);
            if (2 * (d + 1) > len) continue;

            // unknowns x_1..x_dd (denominator coefficients); for every
            // j in dn+1..len:  w_j + sum_i x_i w_{j-i} = 0
            std::vector<std::vector<Rational>> rows;
            std::vector<Rational> rhs;
            for (int j = dn + 1; j <= len; ++j) {
                std::vector<Rational> r(static_cast<size_t>(dd), Rational(0));
                for (int i = 1; i <= dd; ++i)
                    if (j - i >= 0) r[static_cast<size_t>(i - 1)] = w.coeff(j - i);
                rows.push_back(std::move(r));
                rhs.push_back(-w.coeff(j));
            }
            auto sol = solve_linear(std::move(rows), std::move(rhs));
            if (!sol) continue;

            std::vector<Rational> den_c(static_cast<size_t>(dd) + 1, Rational(0));
            den_c[0] = Rational(1);
            for (int i = 1; i <= dd; ++i) den_c[static_cast<size_t>(i)] = (*sol)[static_cast<size_t>(i - 1)];
            const Polynomial den(std::move(den_c));

            // num = W * den truncated below degree dn+1
            std::vector<Rational> num_c(static_cast<size_t>(dn) + 1, Rational(0));
            for (int j = 0; j <= dn; ++j) {
                Rational acc(0);
                for (int i = 0; i <= std::min(j, dd); ++i) acc += den.coeff(i) * w.coeff(j - i);
                num_c[static_cast<size_t>(j)] = acc;
            }
            const Polynomial num(std::move(num_c));

            WittVector candidate(num, den);
            if (ghost(candidate, len) == counts) return candidate;
        }
    }
    return std::nullopt;
}

}  // namespace motzeta
