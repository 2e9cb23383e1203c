#include "asep/matrix.hpp"

#include <algorithm>

namespace asep {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      e_(rows * cols, MultiPoly::zero(ring_)) {
    if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    check_same_ring(ring_, o.ring_);
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    PolyMatrix out(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const MultiPoly& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const MultiPoly& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    check_same_ring(ring_, o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    check_same_ring(ring_, o.ring_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
    return out;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& c) const {
    PolyMatrix out = *this;
    for (auto& x : out.e_) x *= c;
    return out;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix out(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

MultiPoly determinant(PolyMatrix a) {
    if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    MultiPoly prev = MultiPoly::constant(a.ring(), 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k).is_zero()) ++piv;
        if (piv == n) return MultiPoly::zero(a.ring());
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j))
                                 .exact_div(prev);
            }
            a.at(i, k) = MultiPoly::zero(a.ring());
        }
        prev = a.at(k, k);
    }
    MultiPoly det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

std::vector<MultiPoly> left_kernel(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw Error("left_kernel of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 1) {
        if (!m.at(0, 0).is_zero()) throw KernelRankError(1, 1);
        return {MultiPoly::constant(m.ring(), 1)};
    }

    // Solve A x = 0 for A = m^T: fraction-free forward elimination, then
    // fraction-free back substitution.  Pivot rows are swapped into place,
    // so after elimination row i holds pivot P_i at column c_i, entries in
    // later pivot columns, and the transformed free-column entry.
    PolyMatrix a = m.transposed();
    MultiPoly prev = MultiPoly::constant(a.ring(), 1);
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> col_done(n, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && a.at(piv, c).is_zero()) ++piv;
        if (piv == n) continue; // free column
        if (piv != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(r, j), a.at(piv, j));
        col_done[c] = true;
        pivot_cols.push_back(c);
        const MultiPoly& p = a.at(r, c);
        for (std::size_t i = r + 1; i < n; ++i) {
            const MultiPoly aic = a.at(i, c);
            for (std::size_t j = c + 1; j < n; ++j) {
                if (aic.is_zero() && a.at(i, j).is_zero()) continue;
                a.at(i, j) = (p * a.at(i, j) - aic * a.at(r, j)).exact_div(prev);
            }
            a.at(i, c) = MultiPoly::zero(a.ring());
        }
        prev = p;
        ++r;
    }
    const std::size_t rank = r;
    if (rank != n - 1) throw KernelRankError(rank, n);

    std::size_t free_col = 0;
    while (col_done[free_col]) ++free_col;

    // Back substitution: with x_f set to the last pivot, every division by
    // the row's own pivot is exact and the combined vector lies in the
    // kernel (entries are minors of the pivoted system).
    const MultiPoly& last_pivot = prev;
    std::vector<MultiPoly> x(n, MultiPoly::zero(m.ring()));
    x[free_col] = last_pivot;
    for (std::size_t back = rank; back-- > 0;) {
        if (back + 1 == rank) {
            x[pivot_cols[back]] = -a.at(back, free_col);
            continue;
        }
        MultiPoly num = -(last_pivot * a.at(back, free_col));
        for (std::size_t j = back + 1; j < rank; ++j) {
            const MultiPoly& coeff = a.at(back, pivot_cols[j]);
            if (coeff.is_zero() || x[pivot_cols[j]].is_zero()) continue;
            num -= coeff * x[pivot_cols[j]];
        }
        x[pivot_cols[back]] = num.exact_div(a.at(back, pivot_cols[back]));
    }

    // Clear collective integer content, then fix the sign.
    Int g = 0;
    for (const auto& p : x) {
        Int c = p.integer_content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (g == 0) throw Error("internal error: zero kernel vector");
    bool flip = false;
    for (const auto& p : x) {
        if (p.is_zero()) continue;
        flip = p.leading_coefficient() < 0;
        break;
    }
    if (flip) g = -g;
    if (g != 1)
        for (auto& p : x) p = p.exact_div(MultiPoly::constant(m.ring(), g));

    // The kernel identity must hold exactly; anything else is a bug.
    for (std::size_t j = 0; j < n; ++j) {
        MultiPoly s = MultiPoly::zero(m.ring());
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero() || m.at(i, j).is_zero()) continue;
            s += x[i] * m.at(i, j);
        }
        if (!s.is_zero()) throw Error("internal error: kernel identity violated");
    }
    return x;
}

Rat determinant_rational(std::vector<std::vector<Rat>> a) {
    const std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

} // namespace asep
