#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace curveglue {

// Dense exact-rational matrix. Row-major, value semantics.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
        : rows_(rows), cols_(cols), a_(std::move(data)) {
        if (a_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    void append_row(const std::vector<Rational>& v) {
        if (cols_ == 0 && rows_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        a_.insert(a_.end(), v.begin(), v.end());
        ++rows_;
    }

    bool operator==(const Matrix& o) const = default;

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matmul shape mismatch");
    Matrix z(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Rational& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

inline Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("stack shape mismatch");
    Matrix m = top;
    for (std::size_t r = 0; r < bottom.rows(); ++r) m.append_row(bottom.row(r));
    return m;
}

struct RrefResult {
    Matrix mat;                       // reduced row-echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    std::size_t rank = 0;
};

// Gauss-Jordan over Q; exact, no pivoting heuristics needed.
inline RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Rational inv = m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

// A linear subspace of Q^ambient, held as its unique RREF basis; equality of
// subspaces is bit equality of bases.
struct Subspace {
    std::size_t ambient = 0;
    Matrix basis;  // rank x ambient, RREF, no zero rows

    bool operator==(const Subspace& o) const = default;
    std::size_t dim() const { return basis.rows(); }
};

inline Subspace row_space(const Matrix& m) {
    RrefResult r = rref(m);
    Matrix b(0, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) b.append_row(r.mat.row(i));
    return {m.cols(), std::move(b)};
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
}

// Raw free-column nullspace basis, rows by ascending free column. Equals the
// reduced echelon basis taken with the column order reversed (pivots sit at
// the right end of each row).
inline Matrix kernel_raw(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    Matrix b(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat.at(i, f);
        b.append_row(v);
    }
    return b;
}

// Nullspace as a Subspace: re-reducing the raw vectors gives the RREF basis.
inline Subspace kernel(const Matrix& m) { return row_space(kernel_raw(m)); }

// Row-space basis in the reversed-column echelon form (same convention as
// kernel_raw): reduce with columns read right to left, list rows so the
// rightmost pivots come last.
inline Matrix mirrored_row_basis(const Matrix& m) {
    Matrix rev(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rev.at(i, j) = m.at(i, m.cols() - 1 - j);
    RrefResult r = rref(rev);
    Matrix out(0, m.cols());
    for (std::size_t i = r.rank; i-- > 0;) {
        std::vector<Rational> row = r.mat.row(i);
        std::reverse(row.begin(), row.end());
        out.append_row(std::move(row));
    }
    return out;
}

}  // namespace curveglue
