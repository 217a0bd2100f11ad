#include "seqrank/matrix.hpp"

#include <utility>

namespace seqrank {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("inner dimensions disagree in matrix product");
    ExactMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("dimensions disagree in matrix difference");
    ExactMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
    return c;
}

ExactMatrix hankel_window(const SequenceWindow& seq, std::size_t m, long t) {
    if (t < seq.start_index()) throw DegenerateInput("hankel window starts before the sequence");
    long last = t + 2 * static_cast<long>(m);
    if (last > seq.back_index())
        throw PrefixTooShort(static_cast<std::size_t>(last - seq.start_index() + 1), seq.size());
    ExactMatrix h(m + 1, m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            h.at(i, j) = seq.term(t + static_cast<long>(i + j));
    return h;
}

GaussianRational exact_det(const ExactMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    ExactMatrix a = m;
    GaussianRational prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!a.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = GaussianRational{};
        }
        prev = a.at(k, k);
    }
    return negate ? -a.at(n - 1, n - 1) : a.at(n - 1, n - 1);
}

namespace {

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(ExactMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(piv, j));
        GaussianRational inv = GaussianRational(1) / a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            GaussianRational f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<GaussianRational>> kernel_basis(const ExactMatrix& m) {
    ExactMatrix a = m;
    std::vector<std::size_t> pivots = rref(a);
    std::vector<std::vector<GaussianRational>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        // Free column: unit there, minus the reduced column on the pivots.
        // Pivot columns past this one carry zero, so the last nonzero entry
        // is the 1 at the free position.
        std::vector<GaussianRational> v(m.cols());
        v[col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.at(i, col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t elimination_rank(const ExactMatrix& m) {
    ExactMatrix a = m;
    return rref(a).size();
}

std::vector<GaussianRational> solve(const ExactMatrix& m, const std::vector<GaussianRational>& b) {
    if (!m.is_square()) throw ShapeError("solve needs a square matrix");
    if (b.size() != m.rows()) throw ShapeError("right-hand side length disagrees with the matrix");
    std::size_t n = m.rows();
    ExactMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() == n)) throw SingularMatrix();
    std::vector<GaussianRational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
    return x;
}

bool psd_window_check(const ExactMatrix& m) {
    if (!m.is_square()) throw ShapeError("semidefiniteness test needs a square matrix");
    std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!m.at(i, j).is_real())
                throw ShapeError("semidefiniteness test needs real entries");
            if (i < j && m.at(i, j) != m.at(j, i))
                throw ShapeError("semidefiniteness test needs a symmetric matrix");
        }
    // Symmetric elimination: pivots are ratios of consecutive leading
    // principal minors. A PSD matrix with a zero diagonal entry must be zero
    // along that whole row, so a zero pivot either skips cleanly or refutes.
    ExactMatrix a = m;
    for (std::size_t k = 0; k < n; ++k) {
        const GaussianRational& p = a.at(k, k);
        if (p.real() < 0) return false;
        if (p.is_zero()) {
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a.at(k, j).is_zero()) return false;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            GaussianRational f = a.at(i, k) / p;
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return true;
}

}  // namespace seqrank
