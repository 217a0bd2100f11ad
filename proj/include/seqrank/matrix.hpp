#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices over the Gaussian rationals and the eliminations
 *        the rank certificates are built from.
 *
 * Everything here is exact: the determinant runs Bareiss single-step
 * fraction-free elimination, kernels and solves run Gauss–Jordan over Q(i),
 * and the positive-semidefiniteness test runs a symmetric elimination whose
 * pivots are exactly the ratios of leading principal minors. No floating
 * point enters at any stage.
 */

#include <cstddef>
#include <vector>

#include "seqrank/errors.hpp"
#include "seqrank/rational.hpp"
#include "seqrank/sequence.hpp"

namespace seqrank {

class ExactMatrix {
public:
    /// rows × cols zero matrix.
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    /// @throws ShapeError when entries.size() != rows * cols
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw ShapeError("entry list does not fill the matrix");
    }

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<GaussianRational>& entries() const { return e_; }

    ExactMatrix transpose() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> e_;
};

/// The (m+1)×(m+1) window with (i,j) entry c_{t+i+j}.
/// @throws PrefixTooShort when the window needs terms past the prefix
/// @throws DegenerateInput when t lies before the sequence origin
ExactMatrix hankel_window(const SequenceWindow& seq, std::size_t m, long t);

/// Exact determinant by Bareiss fraction-free elimination.
/// @throws ShapeError on a non-square matrix
GaussianRational exact_det(const ExactMatrix& m);

/// Exact basis of the right null space; empty for full column rank. Each
/// basis vector is normalized so its last nonzero entry is 1.
std::vector<std::vector<GaussianRational>> kernel_basis(const ExactMatrix& m);

/// Column rank by exact elimination.
std::size_t elimination_rank(const ExactMatrix& m);

/// Exact solution of Mx = b for square M.
/// @throws ShapeError when M is not square or b has the wrong length
/// @throws SingularMatrix when M is singular
std::vector<GaussianRational> solve(const ExactMatrix& m, const std::vector<GaussianRational>& b);

/// True iff the matrix is positive semidefinite, decided by symmetric
/// elimination with exact pivots (a zero pivot must carry a zero row, a
/// negative pivot is disqualifying).
/// @throws ShapeError when the matrix is not square, not symmetric, or has
///         non-real entries
bool psd_window_check(const ExactMatrix& m);

}  // namespace seqrank
