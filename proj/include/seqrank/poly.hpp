#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over the Gaussian rationals.
 *
 * Coefficients are stored lowest degree first; the zero polynomial is the
 * empty list and has no degree — operations that need one reject it instead
 * of inventing a -infinity convention. The gcd runs a fraction-free
 * (subresultant) remainder sequence and returns a monic result, which is what
 * the squarefree test, the radical-ideal test and the discriminant all sit on.
 */

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "seqrank/rational.hpp"

namespace seqrank {

class ExactPoly {
public:
    ExactPoly() = default;
    ExactPoly(std::initializer_list<GaussianRational> coeffs_lowest_first)
        : c_(coeffs_lowest_first) {
        trim();
    }
    explicit ExactPoly(std::vector<GaussianRational> coeffs_lowest_first)
        : c_(std::move(coeffs_lowest_first)) {
        trim();
    }

    /// The constant polynomial c (zero polynomial for c = 0).
    static ExactPoly constant(const GaussianRational& c) { return ExactPoly({c}); }
    /// x^k.
    static ExactPoly monomial(std::size_t k, const GaussianRational& coeff = 1);

    bool is_zero() const { return c_.empty(); }

    /// @throws DegenerateInput on the zero polynomial
    std::size_t degree() const {
        if (c_.empty()) throw DegenerateInput("degree of the zero polynomial");
        return c_.size() - 1;
    }

    const std::vector<GaussianRational>& coeffs() const { return c_; }

    /// Coefficient of x^k (zero beyond the stored length).
    const GaussianRational& coeff(std::size_t k) const {
        static const GaussianRational kZero{};
        return k < c_.size() ? c_[k] : kZero;
    }

    /// @throws DegenerateInput on the zero polynomial
    const GaussianRational& leading() const {
        if (c_.empty()) throw DegenerateInput("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == GaussianRational(1); }

    ExactPoly operator-() const;
    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
    ExactPoly operator*(const GaussianRational& s) const;

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ExactPoly& a, const ExactPoly& b) { return !(a == b); }

    ExactPoly derivative() const;

    /// Scale to leading coefficient 1.
    /// @throws DegenerateInput on the zero polynomial
    ExactPoly monic() const;

    /// Coefficients reversed: x^n p(1/x) for n = degree. Zero roots of p simply
    /// drop the degree of the result.
    /// @throws DegenerateInput on the zero polynomial
    ExactPoly reciprocal() const;

    /// Exact Horner evaluation.
    GaussianRational eval(const GaussianRational& z) const;

    /// Render with the given variable name, highest degree first.
    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

/// Euclidean division over Q(i): a = q*b + r with deg r < deg b.
/// @throws DivisionByZero when b = 0
std::pair<ExactPoly, ExactPoly> poly_divmod(const ExactPoly& a, const ExactPoly& b);

/// Monic gcd via a fraction-free (subresultant) remainder sequence.
/// @throws DegenerateInput when both inputs are zero
ExactPoly poly_gcd(const ExactPoly& p, const ExactPoly& q);

/// True iff gcd(p, p') is constant.
/// @throws DegenerateInput when p is zero or constant
bool is_squarefree(const ExactPoly& p);

/// Resultant of two nonzero polynomials.
/// @throws DegenerateInput when either input is zero
GaussianRational resultant(const ExactPoly& p, const ExactPoly& q);

/// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p); zero iff p has a repeated root.
/// @throws DegenerateInput when degree < 2
GaussianRational discriminant(const ExactPoly& p);

/// Exact Horner evaluation (free-function form of ExactPoly::eval).
GaussianRational eval_poly(const ExactPoly& p, const GaussianRational& z);

/// Squarefree decomposition p = lc * prod f_k^k (Yun): returns the (f_k, k)
/// pairs with f_k monic squarefree, pairwise coprime, deg f_k >= 1.
/// @throws DegenerateInput when p is zero
std::vector<std::pair<ExactPoly, std::size_t>> squarefree_decomposition(const ExactPoly& p);

}  // namespace seqrank
