#pragma once

/**
 * @file rational.hpp
 * @brief Exact Gaussian-rational scalars (elements of Q(i)).
 *
 * Every certified decision in the library bottoms out in arithmetic on this
 * type: fractions are always stored reduced with positive denominators, so
 * equality is literal representation equality and is decidable. No floating
 * point appears anywhere in here; the numeric boundary lives in roots.hpp.
 */

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "seqrank/errors.hpp"

namespace seqrank {

using Int = mpz_class;
using Rat = mpq_class;

/// Build a canonical rational from numerator/denominator.
/// @throws DivisionByZero when den = 0
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero();
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// An element a + bi of Q(i) with a, b exact rationals.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int v) : re_(v), im_(0) {}            // NOLINT: implicit by design
    GaussianRational(long v) : re_(v), im_(0) {}           // NOLINT
    GaussianRational(const Rat& re) : re_(re), im_(0) {}   // NOLINT
    GaussianRational(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    /// The imaginary unit.
    static GaussianRational i() { return {Rat(0), Rat(1)}; }

    const Rat& real() const { return re_; }
    const Rat& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    /// True when the value is a (real) integer.
    bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

    GaussianRational conj() const { return {re_, Rat(-im_)}; }

    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {Rat(-re_), Rat(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rat re = re_ * o.re_ - im_ * o.im_;
        Rat im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    /// @throws DivisionByZero when o = 0
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw DivisionByZero();
        Rat n = o.norm();
        Rat re = (re_ * o.re_ + im_ * o.im_) / n;
        Rat im = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Nearest double-precision complex approximation (display / numeric boundary).
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Render in the literal grammar: `a`, `a/b`, `a+ci`, `a/b+c/di`, `ci`.
    std::string str() const;

    /// Parse the literal grammar; whitespace-insensitive.
    /// @throws ParseError on anything else
    static GaussianRational parse(std::string_view text);

private:
    Rat re_;
    Rat im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Render a plain rational as `n` or `n/d`.
std::string rat_str(const Rat& q);

}  // namespace seqrank
