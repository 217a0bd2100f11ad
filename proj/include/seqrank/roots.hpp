#pragma once

/**
 * @file roots.hpp
 * @brief The numeric boundary: simultaneous polynomial root finding with
 *        exact-root recovery.
 *
 * Roots are located by Aberth–Ehrlich iteration on each squarefree factor, so
 * multiplicities never degrade convergence — they come from Yun's
 * decomposition, exactly. Every numeric root is then offered back to exact
 * arithmetic: its real and imaginary parts are run through continued-fraction
 * reconstruction and a candidate is accepted only when the polynomial
 * vanishes on it exactly. A value is "exact" here only if algebra, not
 * floating point, says so.
 */

#include <complex>
#include <optional>
#include <vector>

#include "seqrank/poly.hpp"

namespace seqrank {

/// Relative stopping tolerance for the root iteration.
inline constexpr double kRootTol = 1e-12;

/// Largest denominator considered when snapping a numeric root back to Q(i).
inline constexpr long kReconstructDenCap = 1'000'000;

/// A complex number that remembers whether it is exactly known.
struct ComplexValue {
    std::complex<double> approx;
    std::optional<GaussianRational> exact;

    static ComplexValue from_exact(GaussianRational g) {
        std::complex<double> a = g.to_complex();
        return {a, std::move(g)};
    }
    static ComplexValue numeric(std::complex<double> z) { return {z, std::nullopt}; }

    bool is_exact() const { return exact.has_value(); }
};

/// Deterministic certificate ordering: magnitude first, then phase.
bool magnitude_phase_less(const std::complex<double>& a, const std::complex<double>& b);

/// All complex roots of p, with multiplicity, by Aberth–Ehrlich iteration on
/// the squarefree factors. Each returned z satisfies
/// |p(z)| <= tol * sum_i |c_i| max(1,|z|)^i.
/// @throws DegenerateInput when degree < 1
/// @throws RootFindingFailed when the iteration exhausts its restart budget
std::vector<std::complex<double>> find_roots(const ExactPoly& p, double tol = kRootTol);

/// A distinct root with its exact multiplicity.
struct LabeledRoot {
    ComplexValue value;
    std::size_t multiplicity;
};

struct RootExtraction {
    std::vector<LabeledRoot> roots;  // distinct, sorted by (magnitude, phase)
    bool all_exact;                  // every root carries an exact literal
};

/// Distinct roots of p with exact multiplicities (via Yun), each snapped back
/// to Q(i) when continued-fraction reconstruction finds an exact root. The
/// all_exact flag is set only after the reassembled product of exact linear
/// factors reproduces the squarefree part coefficient-for-coefficient.
/// @throws DegenerateInput when degree < 1
RootExtraction extract_roots(const ExactPoly& p, double tol = kRootTol);

/// Dense complex linear solve (partial pivoting); the numeric twin of the
/// exact `solve`.
/// @throws ShapeError on dimension mismatch
/// @throws SingularMatrix when elimination hits a vanishing pivot column
std::vector<std::complex<double>> solve_dense(
    std::vector<std::vector<std::complex<double>>> a, std::vector<std::complex<double>> b);

}  // namespace seqrank
