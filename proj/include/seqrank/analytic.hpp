#pragma once

/**
 * @file analytic.hpp
 * @brief The structural boundary around the rank algorithms: forward moments
 *        of atomic measures, measure recovery, Vandermonde and Gramian
 *        factorizations of Hankel windows, binary-form Waring decomposition,
 *        and rational generating functions.
 *
 * The forward-moment map is the brute-force oracle the whole test suite
 * leans on, so it is exact-only by design: handing it a numeric atom is an
 * error, not a silent downgrade. Everything else carries the usual duality —
 * exact results whenever the underlying rank certificate is exact, numeric
 * with an explicit defect bound otherwise.
 */

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seqrank/matrix.hpp"
#include "seqrank/poly.hpp"
#include "seqrank/ranks.hpp"
#include "seqrank/roots.hpp"
#include "seqrank/sequence.hpp"

namespace seqrank {

/// A finite atomic complex measure: atoms pairwise distinct and nonzero,
/// masses nonzero, lists parallel. The empty measure is the zero measure.
struct AtomicMeasure {
    std::vector<ComplexValue> atoms;
    std::vector<ComplexValue> masses;

    bool all_exact() const;
};

/// Indexing conventions for forward moments: powers start at the exponent
/// matching the rank notion they feed.
enum class MomentConvention {
    kMomentRank,   // window indexed from 0, c_n = sum_i mass_i atom_i^{n+1}
    kUnitaryRank,  // window indexed from 1, c_n = sum_i mass_i atom_i^n
};

/// Exact forward moments — the testing oracle.
/// @throws DegenerateInput when count = 0, any atom/mass lacks an exact
///         literal, atoms repeat or vanish, or a mass vanishes
SequenceWindow moments(const AtomicMeasure& mu, std::size_t count, MomentConvention convention);

/// Inverse problem result: the certificate always, the measure only when the
/// rank certified. Dispatches on the window origin — index 0 runs the moment
/// route, index 1 the power-sum route.
struct MeasureRecovery {
    RankCertificate certificate;
    std::optional<AtomicMeasure> measure;
};

/// @throws IndexConventionError when the window starts anywhere but 0 or 1
MeasureRecovery recover_measure(const SequenceWindow& seq, double tol = kResidualTol);

/// Factorization H = V^T D V of the leading Hankel window, where V has
/// (i,j) entry atom_i^j (an r-by-window matrix, powers from 0) and
/// D = diag(mass_i * atom_i). Factors are present only when the moment rank
/// certified; `defect` is the max-entry error of the reconstruction on the
/// numeric path (exactly zero on the exact path).
struct VandermondeFactor {
    RankCertificate certificate;
    bool exact = false;
    std::optional<ExactMatrix> v;
    std::optional<ExactMatrix> d;
    std::vector<std::vector<std::complex<double>>> v_numeric;
    std::vector<std::complex<double>> d_numeric;  // diagonal entries
    double defect = 0.0;
};

/// @throws DegenerateInput when window < certified rank
/// @throws CrossCheckDefect when the reconstruction fails its own gate
VandermondeFactor vandermonde_factor(const SequenceWindow& seq, std::size_t window,
                                     double tol = kResidualTol);

/// Gramian factorization H' = V^T V of the augmented window: the power-sum
/// window prepended with c'_0 = r and re-indexed from 0, V the multiset
/// Vandermonde of the atoms (rows repeated per multiplicity, powers from 0,
/// floor(N/2)+1 columns). `gramian` is false — with the obstruction named —
/// when the unitary rank did not certify, the sequence is not real, or the
/// augmented window is not positive semidefinite.
struct GramianFactor {
    RankCertificate certificate;
    bool gramian = false;
    std::string obstruction;
    bool exact = false;
    std::optional<ExactMatrix> v;
    std::vector<std::vector<std::complex<double>>> v_numeric;
    std::size_t window = 0;  // columns of V, equivalently the window size
    double defect = 0.0;
};

GramianFactor gramian_factor(const SequenceWindow& seq, double tol = kResidualTol);

/// The binary form sum_j C(2r',j) c_{j+t} x^{2r'-j} y^j attached to a window
/// shift, plus (after verification) its decomposition into powers of linear
/// forms lambda_j (beta_j/alpha_j)^t (alpha_j x + beta_j y)^{2r'} under the
/// alpha_j = 1 normalization.
struct WaringForm {
    std::size_t r_prime = 0;
    long t = 0;
    std::vector<GaussianRational> coeff;  // coeff[j] multiplies x^{2r'-j} y^j

    struct Term {
        ComplexValue lambda;
        ComplexValue alpha;
        ComplexValue beta;
    };
    std::vector<Term> decomposition;  // filled by waring_verify on success
};

/// @throws PrefixTooShort / DegenerateInput when the window misses c_t..c_{t+2r'}
WaringForm waring_build(const SequenceWindow& seq, std::size_t r_prime, long t);

/// True iff the measure's atoms admit weights reproducing every coefficient
/// of the form: the weights are solved from the leading square subsystem and
/// the remaining coefficients decide. On success the decomposition triples
/// are stored on the form; on failure they are cleared.
/// @throws DegenerateInput when the measure has more atoms than the form has
///         coefficients
bool waring_verify(WaringForm& form, const AtomicMeasure& mu, double tol = kResidualTol);

/// Ordinary generating function of the window read as a power series,
/// reconstructed as numerator/denominator with denominator(0) = 1. Poles are
/// the reciprocals of the nonzero characteristic roots, with multiplicity.
/// `proper` is false exactly when the series carries a polynomial part
/// (a transient), which is also the only way gcd bookkeeping can see the
/// window as more than its pole data.
struct RationalGenFun {
    ExactPoly numerator;
    ExactPoly denominator;
    std::vector<LabeledRoot> pole_list;  // sorted by (magnitude, phase)
    bool proper = false;
    bool poles_simple = false;
};

/// @throws NoGeneratorWithinPrefix when no recurrence order fits the prefix
/// @throws CrossCheckDefect when the reconstructed series disagrees with the
///         window beyond the numerator degree
RationalGenFun genfun(const SequenceWindow& seq);

}  // namespace seqrank
