#pragma once

/**
 * @file ranks.hpp
 * @brief The three rank notions — recurrence rank, moment rank, unitary rank —
 *        with certificates, the Hankel nullity profile, and the
 *        many-characterizations cross-check.
 *
 * A certificate never claims more than the window supports: every positive
 * result records how many shifts of the defining identity were actually
 * verified, and the numeric/exact duality is explicit — `exact` is true only
 * when atoms and masses carry rational literals proved by exact arithmetic.
 *
 * The unitary rank runs two independent routes and insists they agree: the
 * exact Newton-identities route is definitive, and the moment-rank route on
 * the shifted sequence re-derives the same multiset with positive integer
 * masses. A disagreement between routes that should both succeed is raised as
 * CrossCheckDefect, never silently reconciled.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "seqrank/matrix.hpp"
#include "seqrank/poly.hpp"
#include "seqrank/roots.hpp"
#include "seqrank/sequence.hpp"

namespace seqrank {

/// Default relative tolerance for numeric reconstruction residuals
/// (overridable per call; the CLI wires SEQRANK_TOL into it).
inline constexpr double kResidualTol = 1e-9;

/// Numeric masses this close to a positive integer are handed to the exact
/// route for confirmation rather than accepted on float evidence.
inline constexpr double kIntegerMassTol = 1e-6;

enum class RankKind { kRecurrence, kMoment, kUnitary };
enum class RankStatus {
    kCertified,
    kErrorNotSimple,
    kNoFiniteRankWithinPrefix,
    kNonIntegerMasses,
};

const char* to_string(RankKind kind);
const char* to_string(RankStatus status);

struct RankCertificate {
    RankKind kind;
    RankStatus status;
    std::size_t rank = 0;  // meaningful when certified; 0 only for the zero sequence
    ExactPoly char_poly;   // zero polynomial for the zero sequence
    std::vector<ComplexValue> atoms;   // distinct, sorted by (magnitude, phase)
    std::vector<ComplexValue> masses;  // parallel to atoms
    std::size_t verified_shifts = 0;
    bool zero_sequence = false;
    bool exact = false;     // atoms and masses all carry exact literals
    double residual = 0.0;  // max relative reconstruction error on the numeric path
};

/// Vandermonde-style matrices over a fixed atom list. The "primed" layout
/// starts powers at 1 (entry beta_i^{j+1}), the plain layout at 0
/// (entry beta_i^j); rows are atoms, columns are powers.
class ModifiedVandermonde {
public:
    explicit ModifiedVandermonde(std::vector<ComplexValue> betas) : b_(std::move(betas)) {}

    const std::vector<ComplexValue>& betas() const { return b_; }
    bool all_exact() const;

    /// @throws DegenerateInput unless every atom carries an exact literal
    ExactMatrix primed_exact(std::size_t cols) const;
    ExactMatrix plain_exact(std::size_t cols) const;

    std::vector<std::vector<std::complex<double>>> primed_numeric(std::size_t cols) const;
    std::vector<std::vector<std::complex<double>>> plain_numeric(std::size_t cols) const;

private:
    std::vector<ComplexValue> b_;
};

/// Recurrence rank: the order of the minimal prefix-certified recurrence.
/// Repeated characteristic roots are fine here; atoms/masses stay empty.
/// @throws DegenerateInput when the window has fewer than 3 terms
RankCertificate rrank(const SequenceWindow& seq);

/// Moment rank: smallest r with c_n = sum_i alpha_i beta_i^{n+1} over
/// distinct nonzero atoms and nonzero masses. Exact when the characteristic
/// roots reconstruct rationally (then every term is re-verified by exact
/// arithmetic), numeric with a residual gate otherwise. A repeated root is
/// ErrorNotSimple; a vanishing characteristic root means the window has no
/// such representation and reports NoFiniteRankWithinPrefix.
/// @throws IndexConventionError unless the window is indexed from 0
/// @throws DegenerateInput when the window has fewer than 3 terms
/// @throws RootFindingFailed / CrossCheckDefect on numeric breakdown
RankCertificate mrank(const SequenceWindow& seq, double tol = kResidualTol);

/// Unitary rank: cardinality of the nonzero-atom multiset whose power sums
/// the window lists from index 1. The Newton route is exact and primary; the
/// moment-rank route on the 0-reindexed window must reproduce the multiset
/// with positive integer masses whenever it certifies at all.
/// @throws IndexConventionError unless the window is indexed from 1
/// @throws DegenerateInput when the window has fewer than 2 terms
/// @throws CrossCheckDefect when the two routes both certify and disagree
RankCertificate urank(const SequenceWindow& seq, double tol = kResidualTol);

/// Exact nullities of the square windows H_0,0 .. H_{m_max},0.
/// @throws PrefixTooShort when the window cannot fill H_{m_max},0
std::vector<std::size_t> nullity_profile(const SequenceWindow& seq, std::size_t m_max);

/// One entry per independently computable characterization of moment rank.
struct TfaeReport {
    enum class Verdict { kRank, kNotSimple, kNoFiniteRank };
    struct Entry {
        std::string condition;
        Verdict verdict;
        std::size_t rank = 0;  // candidate order/degree when known
        bool has_rank = false;
        std::string detail;
    };
    std::vector<Entry> entries;
    bool zero_sequence = false;
    bool agree = false;
    std::string disagreement;  // first divergence, empty when all agree
};

const char* to_string(TfaeReport::Verdict verdict);

/// Evaluate five independent characterizations — minimal-recurrence
/// simplicity, the Hankel determinant/kernel profile, generating-function
/// pole structure, recurrence-ideal radicality, and the moment-rank
/// algorithm itself — and report agreement or the first divergence.
/// Conditions are evaluated on the window reindexed to origin 0.
TfaeReport tfae_crosscheck(const SequenceWindow& seq, double tol = kResidualTol);

}  // namespace seqrank
