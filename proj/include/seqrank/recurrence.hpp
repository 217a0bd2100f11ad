#pragma once

/**
 * @file recurrence.hpp
 * @brief Minimal linear recurrences, the recurrence-ideal generator, and the
 *        Newton's-identities bridge between power sums and elementary
 *        symmetric functions.
 *
 * Everything is prefix-certified: a "minimal" recurrence is the smallest
 * order that survives every shift testable inside the window, and callers
 * get the verified shift count so they can judge how much evidence that is.
 * The candidate order is capped at floor((N-1)/2), which guarantees each
 * accepted recurrence is over-determined by at least one shift beyond those
 * used to solve for it.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "seqrank/poly.hpp"
#include "seqrank/sequence.hpp"

namespace seqrank {

/// A monic linear recurrence sum a_i c_{i+t} = 0 of order r, a_r = 1.
class Recurrence {
public:
    /// @throws DegenerateInput unless coeffs has length >= 2 and ends in 1
    explicit Recurrence(std::vector<GaussianRational> coeffs) : a_(std::move(coeffs)) {
        if (a_.size() < 2) throw DegenerateInput("recurrence of order zero");
        if (a_.back() != GaussianRational(1)) throw DegenerateInput("recurrence is not monic");
    }

    std::size_t order() const { return a_.size() - 1; }
    const std::vector<GaussianRational>& coeffs() const { return a_; }

    /// The characteristic polynomial sum a_j x^j (monic, degree = order).
    ExactPoly char_poly() const { return ExactPoly(a_); }

private:
    std::vector<GaussianRational> a_;
};

/// Result of the minimal-recurrence search. The all-zero sequence is
/// rankless by definition, so it gets its own outcome instead of an order.
struct RecurrenceSearch {
    enum class Outcome { kFound, kNoneFound, kZeroSequence };
    Outcome outcome;
    std::optional<Recurrence> recurrence;  // engaged exactly when kFound
};

/// Smallest-order monic recurrence that holds on every testable shift,
/// located by the determinant-then-solve loop: for each candidate order r,
/// skip when the r-by-r leading Hankel window is singular, otherwise solve
/// for the coefficients and verify them across the whole prefix. Orders run
/// up to floor((N-1)/2).
/// @throws DegenerateInput when the window has fewer than 3 terms
RecurrenceSearch minimal_recurrence(const SequenceWindow& seq);

/// Number of consecutive shifts t = 0, 1, ... on which the recurrence holds
/// exactly; N - r means it holds everywhere testable, 0 means the very first
/// shift fails (or nothing is testable).
std::size_t verify_recurrence(const SequenceWindow& seq, const Recurrence& rec);

/// Characteristic polynomial of the minimal recurrence — the generator of
/// the recurrence ideal as far as the prefix certifies it. The all-zero
/// sequence returns the zero polynomial as its distinguished marker.
/// @throws NoGeneratorWithinPrefix when no recurrence fits the prefix
ExactPoly ideal_generator(const SequenceWindow& seq);

/// True iff the recurrence ideal is radical, i.e. the generator is
/// squarefree. The zero sequence's ideal is the whole ring, trivially
/// radical.
/// @throws NoGeneratorWithinPrefix when no recurrence fits the prefix
bool is_radical(const SequenceWindow& seq);

/// Elementary symmetric functions recovered from power sums. elementary()
/// holds e_0..e_K exactly as produced by the Newton recursion
/// k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
class NewtonPoly {
public:
    NewtonPoly(std::vector<GaussianRational> elementary, std::size_t source_length)
        : e_(std::move(elementary)), n_(source_length) {
        if (e_.empty() || e_.front() != GaussianRational(1))
            throw DegenerateInput("newton list must start with e_0 = 1");
    }

    const std::vector<GaussianRational>& elementary() const { return e_; }
    std::size_t source_length() const { return n_; }

    /// Largest k with e_k != 0; zero when only e_0 survives.
    std::size_t candidate_rank() const;

    /// The monic polynomial sum_k (-1)^k e_k x^{r-k} of degree r whose root
    /// multiset has these elementary symmetric functions.
    /// @throws DegenerateInput when r exceeds the stored list
    ExactPoly char_poly(std::size_t r) const;

private:
    std::vector<GaussianRational> e_;
    std::size_t n_;
};

/// Run the Newton recursion over a window of power sums p_1..p_N.
/// @throws IndexConventionError unless the window is indexed from 1
NewtonPoly power_sums_to_newton(const SequenceWindow& seq);

/// True iff every power sum with index > r satisfies the degree-r tail
/// identity p_k = sum_{i=1..r} (-1)^{i-1} e_i p_{k-i} exactly (vacuously
/// true when the window ends at index r).
/// @throws IndexConventionError unless the window is indexed from 1
/// @throws DegenerateInput when e_r is missing or zero
bool newton_tail_check(const NewtonPoly& np, const SequenceWindow& seq, std::size_t r);

}  // namespace seqrank
