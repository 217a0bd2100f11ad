#include "seqrank/recurrence.hpp"

#include "seqrank/matrix.hpp"

namespace seqrank {

RecurrenceSearch minimal_recurrence(const SequenceWindow& seq) {
    std::size_t n = seq.size();
    if (n < 3) throw DegenerateInput("minimal recurrence needs at least 3 terms");
    if (seq.all_zero()) return {RecurrenceSearch::Outcome::kZeroSequence, std::nullopt};

    SequenceWindow base = seq.reindexed(0);
    std::size_t cap = (n - 1) / 2;
    for (std::size_t r = 1; r <= cap; ++r) {
        ExactMatrix window = hankel_window(base, r - 1, 0);
        if (exact_det(window).is_zero()) continue;
        std::vector<GaussianRational> rhs(r);
        for (std::size_t i = 0; i < r; ++i) rhs[i] = -base.nth(r + i);
        std::vector<GaussianRational> a = solve(window, rhs);
        a.push_back(1);
        Recurrence rec(std::move(a));
        if (verify_recurrence(seq, rec) == n - r)
            return {RecurrenceSearch::Outcome::kFound, std::move(rec)};
    }
    return {RecurrenceSearch::Outcome::kNoneFound, std::nullopt};
}

std::size_t verify_recurrence(const SequenceWindow& seq, const Recurrence& rec) {
    std::size_t n = seq.size();
    std::size_t r = rec.order();
    if (r >= n) return 0;
    const auto& a = rec.coeffs();
    std::size_t shifts = 0;
    for (std::size_t t = 0; t + r < n; ++t) {
        GaussianRational acc;
        for (std::size_t i = 0; i <= r; ++i) acc += a[i] * seq.nth(t + i);
        if (!acc.is_zero()) break;
        ++shifts;
    }
    return shifts;
}

ExactPoly ideal_generator(const SequenceWindow& seq) {
    RecurrenceSearch found = minimal_recurrence(seq);
    switch (found.outcome) {
        case RecurrenceSearch::Outcome::kZeroSequence:
            return {};
        case RecurrenceSearch::Outcome::kNoneFound:
            throw NoGeneratorWithinPrefix();
        case RecurrenceSearch::Outcome::kFound:
            break;
    }
    return found.recurrence->char_poly();
}

bool is_radical(const SequenceWindow& seq) {
    ExactPoly gen = ideal_generator(seq);
    if (gen.is_zero()) return true;  // whole-ring ideal of the zero sequence
    return is_squarefree(gen);
}

std::size_t NewtonPoly::candidate_rank() const {
    for (std::size_t k = e_.size(); k-- > 1;)
        if (!e_[k].is_zero()) return k;
    return 0;
}

ExactPoly NewtonPoly::char_poly(std::size_t r) const {
    if (r >= e_.size()) throw DegenerateInput("newton list shorter than the requested degree");
    std::vector<GaussianRational> c(r + 1);
    for (std::size_t k = 0; k <= r; ++k) c[r - k] = (k % 2 == 0) ? e_[k] : -e_[k];
    return ExactPoly(std::move(c));
}

NewtonPoly power_sums_to_newton(const SequenceWindow& seq) {
    if (seq.start_index() != 1)
        throw IndexConventionError("power sums must be indexed from 1");
    std::size_t n = seq.size();
    std::vector<GaussianRational> e(n + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        GaussianRational acc;
        for (std::size_t i = 1; i <= k; ++i) {
            GaussianRational term = e[k - i] * seq.term(static_cast<long>(i));
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e[k] = acc / GaussianRational(static_cast<long>(k));
    }
    return {std::move(e), n};
}

bool newton_tail_check(const NewtonPoly& np, const SequenceWindow& seq, std::size_t r) {
    if (seq.start_index() != 1)
        throw IndexConventionError("power sums must be indexed from 1");
    const auto& e = np.elementary();
    if (r == 0 || r >= e.size() || e[r].is_zero())
        throw DegenerateInput("tail check needs a nonzero leading elementary function");
    for (long k = static_cast<long>(r) + 1; k <= seq.back_index(); ++k) {
        GaussianRational acc;
        for (std::size_t i = 1; i <= r; ++i) {
            GaussianRational term = e[i] * seq.term(k - static_cast<long>(i));
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        if (acc != seq.term(k)) return false;
    }
    return true;
}

}  // namespace seqrank
