#pragma once

/**
 * @file sequence.hpp
 * @brief A finite prefix of a complex-rational sequence with its indexing origin.
 *
 * The same terms mean different things depending on where counting starts:
 * moment sequences are indexed from 0, power-sum (unitary) sequences from 1.
 * A SequenceWindow carries that origin so every downstream operation can
 * address terms by their true index and reject windows with the wrong
 * convention instead of silently shifting.
 */

#include <cstddef>
#include <vector>

#include "seqrank/errors.hpp"
#include "seqrank/rational.hpp"

namespace seqrank {

class SequenceWindow {
public:
    /// @throws DegenerateInput when terms is empty or start_index < 0
    SequenceWindow(long start_index, std::vector<GaussianRational> terms)
        : start_(start_index), terms_(std::move(terms)) {
        if (terms_.empty()) throw DegenerateInput("sequence window with no terms");
        if (start_ < 0) throw DegenerateInput("negative start index");
    }

    long start_index() const { return start_; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<GaussianRational>& terms() const { return terms_; }

    /// First and last true indices covered by the window.
    long front_index() const { return start_; }
    long back_index() const { return start_ + static_cast<long>(terms_.size()) - 1; }

    bool has(long n) const { return n >= front_index() && n <= back_index(); }

    /// Term c_n addressed by its true index.
    /// @throws PrefixTooShort when n lies beyond the window
    /// @throws DegenerateInput when n lies before the window's origin
    const GaussianRational& term(long n) const {
        if (n < start_) throw DegenerateInput("index before the window origin");
        if (n > back_index())
            throw PrefixTooShort(static_cast<std::size_t>(n - start_ + 1), terms_.size());
        return terms_[static_cast<std::size_t>(n - start_)];
    }

    /// k-th stored term, ignoring the origin.
    const GaussianRational& nth(std::size_t k) const { return terms_.at(k); }

    bool all_zero() const {
        for (const auto& t : terms_)
            if (!t.is_zero()) return false;
        return true;
    }

    /// Same terms under a different indexing origin. This is how the shift
    /// T[C] enters: a window (c_1,…,c_N) indexed from 1, reindexed to 0,
    /// reads as the sequence n ↦ c_{n+1}.
    SequenceWindow reindexed(long new_start) const { return {new_start, terms_}; }

private:
    long start_;
    std::vector<GaussianRational> terms_;
};

}  // namespace seqrank
