#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rep/freeness.hpp"
#include "rep/word.hpp"

namespace rep {

// Grows a word one letter at a time and reports, after each push, whether
// some factor ending at the new last position is forbidden. push/pop follow
// a stack discipline and pop restores the exact previous state, which makes
// the checker the workhorse of backtracking searches.
//
// State: for each period p >= min_period, the length of the longest suffix
// of the current word that admits period p. Pushing letter a extends that
// length by one when a matches the letter p positions back, otherwise the
// longest suffix with period p is the vacuous one of length p. A violation
// is a suffix length that reaches the spec's threshold for its period.
class IncrementalChecker {
  public:
    IncrementalChecker(int alphabet_size, FreenessSpec spec);

    // Restricts checking (and state) to periods < period_limit.
    IncrementalChecker(int alphabet_size, FreenessSpec spec, std::int32_t period_limit);

    // Appends a letter. Returns the forbidden factor with the smallest
    // period ending at the new last position, if any; agrees with scan()
    // on whether such a factor exists.
    std::optional<Witness> push(Letter a);

    // Undoes the matching push, per-period lengths included.
    void pop();

    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    int alphabet_size() const { return alphabet_size_; }
    const FreenessSpec& spec() const { return spec_; }
    std::span<const Letter> letters() const { return word_; }
    Word word() const { return Word(word_, alphabet_size_); }

    // Longest suffix length admitting period p, at index p. Entries below
    // min_period (or beyond the period limit) are not maintained.
    std::span<const std::int32_t> suffix_period_lengths() const { return longest_; }

  private:
    FreenessSpec spec_;
    int alphabet_size_;
    std::int32_t period_limit_;

    std::vector<Letter> word_;
    std::vector<std::int32_t> longest_;   // by period
    std::vector<std::int32_t> min_len_;   // spec.min_violation_length(p), cached

    struct Saved {
        std::int32_t period;
        std::int32_t length;
    };
    std::vector<Saved> trail_;            // undo log, one frame per push
    std::vector<std::uint32_t> frame_;    // trail_ size at entry of each push
};

}  // namespace rep
