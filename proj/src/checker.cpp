#include "rep/checker.hpp"

#include <limits>
#include <stdexcept>

namespace rep {

IncrementalChecker::IncrementalChecker(int alphabet_size, FreenessSpec spec)
    : IncrementalChecker(alphabet_size, spec, std::numeric_limits<std::int32_t>::max()) {}

IncrementalChecker::IncrementalChecker(int alphabet_size, FreenessSpec spec,
                                       std::int32_t period_limit)
    : spec_(spec), alphabet_size_(alphabet_size), period_limit_(period_limit) {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabetSize) {
        throw std::invalid_argument("alphabet size must be in [1, " +
                                    std::to_string(kMaxAlphabetSize) + "]");
    }
    if (period_limit_ <= spec_.min_period) {
        throw std::invalid_argument("period limit leaves no period to check");
    }
}

std::optional<Witness> IncrementalChecker::push(Letter a) {
    if (a >= alphabet_size_) {
        throw std::invalid_argument("letter outside alphabet");
    }
    const std::int32_t i = std::int32_t(word_.size());
    word_.push_back(a);
    frame_.push_back(std::uint32_t(trail_.size()));
    longest_.resize(word_.size(), 0);
    while (std::int32_t(min_len_.size()) <= i) {
        const auto p = std::int64_t(min_len_.size());
        const std::int64_t cutoff = p >= spec_.min_period
                                        ? spec_.min_violation_length(p)
                                        : std::numeric_limits<std::int32_t>::max();
        min_len_.push_back(std::int32_t(
            std::min<std::int64_t>(cutoff, std::numeric_limits<std::int32_t>::max())));
    }

    std::optional<Witness> violation;
    const std::int32_t p_max = std::min(i, period_limit_ - 1);
    for (std::int32_t p = spec_.min_period; p <= p_max; ++p) {
        // Before this push the longest suffix with period p had length
        // longest_[p] for p < i, and the vacuous length p for p == i.
        const std::int32_t old = p == i ? p : longest_[p];
        const std::int32_t now = word_[i] == word_[i - p] ? old + 1 : p;
        trail_.push_back(Saved{p, old});
        longest_[p] = now;
        if (now >= min_len_[p] && !violation) {
            violation = Witness{i, p, now};
        }
    }
    return violation;
}

void IncrementalChecker::pop() {
    if (word_.empty()) {
        throw std::logic_error("pop on empty checker");
    }
    const std::uint32_t mark = frame_.back();
    frame_.pop_back();
    for (std::size_t t = trail_.size(); t > mark; --t) {
        const Saved& s = trail_[t - 1];
        longest_[s.period] = s.length;
    }
    trail_.resize(mark);
    word_.pop_back();
    longest_.resize(word_.size());
}

}  // namespace rep
