#include "rep/scan.hpp"

#include <stdexcept>

namespace rep {

bool is_period(const Word& w, std::int64_t p) {
    if (p < 1) {
        throw std::invalid_argument("period must be >= 1");
    }
    const std::int64_t n = std::int64_t(w.size());
    for (std::int64_t i = 0; i + p < n; ++i) {
        if (w.letters[i] != w.letters[i + p]) return false;
    }
    return true;
}

Exponent exponent_of(const Word& w, std::int64_t p) {
    if (w.empty()) {
        throw std::invalid_argument("the empty word has no exponent");
    }
    if (!is_period(w, p)) {
        throw std::invalid_argument(std::to_string(p) + " is not a period of " + to_string(w));
    }
    return Exponent::make(std::int64_t(w.size()), p);
}

std::optional<Witness> scan(const Word& w, const FreenessSpec& spec) {
    const std::int64_t n = std::int64_t(w.size());
    for (std::int64_t end = 0; end < n; ++end) {
        for (std::int64_t p = spec.min_period; p <= end; ++p) {
            // Longest factor ending at `end` with period p: extend leftwards
            // while the period holds. Any shorter factor has a smaller
            // exponent, so checking the longest one suffices.
            std::int64_t start = end - p + 1;
            while (start > 0 && w.letters[start - 1] == w.letters[start - 1 + p]) --start;
            const std::int64_t length = end - start + 1;
            if (spec.violates(length, p)) {
                return Witness{end, p, length};
            }
        }
    }
    return std::nullopt;
}

bool witness_valid(const Word& w, const FreenessSpec& spec, const Witness& wit) {
    const std::int64_t n = std::int64_t(w.size());
    const std::int64_t start = wit.end - wit.length + 1;
    if (wit.period < spec.min_period || wit.length < 1) return false;
    if (start < 0 || wit.end >= n) return false;
    if (!spec.violates(wit.length, wit.period)) return false;
    Word factor(std::vector<Letter>(w.letters.begin() + start,
                                    w.letters.begin() + wit.end + 1),
                w.alphabet_size);
    return is_period(factor, wit.period);
}

}  // namespace rep
