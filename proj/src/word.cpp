#include "rep/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace rep {

namespace {

void check_alphabet_size(int k) {
    if (k < 1 || k > kMaxAlphabetSize) {
        throw std::invalid_argument("alphabet size must be in [1, " +
                                    std::to_string(kMaxAlphabetSize) + "], got " +
                                    std::to_string(k));
    }
}

}  // namespace

Word::Word(std::vector<Letter> ls, int k) : letters(std::move(ls)), alphabet_size(k) {
    check_alphabet_size(k);
    for (Letter a : letters) {
        if (a >= alphabet_size) {
            throw std::invalid_argument("letter " + std::to_string(int(a)) +
                                        " outside alphabet of size " + std::to_string(k));
        }
    }
}

char to_digit(Letter a) {
    return a < 10 ? char('0' + a) : char('a' + (a - 10));
}

std::optional<Letter> from_digit(char c) {
    if (c >= '0' && c <= '9') return Letter(c - '0');
    if (c >= 'a' && c <= 'z') return Letter(c - 'a' + 10);
    if (c >= 'A' && c <= 'Z') return Letter(c - 'A' + 10);
    return std::nullopt;
}

std::string to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w.letters) out.push_back(to_digit(a));
    return out;
}

Word parse_word(std::string_view text, int alphabet_size) {
    check_alphabet_size(alphabet_size);
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        const auto a = from_digit(c);
        if (!a) {
            throw std::invalid_argument(std::string("invalid letter character '") + c + "'");
        }
        letters.push_back(*a);
    }
    return Word(std::move(letters), alphabet_size);
}

Word rename(const Word& w, std::span<const Letter> perm) {
    if (perm.size() != std::size_t(w.alphabet_size)) {
        throw std::invalid_argument("permutation size does not match alphabet size");
    }
    Word out = w;
    for (Letter& a : out.letters) a = perm[a];
    return Word(std::move(out.letters), w.alphabet_size);
}

bool lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                        b.letters.begin(), b.letters.end());
}

}  // namespace rep
