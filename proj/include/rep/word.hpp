#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rep {

using Letter = std::uint8_t;

// Letters are rendered as base-36 digits; alphabets larger than this are
// rejected everywhere.
inline constexpr int kMaxAlphabetSize = 16;

// Finite word over the alphabet {0, ..., alphabet_size-1}.
struct Word {
    std::vector<Letter> letters;
    int alphabet_size = 2;

    Word() = default;
    Word(std::vector<Letter> ls, int k);  // validates every letter < k

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Letter operator[](std::size_t i) const { return letters[i]; }

    friend bool operator==(const Word&, const Word&) = default;
};

char to_digit(Letter a);
std::optional<Letter> from_digit(char c);

std::string to_string(const Word& w);

// One base-36 digit per letter. Throws std::invalid_argument on characters
// that are not digits or letters >= alphabet_size.
Word parse_word(std::string_view text, int alphabet_size);

// Applies a letter permutation; perm must have alphabet_size entries.
Word rename(const Word& w, std::span<const Letter> perm);

// Lexicographic order by letters, shorter prefixes first.
bool lex_less(const Word& a, const Word& b);

}  // namespace rep
