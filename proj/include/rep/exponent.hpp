#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rep {

// Exact rational exponent. Always in lowest terms, num >= 1, den >= 1.
// All threshold arithmetic in this library is integer-only; Exponent is
// never converted to floating point.
struct Exponent {
    std::int64_t num = 1;
    std::int64_t den = 1;

    // Reduces num/den. Throws std::invalid_argument unless num, den >= 1.
    static Exponent make(std::int64_t num, std::int64_t den);

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

inline std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    return a.num * b.den <=> b.num * a.den;
}

// "7/3", "2" (meaning 2/1) or a decimal like "1.2608" (converted exactly,
// here to 788/625).
Exponent parse_exponent(std::string_view text);

// Canonical rendering, always "num/den".
std::string to_string(const Exponent& e);

}  // namespace rep
