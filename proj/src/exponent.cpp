#include "rep/exponent.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace rep {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
    if (text.empty() || text.size() > 15) {
        throw std::invalid_argument("bad " + std::string(what) + " in exponent: '" +
                                    std::string(text) + "'");
    }
    std::int64_t value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("bad " + std::string(what) + " in exponent: '" +
                                        std::string(text) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

Exponent Exponent::make(std::int64_t num, std::int64_t den) {
    if (num < 1 || den < 1) {
        throw std::invalid_argument("exponent must have positive numerator and denominator");
    }
    const std::int64_t g = std::gcd(num, den);
    return Exponent{num / g, den / g};
}

Exponent parse_exponent(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Exponent::make(parse_int(text.substr(0, slash), "numerator"),
                              parse_int(text.substr(slash + 1), "denominator"));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::int64_t num = parse_int(whole, "integer part") * den +
                                 (frac.empty() ? 0 : parse_int(frac, "fraction part"));
        return Exponent::make(num, den);
    }
    return Exponent::make(parse_int(text, "numerator"), 1);
}

std::string to_string(const Exponent& e) {
    return std::to_string(e.num) + "/" + std::to_string(e.den);
}

}  // namespace rep
