#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rep/exponent.hpp"

namespace rep {

// Which factor exponents a spec forbids relative to its threshold alpha.
enum class Mode {
    geq,  // exponent >= alpha is forbidden
    gt,   // exponent >  alpha is forbidden
};

// Describes the forbidden repetitions: every factor that has some period
// p >= min_period whose exponent (factor length / p) meets the threshold.
struct FreenessSpec {
    Exponent alpha;       // > 1
    int min_period = 1;   // >= 1
    Mode mode = Mode::geq;

    // Validates alpha > 1 and min_period >= 1.
    static FreenessSpec make(Exponent alpha, int min_period, Mode mode);

    bool violates(std::int64_t length, std::int64_t period) const {
        const std::int64_t lhs = length * alpha.den;
        const std::int64_t rhs = alpha.num * period;
        return mode == Mode::geq ? lhs >= rhs : lhs > rhs;
    }

    // Smallest forbidden factor length for the given period. Always > period
    // since alpha > 1.
    std::int64_t min_violation_length(std::int64_t period) const {
        const std::int64_t t = alpha.num * period;
        return mode == Mode::geq ? (t + alpha.den - 1) / alpha.den : t / alpha.den + 1;
    }
};

// Text form "NUM/DEN[+] @ L"; the trailing '+' selects Mode::gt. The
// exponent part also accepts the plain-integer and decimal forms of
// parse_exponent, so "2 @ 1" and "1.2608 @ 8" are valid.
FreenessSpec parse_spec(std::string_view text);
std::string to_string(const FreenessSpec& spec);

// A located forbidden factor: it ends at index `end`, spans `length`
// letters and admits period `period`.
struct Witness {
    std::int64_t end = 0;
    std::int64_t period = 0;
    std::int64_t length = 0;

    Exponent exponent() const { return Exponent::make(length, period); }

    friend bool operator==(const Witness&, const Witness&) = default;
};

std::string to_string(const Witness& w);

}  // namespace rep
