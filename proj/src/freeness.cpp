#include "rep/freeness.hpp"

#include <stdexcept>

namespace rep {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

FreenessSpec FreenessSpec::make(Exponent alpha, int min_period, Mode mode) {
    if (alpha.num <= alpha.den) {
        throw std::invalid_argument("freeness threshold must be > 1, got " + to_string(alpha));
    }
    if (min_period < 1) {
        throw std::invalid_argument("min_period must be >= 1");
    }
    return FreenessSpec{alpha, min_period, mode};
}

FreenessSpec parse_spec(std::string_view text) {
    const auto at = text.find('@');
    if (at == std::string_view::npos) {
        throw std::invalid_argument("spec must look like \"NUM/DEN[+] @ L\", got '" +
                                    std::string(text) + "'");
    }
    std::string_view head = strip(text.substr(0, at));
    const std::string_view tail = strip(text.substr(at + 1));

    Mode mode = Mode::geq;
    if (!head.empty() && head.back() == '+') {
        mode = Mode::gt;
        head = strip(head.substr(0, head.size() - 1));
    }
    const Exponent alpha = parse_exponent(head);

    if (tail.empty() || tail.size() > 6) {
        throw std::invalid_argument("bad min period in spec: '" + std::string(tail) + "'");
    }
    int min_period = 0;
    for (char c : tail) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad min period in spec: '" + std::string(tail) + "'");
        }
        min_period = min_period * 10 + (c - '0');
    }
    return FreenessSpec::make(alpha, min_period, mode);
}

std::string to_string(const FreenessSpec& spec) {
    return to_string(spec.alpha) + (spec.mode == Mode::gt ? "+" : "") + " @ " +
           std::to_string(spec.min_period);
}

std::string to_string(const Witness& w) {
    return "end=" + std::to_string(w.end) + " period=" + std::to_string(w.period) +
           " length=" + std::to_string(w.length) + " exponent=" + to_string(w.exponent());
}

}  // namespace rep
