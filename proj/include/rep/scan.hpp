#pragma once

#include <optional>

#include "rep/freeness.hpp"
#include "rep/word.hpp"

namespace rep {

// True iff w[i] == w[i+p] for all 0 <= i < |w|-p. Vacuously true for
// p >= |w|. p must be >= 1.
bool is_period(const Word& w, std::int64_t p);

// |w| / p in lowest terms. Throws std::invalid_argument if p is not a
// period of w or w is empty.
Exponent exponent_of(const Word& w, std::int64_t p);

// Naive reference check: examines every factor and every period directly
// (deliberately simple, up to cubic time). Returns the witness with the
// smallest end index, ties broken by the smallest period; its length is
// that of the longest factor ending there with that period. Returns
// nullopt iff w is free.
std::optional<Witness> scan(const Word& w, const FreenessSpec& spec);

// Re-checks a witness against its word using only is_period and integer
// comparisons.
bool witness_valid(const Word& w, const FreenessSpec& spec, const Witness& wit);

}  // namespace rep
