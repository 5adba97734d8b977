#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rep/freeness.hpp"
#include "rep/search.hpp"
#include "rep/word.hpp"

namespace rep {

// Letter-to-word substitution, applied by concatenating images.
struct Morphism {
    int k_src = 0;
    int k_dst = 0;
    std::vector<Word> images;  // indexed by source letter

    // Validates one nonempty image per source letter, letters < k_dst.
    static Morphism make(int k_src, int k_dst, std::vector<Word> images);
};

Word apply(const Morphism& m, const Word& w);

// The common image length, or nullopt when images differ in length.
std::optional<int> uniform_width(const Morphism& m);

struct SyncCounterexample {
    Letter a = 0, b = 0, c = 0;
    int offset = 0;

    friend bool operator==(const SyncCounterexample&, const SyncCounterexample&) = default;
};

struct SyncReport {
    bool synchronizing = false;
    std::vector<SyncCounterexample> counterexamples;
};

// Tries every placement of an image inside every two-letter image: for all
// source letters a, b, c and offsets 0 <= off <= W, if image(c) occurs in
// image(ab) at off, it must be flush left with a == c or flush right with
// b == c. Anything else is recorded as a counterexample. Requires a uniform
// morphism.
SyncReport check_synchronizing(const Morphism& m);

// Built-in uniform width-6 morphism from 4 letters to 3; applied to words
// that avoid exponents > 7/5 it produces words free of period->=2 factors
// of exponent > 3/2. Named h throughout the CLI.
const Morphism& builtin_morphism_h();

// Text format: one "LETTER -> IMAGE" line per source letter, base-36
// digits, covering 0..k_src-1 exactly once. The target alphabet size is
// inferred from the largest image letter.
Morphism parse_morphism(std::istream& in);
Morphism load_morphism(const std::string& path);
std::string to_string(const Morphism& m);

struct ConstructionReport {
    bool success = false;
    bool budget_exceeded = false;
    bool source_exhausted = false;   // search ran out of free source words
    int n = 0;                       // requested source length
    Word source;                     // the free source word used
    std::uint64_t image_length = 0;
    std::optional<Witness> witness;  // forbidden factor in the image, if any
    std::uint64_t nodes_visited = 0;
};

// End-to-end check of the morphism construction: grows a quaternary word
// of length n avoiding exponents > 7/5, maps it through the built-in
// morphism, and feeds the image through an incremental checker for
// "3/2+ @ 2". Succeeds iff no witness appears. n == 0 is vacuous success.
ConstructionReport verify_construction(int n, Budget budget);

struct SmallCaseScan {
    bool complete = false;           // false when the enumeration cap was hit
    int source_length = 0;           // length of the enumerated source words
    std::uint64_t source_words = 0;  // free source words scanned
    std::uint64_t nodes_visited = 0;
    std::vector<std::pair<Word, Witness>> violations;  // expected empty
};

// Exhaustive scan backing the bounded-period case of the construction:
// enumerates every src_spec-free source word of the smallest length whose
// images cover all image factors shorter than 3*max_root/2, then scans each
// image for factors with period in [2, max_root) and exponent > 3/2. The
// cap bounds the enumeration; hitting it makes the result inconclusive
// rather than empty.
SmallCaseScan small_case_scan(const Morphism& m, const FreenessSpec& src_spec, int max_root,
                              std::uint64_t node_cap = 100'000'000);

}  // namespace rep
