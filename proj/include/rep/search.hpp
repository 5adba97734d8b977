#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "rep/freeness.hpp"
#include "rep/word.hpp"

namespace rep {

// Caps on a traversal. Nodes are counted in the reduced (0-rooted) tree,
// internal and leaf alike, so reported node counts are comparable across
// runs. Exceeding a budget is always inconclusive: it never proves that a
// tree is infinite.
struct Budget {
    static constexpr std::uint64_t kUnlimitedNodes = std::numeric_limits<std::uint64_t>::max();
    static constexpr std::uint32_t kUnlimitedDepth = std::numeric_limits<std::uint32_t>::max();

    std::uint64_t max_nodes = kUnlimitedNodes;
    std::uint32_t max_depth = kUnlimitedDepth;

    static Budget unlimited() { return {}; }
    static Budget nodes(std::uint64_t n) { return Budget{n, kUnlimitedDepth}; }
};

// Statistics of a finite avoidance tree (full tree, not the reduced one):
// the root is the empty word, a node is internal iff it is free, and each
// internal node has one child per letter.
struct TreeStats {
    int k = 0;
    FreenessSpec spec;
    std::int64_t leaves = 0;    // L = 1 + (k-1) * internal
    std::int64_t internal = 0;  // I, number of free words
    int height = 0;             // h, depth of the deepest leaf
    int max_len = 0;            // M = h - 1, length of the longest free word
    std::int64_t max_count = 0; // I', internal nodes at depth h-1
    Word lex_least;             // least free word of length max_len
};

struct SearchBudgetExceeded {
    std::uint64_t nodes_visited = 0;
    Word deepest_free_word;
};

using SearchOutcome = std::variant<TreeStats, SearchBudgetExceeded>;

// Periodic resumable snapshots: "RTCKPT 1" header line followed by a JSON
// object holding the DFS path and the partial counters.
struct CheckpointOptions {
    std::string file;
    std::uint64_t every_nodes = 5'000'000;
};

struct ExploreOptions {
    // Number of worker threads; with more than one, the subtrees hanging off
    // a fixed split depth are distributed over the workers. Statistics are
    // identical for every shard count.
    int shards = 1;
    std::optional<CheckpointOptions> checkpoint;  // requires shards == 1
    std::optional<std::string> resume_file;       // requires shards == 1
};

struct ExploreReport {
    SearchOutcome outcome;
    std::uint64_t nodes_visited = 0;

    const TreeStats* finite() const { return std::get_if<TreeStats>(&outcome); }
    const SearchBudgetExceeded* exceeded() const {
        return std::get_if<SearchBudgetExceeded>(&outcome);
    }
};

// Exhaustive traversal of the avoidance tree. Only the subtree under the
// single letter 0 is walked; because the forbidden factors are closed under
// renaming, the full-tree statistics follow as I = k*I0 + 1, I' = k*I0',
// L = 1 + (k-1)*I, and the lexicographically least maximal word starts
// with 0. Requires k >= 2.
ExploreReport explore(int k, const FreenessSpec& spec, Budget budget,
                      const ExploreOptions& options = {});

// Self-audit of the TreeStats invariants, including that lex_least has
// length max_len and is free.
bool stats_check(const TreeStats& stats);

struct GrowFound {
    Word word;
};
struct GrowExhausted {
    int max_len_reached = 0;
};
struct GrowBudgetExceeded {
    std::uint64_t nodes_visited = 0;
};

using GrowResult = std::variant<GrowFound, GrowExhausted, GrowBudgetExceeded>;

struct GrowReport {
    GrowResult result;
    std::uint64_t nodes_visited = 0;

    const GrowFound* found() const { return std::get_if<GrowFound>(&result); }
    const GrowExhausted* exhausted() const { return std::get_if<GrowExhausted>(&result); }
    const GrowBudgetExceeded* exceeded() const {
        return std::get_if<GrowBudgetExceeded>(&result);
    }
};

// Depth-first search for a free word of the target length, visiting
// children in letter order. The result is the lexicographically least free
// word of that length starting with letter 0. Requires k >= 2 and
// target_len >= 1.
GrowReport grow(int k, const FreenessSpec& spec, int target_len, Budget budget);

// Machine-readable rendering of an explore run:
// {"k":int,"alpha":"num/den","mode":"geq"|"gt","min_period":int,
//  "leaves":int,"internal":int,"height":int,"max_len":int,"max_count":int,
//  "lex_least":string,"nodes_visited":int,"finite":bool}
std::string to_json(int k, const FreenessSpec& spec, const ExploreReport& report);

}  // namespace rep
