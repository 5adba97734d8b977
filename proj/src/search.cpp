#include "rep/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "rep/checker.hpp"
#include "rep/scan.hpp"

namespace rep {

namespace {

constexpr const char* kCheckpointHeader = "RTCKPT 1";

// DFS counters for one traversal scope (a phase or a shard). Merging is
// associative and commutative, so totals do not depend on shard scheduling.
struct Counters {
    std::vector<std::int64_t> internal_at;  // internal nodes by depth, depth >= 1
    int deepest_leaf = 0;
    int best_depth = 0;             // deepest internal node seen so far
    std::vector<Letter> best_word;  // lex-least internal word at best_depth

    void note_internal(std::span<const Letter> path) {
        const int d = int(path.size());
        if (int(internal_at.size()) <= d) internal_at.resize(d + 1, 0);
        ++internal_at[d];
        if (d > best_depth) {
            best_depth = d;
            best_word.assign(path.begin(), path.end());
        }
    }

    void merge(const Counters& other) {
        if (internal_at.size() < other.internal_at.size()) {
            internal_at.resize(other.internal_at.size(), 0);
        }
        for (std::size_t d = 0; d < other.internal_at.size(); ++d) {
            internal_at[d] += other.internal_at[d];
        }
        deepest_leaf = std::max(deepest_leaf, other.deepest_leaf);
        if (other.best_depth > best_depth ||
            (other.best_depth == best_depth &&
             std::lexicographical_compare(other.best_word.begin(), other.best_word.end(),
                                          best_word.begin(), best_word.end()))) {
            best_depth = other.best_depth;
            best_word = other.best_word;
        }
    }
};

struct Control {
    std::uint64_t max_nodes;
    std::uint32_t max_depth;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
};

struct CheckpointWriter {
    CheckpointOptions options;
    int k;
    FreenessSpec spec;

    void write(std::span<const Letter> path, const Counters& c, std::uint64_t nodes) const {
        nlohmann::json j;
        j["k"] = k;
        j["alpha"] = rep::to_string(spec.alpha);
        j["mode"] = spec.mode == Mode::gt ? "gt" : "geq";
        j["min_period"] = spec.min_period;
        j["path"] = rep::to_string(Word(std::vector<Letter>(path.begin(), path.end()), k));
        j["nodes"] = nodes;
        j["internal_at"] = c.internal_at;
        j["deepest_leaf"] = c.deepest_leaf;
        j["best_depth"] = c.best_depth;
        j["best_word"] = rep::to_string(Word(c.best_word, k));

        const std::string tmp = options.file + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
            out << kCheckpointHeader << "\n" << j.dump() << "\n";
        }
        if (std::rename(tmp.c_str(), options.file.c_str()) != 0) {
            throw std::runtime_error("cannot move checkpoint into place at " + options.file);
        }
    }
};

struct ResumeState {
    std::vector<Letter> path;
    Counters counters;
    std::uint64_t nodes = 0;
};

ResumeState load_checkpoint(const std::string& file, int k, const FreenessSpec& spec) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open checkpoint file " + file);
    std::string header;
    std::getline(in, header);
    if (header != kCheckpointHeader) {
        throw std::runtime_error("bad checkpoint header in " + file);
    }
    nlohmann::json j;
    in >> j;

    if (j.at("k").get<int>() != k || j.at("alpha").get<std::string>() != to_string(spec.alpha) ||
        j.at("mode").get<std::string>() != (spec.mode == Mode::gt ? "gt" : "geq") ||
        j.at("min_period").get<int>() != spec.min_period) {
        throw std::runtime_error("checkpoint " + file + " was written for different parameters");
    }

    ResumeState state;
    state.path = parse_word(j.at("path").get<std::string>(), k).letters;
    state.nodes = j.at("nodes").get<std::uint64_t>();
    state.counters.internal_at = j.at("internal_at").get<std::vector<std::int64_t>>();
    state.counters.deepest_leaf = j.at("deepest_leaf").get<int>();
    state.counters.best_depth = j.at("best_depth").get<int>();
    state.counters.best_word = parse_word(j.at("best_word").get<std::string>(), k).letters;
    if (state.path.empty() || state.path.front() != 0) {
        throw std::runtime_error("checkpoint path must start with letter 0");
    }
    return state;
}

enum class WalkEnd { completed, budget };

// Lex-order DFS over the subtree that the checker currently points into.
// On entry the checker holds the current node (its push result is
// `witness`); the walk never pops above root_depth. When `roots` is given,
// free nodes at exactly collect_depth are recorded there and not descended
// into. Every processed node is counted against the budget.
WalkEnd walk(IncrementalChecker& chk, std::size_t root_depth, std::optional<Witness> witness,
             int collect_depth, std::vector<std::vector<Letter>>* roots, Control& ctl,
             const CheckpointWriter* ckpt, Counters& out) {
    const int k = chk.alphabet_size();
    for (;;) {
        const std::size_t depth = chk.size();
        const std::uint64_t done = ctl.nodes.load(std::memory_order_relaxed);
        if (ctl.stop.load(std::memory_order_relaxed) || done + 1 > ctl.max_nodes ||
            depth > ctl.max_depth) {
            ctl.stop.store(true, std::memory_order_relaxed);
            if (ckpt) ckpt->write(chk.letters(), out, done);
            return WalkEnd::budget;
        }
        if (ckpt && done > 0 && done % ckpt->options.every_nodes == 0) {
            ckpt->write(chk.letters(), out, done);
        }
        ctl.nodes.fetch_add(1, std::memory_order_relaxed);

        bool descend = false;
        if (!witness) {
            out.note_internal(chk.letters());
            if (roots && int(depth) == collect_depth) {
                roots->emplace_back(chk.letters().begin(), chk.letters().end());
            } else {
                descend = true;
            }
        } else {
            out.deepest_leaf = std::max(out.deepest_leaf, int(depth));
        }

        if (descend) {
            witness = chk.push(0);
            continue;
        }
        // Advance to the next node in lex order: next sibling, or the next
        // sibling of the nearest ancestor below the walk root.
        while (chk.size() > root_depth && chk.letters().back() == Letter(k - 1)) {
            chk.pop();
        }
        if (chk.size() == root_depth) return WalkEnd::completed;
        const Letter next = Letter(chk.letters().back() + 1);
        chk.pop();
        witness = chk.push(next);
    }
}

int pick_split_depth(int k) {
    if (k == 2) return 14;
    if (k == 3) return 10;
    return 8;
}

void validate_budget(const Budget& budget) {
    if (budget.max_nodes == 0 || budget.max_depth == 0) {
        throw std::invalid_argument("budget limits must be positive");
    }
}

ExploreReport assemble(int k, const FreenessSpec& spec, WalkEnd end, const Counters& total,
                       const Control& ctl) {
    const std::uint64_t nodes = ctl.nodes.load();
    if (end == WalkEnd::budget) {
        return ExploreReport{SearchBudgetExceeded{nodes, Word(total.best_word, k)}, nodes};
    }

    std::int64_t internal0 = 0;
    int deepest_internal = 0;
    for (std::size_t d = 0; d < total.internal_at.size(); ++d) {
        internal0 += total.internal_at[d];
        if (total.internal_at[d] > 0) deepest_internal = int(d);
    }

    TreeStats stats;
    stats.k = k;
    stats.spec = spec;
    stats.internal = std::int64_t(k) * internal0 + 1;
    stats.leaves = 1 + std::int64_t(k - 1) * stats.internal;
    stats.height = total.deepest_leaf;
    stats.max_len = total.deepest_leaf - 1;
    stats.max_count = std::int64_t(k) * total.internal_at[deepest_internal];
    stats.lex_least = Word(total.best_word, k);

    if (deepest_internal != total.best_depth || !stats_check(stats)) {
        throw std::logic_error("tree statistics failed their self-audit");
    }
    return ExploreReport{std::move(stats), nodes};
}

}  // namespace

ExploreReport explore(int k, const FreenessSpec& spec, Budget budget,
                      const ExploreOptions& options) {
    if (k < 2 || k > kMaxAlphabetSize) {
        throw std::invalid_argument("explore requires 2 <= k <= " +
                                    std::to_string(kMaxAlphabetSize));
    }
    validate_budget(budget);
    if (options.shards < 1) {
        throw std::invalid_argument("shard count must be >= 1");
    }
    if ((options.checkpoint || options.resume_file) && options.shards != 1) {
        throw std::invalid_argument("checkpointing requires a single shard");
    }

    Control ctl{budget.max_nodes, budget.max_depth};
    std::optional<CheckpointWriter> writer;
    if (options.checkpoint) {
        writer = CheckpointWriter{*options.checkpoint, k, spec};
    }
    const CheckpointWriter* writer_ptr = writer ? &*writer : nullptr;

    Counters total;

    if (options.resume_file) {
        ResumeState state = load_checkpoint(*options.resume_file, k, spec);
        ctl.nodes.store(state.nodes);
        total = std::move(state.counters);

        IncrementalChecker chk(k, spec);
        std::optional<Witness> witness;
        for (std::size_t i = 0; i < state.path.size(); ++i) {
            witness = chk.push(state.path[i]);
            if (witness && i + 1 < state.path.size()) {
                throw std::runtime_error("corrupt checkpoint: path has a non-free prefix");
            }
        }
        const WalkEnd end = walk(chk, 1, witness, 0, nullptr, ctl, writer_ptr, total);
        if (end == WalkEnd::completed && writer) std::remove(writer->options.file.c_str());
        return assemble(k, spec, end, total, ctl);
    }

    // Phase 1: walk the 0-subtree down to the split depth, collecting the
    // free words there as independent DFS roots.
    const int split = options.shards > 1 ? pick_split_depth(k) : 1;
    std::vector<std::vector<Letter>> roots;
    {
        IncrementalChecker chk(k, spec);
        const auto witness = chk.push(0);
        const WalkEnd end = walk(chk, 1, witness, split, &roots, ctl, writer_ptr, total);
        if (end == WalkEnd::budget) return assemble(k, spec, end, total, ctl);
    }
    if (roots.empty()) {
        // The whole tree is shallower than the split depth.
        if (writer) std::remove(writer->options.file.c_str());
        return assemble(k, spec, WalkEnd::completed, total, ctl);
    }

    // Phase 2: exhaust the subtree of every root.
    if (options.shards == 1) {
        IncrementalChecker chk(k, spec);
        for (Letter a : roots.front()) chk.push(a);
        const auto witness = chk.push(0);
        const WalkEnd end =
            walk(chk, roots.front().size(), witness, 0, nullptr, ctl, writer_ptr, total);
        if (end == WalkEnd::completed && writer) std::remove(writer->options.file.c_str());
        return assemble(k, spec, end, total, ctl);
    }

    std::vector<Counters> shard_counters(options.shards);
    std::atomic<std::size_t> next_root{0};
    std::atomic<bool> budget_hit{false};
    std::vector<std::thread> workers;
    workers.reserve(options.shards);
    for (int s = 0; s < options.shards; ++s) {
        workers.emplace_back([&, s] {
            Counters& mine = shard_counters[s];
            while (!ctl.stop.load(std::memory_order_relaxed)) {
                const std::size_t r = next_root.fetch_add(1);
                if (r >= roots.size()) break;
                IncrementalChecker chk(k, spec);
                for (Letter a : roots[r]) chk.push(a);
                const auto witness = chk.push(0);
                if (walk(chk, roots[r].size(), witness, 0, nullptr, ctl, nullptr, mine) ==
                    WalkEnd::budget) {
                    budget_hit.store(true);
                    break;
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const Counters& c : shard_counters) total.merge(c);

    return assemble(k, spec, budget_hit.load() ? WalkEnd::budget : WalkEnd::completed, total,
                    ctl);
}

bool stats_check(const TreeStats& s) {
    if (s.k < 2) return false;
    if (s.leaves != 1 + std::int64_t(s.k - 1) * s.internal) return false;
    if (s.max_len != s.height - 1) return false;
    if (s.internal >= 1 && s.max_count < 1) return false;
    if (std::int64_t(s.lex_least.size()) != s.max_len) return false;
    if (s.lex_least.alphabet_size != s.k) return false;
    if (scan(s.lex_least, s.spec)) return false;
    return true;
}

GrowReport grow(int k, const FreenessSpec& spec, int target_len, Budget budget) {
    if (k < 2 || k > kMaxAlphabetSize) {
        throw std::invalid_argument("grow requires 2 <= k <= " + std::to_string(kMaxAlphabetSize));
    }
    if (target_len < 1) {
        throw std::invalid_argument("target length must be >= 1");
    }
    validate_budget(budget);

    IncrementalChecker chk(k, spec);
    std::optional<Witness> witness = chk.push(0);
    std::uint64_t nodes = 0;
    int best = 0;
    for (;;) {
        const std::size_t depth = chk.size();
        if (nodes + 1 > budget.max_nodes || depth > budget.max_depth) {
            return GrowReport{GrowBudgetExceeded{nodes}, nodes};
        }
        ++nodes;

        if (!witness) {
            best = std::max(best, int(depth));
            if (int(depth) == target_len) {
                return GrowReport{GrowFound{chk.word()}, nodes};
            }
            witness = chk.push(0);
            continue;
        }
        while (chk.size() > 1 && chk.letters().back() == Letter(k - 1)) {
            chk.pop();
        }
        if (chk.size() == 1) {
            return GrowReport{GrowExhausted{best}, nodes};
        }
        const Letter next = Letter(chk.letters().back() + 1);
        chk.pop();
        witness = chk.push(next);
    }
}

std::string to_json(int k, const FreenessSpec& spec, const ExploreReport& report) {
    nlohmann::json j;
    j["k"] = k;
    j["alpha"] = to_string(spec.alpha);
    j["mode"] = spec.mode == Mode::gt ? "gt" : "geq";
    j["min_period"] = spec.min_period;
    j["nodes_visited"] = report.nodes_visited;
    if (const TreeStats* st = report.finite()) {
        j["finite"] = true;
        j["leaves"] = st->leaves;
        j["internal"] = st->internal;
        j["height"] = st->height;
        j["max_len"] = st->max_len;
        j["max_count"] = st->max_count;
        j["lex_least"] = to_string(st->lex_least);
    } else {
        const SearchBudgetExceeded* b = report.exceeded();
        j["finite"] = false;
        j["leaves"] = 0;
        j["internal"] = 0;
        j["height"] = 0;
        j["max_len"] = std::int64_t(b->deepest_free_word.size());
        j["max_count"] = 0;
        j["lex_least"] = to_string(b->deepest_free_word);
    }
    return j.dump();
}

}  // namespace rep
