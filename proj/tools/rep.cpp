// Command-line front end: freeness checking, avoidance-tree statistics,
// long-word construction, reference-table reproduction and morphism checks.
//
// Exit codes: 0 success, 1 domain negative (forbidden factor found or a
// table row failed), 2 usage or parse error, 3 budget exceeded or
// inconclusive.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rep/checker.hpp"
#include "rep/morphism.hpp"
#include "rep/scan.hpp"
#include "rep/search.hpp"
#include "rep/table.hpp"
#include "rep/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

using nlohmann::json;

rep::Budget make_budget(std::uint64_t max_nodes, std::uint64_t max_depth) {
    rep::Budget budget;
    if (max_nodes != 0) budget.max_nodes = max_nodes;
    if (max_depth != 0) budget.max_depth = std::uint32_t(max_depth);
    return budget;
}

struct SpecArg {
    std::string text;
    rep::FreenessSpec parsed;
};

int cmd_check(int k, const std::string& spec_text) {
    const rep::FreenessSpec spec = rep::parse_spec(spec_text);

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    if (lines.empty()) lines.push_back("");  // empty input, one empty word

    bool any_witness = false;
    for (const std::string& text : lines) {
        const rep::Word word = rep::parse_word(text, k);
        if (const auto witness = rep::scan(word, spec)) {
            any_witness = true;
            std::cout << rep::to_string(*witness) << "\n";
        } else {
            std::cout << "FREE\n";
        }
    }
    return any_witness ? kExitNegative : kExitOk;
}

void print_tree_report(int k, const rep::FreenessSpec& spec, const rep::ExploreReport& report,
                       bool as_json) {
    if (as_json) {
        std::cout << rep::to_json(k, spec, report) << "\n";
        return;
    }
    std::cout << "k=" << k << " spec=" << rep::to_string(spec) << "\n";
    if (const rep::TreeStats* stats = report.finite()) {
        std::cout << "finite: yes\n"
                  << "leaves=" << stats->leaves << " internal=" << stats->internal
                  << " height=" << stats->height << " max_len=" << stats->max_len
                  << " max_count=" << stats->max_count << "\n"
                  << "lex_least=" << rep::to_string(stats->lex_least) << "\n";
    } else {
        const rep::SearchBudgetExceeded* b = report.exceeded();
        std::cout << "finite: inconclusive (budget exceeded)\n"
                  << "deepest_free_word=" << rep::to_string(b->deepest_free_word)
                  << " length=" << b->deepest_free_word.size() << "\n";
    }
    std::cout << "nodes_visited=" << report.nodes_visited << "\n";
}

int cmd_tree(int k, const std::string& spec_text, rep::Budget budget,
             const rep::ExploreOptions& options, bool as_json) {
    const rep::FreenessSpec spec = rep::parse_spec(spec_text);
    const rep::ExploreReport report = rep::explore(k, spec, budget, options);
    print_tree_report(k, spec, report, as_json);
    return report.finite() ? kExitOk : kExitBudget;
}

int cmd_grow(int k, const std::string& spec_text, int target, rep::Budget budget, bool as_json) {
    const rep::FreenessSpec spec = rep::parse_spec(spec_text);
    const rep::GrowReport report = rep::grow(k, spec, target, budget);

    if (as_json) {
        json j;
        j["k"] = k;
        j["alpha"] = rep::to_string(spec.alpha);
        j["mode"] = spec.mode == rep::Mode::gt ? "gt" : "geq";
        j["min_period"] = spec.min_period;
        j["target"] = target;
        j["nodes_visited"] = report.nodes_visited;
        if (const auto* f = report.found()) {
            j["found"] = true;
            j["word"] = rep::to_string(f->word);
        } else if (const auto* e = report.exhausted()) {
            j["found"] = false;
            j["max_len_reached"] = e->max_len_reached;
        } else {
            j["found"] = false;
            j["budget_exceeded"] = true;
        }
        std::cout << j.dump() << "\n";
    }

    if (const auto* f = report.found()) {
        if (!as_json) std::cout << rep::to_string(f->word) << "\n";
        return kExitOk;
    }
    if (const auto* e = report.exhausted()) {
        std::cerr << "exhausted: no free word of length " << target
                  << ", the longest has length " << e->max_len_reached << "\n";
        return kExitNegative;
    }
    std::cerr << "budget exceeded after " << report.nodes_visited << " nodes\n";
    return kExitBudget;
}

int cmd_table(const std::vector<std::string>& row_args, const std::string& tier,
              rep::Budget budget, int shards, bool as_json) {
    std::vector<const rep::TableRow*> selected;
    std::vector<rep::TableRow> ad_hoc;  // rows requested but absent from the presets

    if (!row_args.empty()) {
        ad_hoc.reserve(row_args.size());
        for (const std::string& arg : row_args) {
            if (arg.empty()) continue;  // empty filter selects nothing
            std::stringstream ss(arg);
            std::string k_text, l_text, alpha_text;
            if (!std::getline(ss, k_text, ',') || !std::getline(ss, l_text, ',') ||
                !std::getline(ss, alpha_text)) {
                throw std::invalid_argument("--row expects \"k,l,alpha\", got '" + arg + "'");
            }
            const int k = std::stoi(k_text);
            const int l = std::stoi(l_text);
            const rep::Exponent alpha = rep::parse_exponent(alpha_text);
            if (const rep::TableRow* row = rep::find_row(k, l, alpha)) {
                selected.push_back(row);
            } else {
                ad_hoc.push_back(rep::TableRow{k, l, alpha, rep::Tier::slow});
                selected.push_back(&ad_hoc.back());
            }
        }
    } else {
        for (const rep::TableRow& row : rep::reference_rows()) {
            if (tier == "all" || (tier == "fast" && row.tier == rep::Tier::fast) ||
                (tier == "slow" && row.tier == rep::Tier::slow)) {
                selected.push_back(&row);
            }
        }
    }

    if (selected.empty()) {
        if (as_json) {
            std::cout << json::array().dump() << "\n";
        } else {
            std::cout << "no rows selected\n";
        }
        return kExitOk;
    }

    json rows_json = json::array();
    int failures = 0;
    int inconclusive = 0;
    for (const rep::TableRow* row : selected) {
        const auto start = std::chrono::steady_clock::now();
        const rep::RowOutcome outcome = rep::run_row(*row, budget, shards);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                                .count();

        const bool has_expectations = row->leaves || row->internal || row->height ||
                                      row->max_len || row->max_count || row->lex_least;
        std::string verdict;
        if (!outcome.conclusive) {
            verdict = "INCONCLUSIVE";
            ++inconclusive;
        } else if (!has_expectations) {
            verdict = "DONE";
        } else if (outcome.pass) {
            verdict = "PASS";
        } else {
            verdict = "FAIL";
            ++failures;
        }

        if (as_json) {
            json j;
            j["k"] = row->k;
            j["min_period"] = row->min_period;
            j["alpha"] = rep::to_string(row->alpha);
            j["verdict"] = verdict;
            j["seconds"] = secs;
            j["mismatches"] = outcome.mismatches;
            j["report"] = json::parse(rep::to_json(row->k, row->spec(), outcome.report));
            rows_json.push_back(std::move(j));
            continue;
        }

        std::ostringstream head;
        head << verdict << " k=" << row->k << " l=" << row->min_period
             << " alpha=" << rep::to_string(row->alpha);
        if (const rep::TreeStats* stats = outcome.report.finite()) {
            head << " internal=" << stats->internal << " height=" << stats->height
                 << " max_count=" << stats->max_count;
        }
        head << " (" << std::fixed << secs << "s)";
        std::cout << head.str() << "\n";
        for (const std::string& m : outcome.mismatches) {
            std::cout << "    " << m << "\n";
        }
    }

    if (as_json) {
        std::cout << rows_json.dump() << "\n";
    } else {
        std::cout << (selected.size() - failures - inconclusive) << "/" << selected.size()
                  << " rows ok";
        if (inconclusive) std::cout << ", " << inconclusive << " inconclusive";
        std::cout << "\n";
    }
    if (failures) return kExitNegative;
    if (inconclusive) return kExitBudget;
    return kExitOk;
}

rep::Morphism pick_morphism(const std::string& builtin, const std::string& file) {
    if (!file.empty()) return rep::load_morphism(file);
    if (builtin == "h") return rep::builtin_morphism_h();
    throw std::invalid_argument("unknown builtin morphism '" + builtin + "' (try \"h\")");
}

int cmd_verify_sync(const rep::Morphism& m, bool as_json) {
    const rep::SyncReport report = rep::check_synchronizing(m);
    if (as_json) {
        json j;
        j["synchronizing"] = report.synchronizing;
        j["counterexamples"] = json::array();
        for (const auto& ce : report.counterexamples) {
            j["counterexamples"].push_back({{"a", int(ce.a)},
                                            {"b", int(ce.b)},
                                            {"c", int(ce.c)},
                                            {"offset", ce.offset}});
        }
        std::cout << j.dump() << "\n";
    } else if (report.synchronizing) {
        std::cout << "synchronizing\n";
    } else {
        std::cout << "not synchronizing\n";
        for (const auto& ce : report.counterexamples) {
            std::cout << "image(" << rep::to_digit(ce.c) << ") occurs in image("
                      << rep::to_digit(ce.a) << rep::to_digit(ce.b) << ") at offset "
                      << ce.offset << "\n";
        }
    }
    return report.synchronizing ? kExitOk : kExitNegative;
}

int cmd_theorem3(int n, rep::Budget budget, bool as_json) {
    const rep::ConstructionReport report = rep::verify_construction(n, budget);
    if (as_json) {
        json j;
        j["success"] = report.success;
        j["n"] = report.n;
        j["image_length"] = report.image_length;
        j["budget_exceeded"] = report.budget_exceeded;
        j["source_exhausted"] = report.source_exhausted;
        j["nodes_visited"] = report.nodes_visited;
        if (report.witness) j["witness"] = rep::to_string(*report.witness);
        std::cout << j.dump() << "\n";
    }
    if (report.success) {
        if (!as_json) {
            std::cout << "success: image of length " << report.image_length
                      << " has no factor of exponent > 3/2 with period >= 2\n";
        }
        return kExitOk;
    }
    if (report.budget_exceeded) {
        std::cerr << "budget exceeded while growing the source word\n";
        return kExitBudget;
    }
    if (report.source_exhausted) {
        std::cerr << "no free source word of length " << n << " exists\n";
        return kExitNegative;
    }
    if (!as_json && report.witness) {
        std::cout << "forbidden factor in image: " << rep::to_string(*report.witness) << "\n";
    }
    return kExitNegative;
}

int cmd_smallcase(const rep::Morphism& m, const std::string& src_spec_text, int max_root,
                  std::uint64_t cap, bool as_json) {
    const rep::FreenessSpec src_spec = rep::parse_spec(src_spec_text);
    const rep::SmallCaseScan result = rep::small_case_scan(m, src_spec, max_root, cap);

    if (as_json) {
        json j;
        j["complete"] = result.complete;
        j["source_length"] = result.source_length;
        j["source_words"] = result.source_words;
        j["nodes_visited"] = result.nodes_visited;
        j["violations"] = json::array();
        for (const auto& [word, witness] : result.violations) {
            j["violations"].push_back(
                {{"source", rep::to_string(word)}, {"witness", rep::to_string(witness)}});
        }
        std::cout << j.dump() << "\n";
    }
    if (!result.complete) {
        std::cerr << "inconclusive: enumeration cap hit after " << result.nodes_visited
                  << " nodes\n";
        return kExitBudget;
    }
    if (!as_json) {
        std::cout << "scanned " << result.source_words << " free source words of length "
                  << result.source_length << ": " << result.violations.size()
                  << " violation(s)\n";
        for (const auto& [word, witness] : result.violations) {
            std::cout << "  source=" << rep::to_string(word) << " "
                      << rep::to_string(witness) << "\n";
        }
    }
    return result.violations.empty() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Repetition-avoidance toolkit: exact fractional-power detection, "
                 "avoidance-tree statistics and morphism checks"};
    app.require_subcommand(1);

    int k = 2;
    std::string spec_text;
    std::uint64_t max_nodes = 0;  // 0 means unlimited
    std::uint64_t max_depth = 0;
    int shards = 1;
    int target = 1;
    bool as_json = false;
    std::string checkpoint_file;
    std::string resume_file;
    std::string tier = "fast";
    std::vector<std::string> row_args;
    std::string builtin = "h";
    std::string morphism_file;
    int theorem_n = 600;
    int max_root = 100;
    std::uint64_t cap = 100'000'000;

    auto* check = app.add_subcommand("check", "Scan words from stdin for forbidden factors");
    check->add_option("--k", k, "alphabet size")->required();
    check->add_option("--spec", spec_text, "freeness spec \"NUM/DEN[+] @ L\"")->required();

    auto* tree = app.add_subcommand("tree", "Exhaust the avoidance tree and print statistics");
    tree->add_option("--k", k, "alphabet size")->required();
    tree->add_option("--spec", spec_text, "freeness spec")->required();
    tree->add_option("--max-nodes", max_nodes, "node budget (0 = unlimited)");
    tree->add_option("--max-depth", max_depth, "depth budget (0 = unlimited)");
    tree->add_option("--shards", shards, "worker threads");
    tree->add_option("--checkpoint", checkpoint_file, "write resumable snapshots to FILE");
    tree->add_option("--resume", resume_file, "resume from a snapshot FILE");
    tree->add_flag("--json", as_json, "machine-readable output");

    auto* grow = app.add_subcommand("grow", "Depth-first search for a long free word");
    grow->add_option("--k", k, "alphabet size")->required();
    grow->add_option("--spec", spec_text, "freeness spec")->required();
    grow->add_option("--target", target, "target word length")->required();
    grow->add_option("--max-nodes", max_nodes, "node budget (0 = unlimited)");
    grow->add_option("--max-depth", max_depth, "depth budget (0 = unlimited)");
    grow->add_flag("--json", as_json, "machine-readable output");

    auto* table = app.add_subcommand("table", "Reproduce the reference tree statistics");
    table->add_option("--tier", tier, "fast, slow or all")
        ->check(CLI::IsMember({"fast", "slow", "all"}));
    table->add_option("--row", row_args, "single row \"k,l,alpha\" (repeatable)");
    table->add_option("--max-nodes", max_nodes, "node budget per row (0 = unlimited)");
    table->add_option("--shards", shards, "worker threads");
    table->add_flag("--json", as_json, "machine-readable output");

    auto* morphism = app.add_subcommand("morphism", "Uniform-morphism checks");
    morphism->require_subcommand(1);
    auto* sync = morphism->add_subcommand("verify-sync", "Check the synchronizing property");
    sync->add_option("--builtin", builtin, "built-in morphism name");
    sync->add_option("--file", morphism_file, "morphism file (LETTER -> IMAGE per line)");
    sync->add_flag("--json", as_json, "machine-readable output");

    auto* theorem3 = morphism->add_subcommand(
        "theorem3", "Grow a free quaternary word, map it, check the image");
    theorem3->add_option("--n", theorem_n, "source word length");
    theorem3->add_option("--max-nodes", max_nodes, "node budget (0 = unlimited)");
    theorem3->add_flag("--json", as_json, "machine-readable output");

    auto* smallcase = morphism->add_subcommand(
        "smallcase", "Scan images of all short free source words for bounded-period factors");
    smallcase->add_option("--builtin", builtin, "built-in morphism name");
    smallcase->add_option("--file", morphism_file, "morphism file");
    smallcase->add_option("--src-spec", spec_text, "source freeness spec")
        ->default_str("7/5+ @ 1");
    smallcase->add_option("--max-root", max_root, "scan periods in [2, max-root)");
    smallcase->add_option("--cap", cap, "enumeration node cap");
    smallcase->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const rep::Budget budget = make_budget(max_nodes, max_depth);
        if (check->parsed()) {
            return cmd_check(k, spec_text);
        }
        if (tree->parsed()) {
            rep::ExploreOptions options;
            options.shards = shards;
            if (!checkpoint_file.empty()) {
                options.checkpoint = rep::CheckpointOptions{checkpoint_file};
            }
            if (!resume_file.empty()) options.resume_file = resume_file;
            return cmd_tree(k, spec_text, budget, options, as_json);
        }
        if (grow->parsed()) {
            return cmd_grow(k, spec_text, target, budget, as_json);
        }
        if (table->parsed()) {
            return cmd_table(row_args, tier, budget, shards, as_json);
        }
        if (sync->parsed()) {
            return cmd_verify_sync(pick_morphism(builtin, morphism_file), as_json);
        }
        if (theorem3->parsed()) {
            return cmd_theorem3(theorem_n, budget, as_json);
        }
        if (smallcase->parsed()) {
            if (spec_text.empty()) spec_text = "7/5+ @ 1";
            return cmd_smallcase(pick_morphism(builtin, morphism_file), spec_text, max_root, cap,
                                 as_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
