#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rep/exponent.hpp"
#include "rep/search.hpp"

namespace rep {

enum class Tier { fast, slow };

// One reference row: the tree statistics expected for (k, min_period,
// alpha) in geq mode. Absent fields carry no expectation.
struct TableRow {
    int k = 0;
    int min_period = 0;
    Exponent alpha;
    Tier tier = Tier::fast;
    std::optional<std::int64_t> leaves;
    std::optional<std::int64_t> internal;
    std::optional<int> height;
    std::optional<int> max_len;
    std::optional<std::int64_t> max_count;
    std::optional<std::string> lex_least;

    FreenessSpec spec() const { return FreenessSpec::make(alpha, min_period, Mode::geq); }
};

// All reference rows. The fast tier finishes in seconds; the slow tier is
// minutes of single-core search.
std::span<const TableRow> reference_rows();
const TableRow* find_row(int k, int min_period, const Exponent& alpha);

// Known and conjectured repetition thresholds R(k, l). Conjectured entries
// are data, never asserted by any check in this project.
struct Threshold {
    int k = 0;
    int min_period = 0;
    Exponent alpha;
    bool proven = false;
};

std::span<const Threshold> threshold_table();

struct RowOutcome {
    const TableRow* row = nullptr;
    ExploreReport report;
    bool conclusive = false;  // explore finished within budget
    bool pass = false;        // conclusive and every provided field matched
    std::vector<std::string> mismatches;
};

RowOutcome run_row(const TableRow& row, Budget budget, int shards = 1);

}  // namespace rep
