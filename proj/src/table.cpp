#include "rep/table.hpp"

namespace rep {

namespace {

Exponent exp(std::int64_t num, std::int64_t den) { return Exponent::make(num, den); }

std::vector<TableRow> build_rows() {
    std::vector<TableRow> rows;
    auto add = [&rows](int k, int l, Exponent alpha, Tier tier, std::int64_t leaves,
                       std::int64_t internal, int height, int max_len, std::int64_t max_count,
                       std::string lex_least) {
        rows.push_back(TableRow{k, l, alpha, tier, leaves, internal, height, max_len, max_count,
                                std::move(lex_least)});
    };

    // Fast tier: reproduced by `table --tier fast` in seconds.
    add(2, 1, exp(2, 1), Tier::fast, 8, 7, 4, 3, 2, "010");
    add(2, 2, exp(2, 1), Tier::fast, 478, 477, 19, 18, 2, "010011000111001101");
    add(2, 3, exp(8, 5), Tier::fast, 5196, 5195, 34, 33, 12,
        "001100001010111100001110101000110");
    add(2, 4, exp(3, 2), Tier::fast, 13680, 13679, 54, 53, 4,
        "01110010010111100000110110100100111110000010110110001");
    add(3, 1, exp(7, 4), Tier::fast, 6393, 3196, 39, 38, 18,
        "01020121021201021012021020121021201020");
    add(3, 2, exp(3, 2), Tier::fast, 11655, 5827, 31, 30, 6,
        "012002112201100221120011022012");
    add(4, 2, exp(5, 4), Tier::fast, 10324, 3441, 17, 16, 24, "0112330022110332");
    add(5, 1, exp(5, 4), Tier::fast, 1785, 446, 7, 6, 120, "012340");
    add(6, 1, exp(6, 5), Tier::fast, 13386, 2677, 8, 7, 720, "0123450");
    add(7, 1, exp(7, 6), Tier::fast, 112441, 18740, 9, 8, 5040, "01234560");
    add(8, 1, exp(8, 7), Tier::fast, 1049448, 149921, 10, 9, 40320, "012345670");

    // Slow tier: larger trees, opt in with --tier slow.
    add(2, 5, exp(7, 5), Tier::slow, 40642, 40641, 60, 59, 4,
        "00111010101000001111110010001011101100000011111010101000001");
    add(2, 6, exp(4, 3), Tier::slow, 21476, 21475, 40, 39, 4,
        "000110101101000000011111110101001000110");
    add(2, 7, exp(9, 7), Tier::slow, 81368, 81367, 65, 64, 4,
        "0001111011100000001010101011111111001001001011011011000000001010");
    add(3, 3, exp(4, 3), Tier::slow, 4037361, 2018680, 228, 227, 6,
        "012121000111222010121200022210102021112220001212020111000"
        "212101022200011120201012221110202121000111222010121200022"
        "211120201012220001110202121000222010121200011122210102021"
        "11000121202011122200021210102221112020101222000111020201");
    add(3, 4, exp(5, 4), Tier::slow, 188247, 94123, 63, 62, 24,
        "00102202111100001221210200201111222210010120220211100001212210");
    add(3, 5, exp(6, 5), Tier::slow, 493653, 246826, 63, 62, 12,
        "01011121200000222221110102020212121000001111122022002101210120");
    add(3, 6, exp(7, 6), Tier::slow, 782931, 391465, 60, 59, 24,
        "00001211212102020220111111000000212212120101011022222200001");
    add(3, 7, exp(8, 7), Tier::slow, 2881125, 1440562, 68, 67, 24,
        "0000111111122202020101010121212120000000222222211011010012020212021");
    add(4, 1, exp(7, 5), Tier::slow, 709036, 236345, 122, 121, 48,
        "012031021301231032013021031230132031021301203210231201302"
        "1032012310213203123013210231203213012310320130210312301"
        "320310230");
    add(4, 3, exp(6, 5), Tier::slow, 153724, 51241, 24, 23, 96, "01012333000222111332001");
    add(4, 4, exp(7, 6), Tier::slow, 2501620, 833873, 35, 34, 24,
        "0010122223033111100002212333301011");
    add(4, 5, exp(8, 7), Tier::slow, 30669148, 10223049, 40, 39, 864,
        "001012222230331111100000221233333010101");
    add(5, 2, exp(6, 5), Tier::slow, 453965, 113491, 23, 22, 240, "0122344002114332204413");
    add(5, 3, exp(8, 7), Tier::slow, 7497345, 1874336, 34, 33, 720,
        "010123234440002111433322204041312");
    add(6, 2, exp(8, 7), Tier::slow, 3159066, 631813, 21, 20, 1440, "01233455002211443052");

    // Binary counterexample to the pattern suggested by the l <= 7 column:
    // the (788/625, 8) tree is finite. Only height and internal-node count
    // are on record.
    rows.push_back(TableRow{2, 8, exp(788, 625), Tier::slow, std::nullopt, 53699993, 195,
                            std::nullopt, std::nullopt, std::nullopt});

    return rows;
}

std::vector<Threshold> build_thresholds() {
    std::vector<Threshold> t;
    auto add = [&t](int k, int l, Exponent alpha, bool proven) {
        t.push_back(Threshold{k, l, alpha, proven});
    };
    add(2, 1, exp(2, 1), true);
    add(2, 2, exp(2, 1), true);
    add(2, 3, exp(8, 5), false);
    add(2, 4, exp(3, 2), false);
    add(2, 5, exp(7, 5), false);
    add(2, 6, exp(4, 3), false);
    add(2, 7, exp(9, 7), false);
    add(3, 1, exp(7, 4), true);
    add(3, 2, exp(3, 2), true);
    add(3, 3, exp(4, 3), false);
    add(3, 4, exp(5, 4), false);
    add(3, 5, exp(6, 5), false);
    add(3, 6, exp(7, 6), false);
    add(3, 7, exp(8, 7), false);
    add(4, 1, exp(7, 5), true);
    add(4, 2, exp(5, 4), false);
    add(4, 3, exp(6, 5), false);
    add(4, 4, exp(7, 6), false);
    add(5, 1, exp(5, 4), true);
    add(5, 2, exp(6, 5), false);
    add(5, 3, exp(8, 7), false);
    add(6, 1, exp(6, 5), true);
    add(6, 2, exp(8, 7), false);
    add(7, 1, exp(7, 6), true);
    add(8, 1, exp(8, 7), true);
    add(9, 1, exp(9, 8), true);
    add(10, 1, exp(10, 9), true);
    add(11, 1, exp(11, 10), true);
    add(12, 1, exp(12, 11), false);
    add(13, 1, exp(13, 12), false);
    return t;
}

}  // namespace

std::span<const TableRow> reference_rows() {
    static const std::vector<TableRow> rows = build_rows();
    return rows;
}

const TableRow* find_row(int k, int min_period, const Exponent& alpha) {
    for (const TableRow& row : reference_rows()) {
        if (row.k == k && row.min_period == min_period && row.alpha == alpha) return &row;
    }
    return nullptr;
}

std::span<const Threshold> threshold_table() {
    static const std::vector<Threshold> thresholds = build_thresholds();
    return thresholds;
}

RowOutcome run_row(const TableRow& row, Budget budget, int shards) {
    RowOutcome outcome;
    outcome.row = &row;

    ExploreOptions options;
    options.shards = shards;
    outcome.report = explore(row.k, row.spec(), budget, options);

    const TreeStats* stats = outcome.report.finite();
    if (!stats) {
        outcome.mismatches.push_back("budget exceeded after " +
                                     std::to_string(outcome.report.nodes_visited) + " nodes");
        return outcome;
    }
    outcome.conclusive = true;

    auto require = [&outcome](const std::string& field, auto expected, auto actual) {
        if (expected != actual) {
            outcome.mismatches.push_back(field + ": expected " + std::to_string(expected) +
                                         ", got " + std::to_string(actual));
        }
    };
    if (row.leaves) require("leaves", *row.leaves, stats->leaves);
    if (row.internal) require("internal", *row.internal, stats->internal);
    if (row.height) require("height", *row.height, stats->height);
    if (row.max_len) require("max_len", *row.max_len, stats->max_len);
    if (row.max_count) require("max_count", *row.max_count, stats->max_count);
    if (row.lex_least && *row.lex_least != to_string(stats->lex_least)) {
        outcome.mismatches.push_back("lex_least: expected " + *row.lex_least + ", got " +
                                     to_string(stats->lex_least));
    }
    outcome.pass = outcome.mismatches.empty();
    return outcome;
}

}  // namespace rep
