#include <doctest.h>

#include "rep/table.hpp"

using namespace rep;

TEST_CASE("reference rows are internally consistent") {
    CHECK(reference_rows().size() == 27);
    for (const TableRow& row : reference_rows()) {
        CAPTURE(row.k);
        CAPTURE(row.min_period);
        if (row.leaves && row.internal) {
            CHECK(*row.leaves == 1 + std::int64_t(row.k - 1) * *row.internal);
        }
        if (row.height && row.max_len) {
            CHECK(*row.max_len == *row.height - 1);
        }
        if (row.lex_least && row.max_len) {
            CHECK(std::int64_t(row.lex_least->size()) == *row.max_len);
        }
        CHECK(row.alpha.num > row.alpha.den);
    }
}

TEST_CASE("row lookup") {
    const TableRow* row = find_row(2, 1, Exponent::make(2, 1));
    REQUIRE(row != nullptr);
    CHECK(row->internal == 7);
    CHECK(find_row(2, 1, Exponent::make(3, 2)) == nullptr);
    CHECK(find_row(2, 8, Exponent::make(788, 625)) != nullptr);
}

TEST_CASE("fast tier is the eleven quick rows") {
    int fast = 0;
    for (const TableRow& row : reference_rows()) {
        if (row.tier == Tier::fast) ++fast;
    }
    CHECK(fast == 11);
}

TEST_CASE("run_row verifies a reference row") {
    const TableRow* row = find_row(2, 1, Exponent::make(2, 1));
    REQUIRE(row != nullptr);
    const RowOutcome outcome = run_row(*row, Budget::unlimited());
    CHECK(outcome.conclusive);
    CHECK(outcome.pass);
    CHECK(outcome.mismatches.empty());
}

TEST_CASE("run_row flags a budget-capped run as inconclusive") {
    const TableRow* row = find_row(3, 1, Exponent::make(7, 4));
    REQUIRE(row != nullptr);
    const RowOutcome outcome = run_row(*row, Budget::nodes(10));
    CHECK(!outcome.conclusive);
    CHECK(!outcome.pass);
}

TEST_CASE("threshold data covers the conjecture harness slice") {
    CHECK(threshold_table().size() == 30);

    // Established entries never collide with conjectured ones.
    const Threshold* t22 = nullptr;
    for (const Threshold& t : threshold_table()) {
        if (t.k == 2 && t.min_period == 2) t22 = &t;
    }
    REQUIRE(t22 != nullptr);
    CHECK(t22->proven);
    CHECK(t22->alpha == Exponent{2, 1});

    int conjectured_small = 0;
    for (const Threshold& t : threshold_table()) {
        if (!t.proven && t.k <= 4 && t.min_period <= 5) ++conjectured_small;
    }
    CHECK(conjectured_small == 9);
}
