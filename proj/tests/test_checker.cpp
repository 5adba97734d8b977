#include <doctest.h>

#include <random>
#include <vector>

#include "rep/checker.hpp"
#include "rep/scan.hpp"
#include "rep/table.hpp"

using namespace rep;

namespace {

std::vector<Letter> letters_of(const char* text, int k) {
    return parse_word(text, k).letters;
}

}  // namespace

TEST_CASE("push reports the first forbidden suffix") {
    IncrementalChecker chk(2, parse_spec("2/1 @ 1"));
    CHECK(!chk.push(0));
    CHECK(!chk.push(1));
    CHECK(!chk.push(0));
    const auto wit = chk.push(0);
    REQUIRE(wit.has_value());
    CHECK(*wit == Witness{3, 1, 2});  // the square "00"
}

TEST_CASE("a free word pushes clean at every step") {
    IncrementalChecker chk(2, parse_spec("2/1 @ 1"));
    for (Letter a : letters_of("010", 2)) {
        CHECK(!chk.push(a));
    }
}

TEST_CASE("the longest tabulated binary word for (3/2, 4) is free") {
    const TableRow* row = find_row(2, 4, Exponent::make(3, 2));
    REQUIRE(row != nullptr);
    REQUIRE(row->lex_least.has_value());
    IncrementalChecker chk(2, parse_spec("3/2 @ 4"));
    for (Letter a : letters_of(row->lex_least->c_str(), 2)) {
        CHECK(!chk.push(a));
    }
    CHECK(chk.size() == 53);
}

TEST_CASE("pop restores the exact state") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 200; ++iter) {
        const int k = 2 + int(rng() % 3);
        const std::int64_t den = 2 + std::int64_t(rng() % 2);
        const FreenessSpec spec = FreenessSpec::make(
            Exponent::make(den + 1 + std::int64_t(rng() % 4), den), 1 + int(rng() % 3),
            rng() % 2 ? Mode::geq : Mode::gt);

        IncrementalChecker chk(k, spec);
        std::vector<Letter> shadow;
        for (int step = 0; step < 120; ++step) {
            if (!shadow.empty() && rng() % 3 == 0) {
                chk.pop();
                shadow.pop_back();
            } else {
                const Letter a = Letter(rng() % k);
                chk.push(a);
                shadow.push_back(a);
            }
        }
        // Replaying only the net pushes must give identical state.
        IncrementalChecker fresh(k, spec);
        for (Letter a : shadow) fresh.push(a);
        CHECK(std::vector<Letter>(chk.letters().begin(), chk.letters().end()) == shadow);
        CHECK(std::vector<std::int32_t>(chk.suffix_period_lengths().begin(),
                                        chk.suffix_period_lengths().end()) ==
              std::vector<std::int32_t>(fresh.suffix_period_lengths().begin(),
                                        fresh.suffix_period_lengths().end()));
    }
}

TEST_CASE("pop on an empty checker is a contract violation") {
    IncrementalChecker chk(2, parse_spec("2/1 @ 1"));
    CHECK_THROWS_AS(chk.pop(), std::logic_error);
}

TEST_CASE("checker agrees with the naive scan on random words") {
    std::mt19937 rng(13579);
    const std::vector<Exponent> alphas = {Exponent{5, 4}, Exponent{4, 3}, Exponent{3, 2},
                                          Exponent{7, 4}, Exponent{2, 1}};
    int checked = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        const int k = 2 + int(rng() % 3);
        const int len = int(rng() % 61);
        const FreenessSpec spec =
            FreenessSpec::make(alphas[rng() % alphas.size()], 1 + int(rng() % 3),
                               rng() % 2 ? Mode::geq : Mode::gt);

        std::vector<Letter> letters(len);
        for (auto& a : letters) a = Letter(rng() % k);

        IncrementalChecker chk(k, spec);
        std::optional<Witness> first;
        for (Letter a : letters) {
            const auto wit = chk.push(a);
            if (wit && !first) first = wit;
        }
        const auto reference = scan(Word(letters, k), spec);
        REQUIRE(first.has_value() == reference.has_value());
        if (first) {
            CHECK(*first == *reference);
            CHECK(witness_valid(Word(letters, k), spec, *first));
            ++checked;
        }
    }
    CHECK(checked > 100);  // the sample must actually exercise violations
}

TEST_CASE("period limit ignores longer periods") {
    // 0123401234 is a square with period 5 and nothing shorter.
    const auto letters = letters_of("0123401234", 5);

    IncrementalChecker unlimited(5, parse_spec("2/1 @ 1"));
    std::optional<Witness> hit;
    for (Letter a : letters) {
        if (auto wit = unlimited.push(a); wit && !hit) hit = wit;
    }
    REQUIRE(hit.has_value());
    CHECK(hit->period == 5);

    IncrementalChecker limited(5, parse_spec("2/1 @ 1"), 5);  // periods 1..4 only
    for (Letter a : letters) {
        CHECK(!limited.push(a));
    }
}

TEST_CASE("letters outside the alphabet are rejected") {
    IncrementalChecker chk(2, parse_spec("2/1 @ 1"));
    CHECK_THROWS_AS(chk.push(2), std::invalid_argument);
}
