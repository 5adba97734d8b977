#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "rep/morphism.hpp"
#include "rep/scan.hpp"

using namespace rep;

TEST_CASE("builtin morphism images") {
    const Morphism& h = builtin_morphism_h();
    CHECK(h.k_src == 4);
    CHECK(h.k_dst == 3);
    CHECK(to_string(apply(h, parse_word("0", 4))) == "000211");
    CHECK(to_string(apply(h, parse_word("3", 4))) == "120221");
    CHECK(apply(h, parse_word("", 4)).empty());
    CHECK(uniform_width(h) == 6);
}

TEST_CASE("uniform width") {
    const Morphism identity = Morphism::make(1, 1, {parse_word("0", 1)});
    CHECK(uniform_width(identity) == 1);

    const Morphism ragged =
        Morphism::make(2, 2, {parse_word("0", 2), parse_word("01", 2)});
    CHECK(!uniform_width(ragged).has_value());
    CHECK_THROWS_AS(check_synchronizing(ragged), std::invalid_argument);
}

TEST_CASE("apply is a homomorphism") {
    const Morphism& h = builtin_morphism_h();
    std::mt19937 rng(777);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Letter> u(rng() % 12), v(rng() % 12);
        for (auto& a : u) a = Letter(rng() % 4);
        for (auto& a : v) a = Letter(rng() % 4);
        std::vector<Letter> uv = u;
        uv.insert(uv.end(), v.begin(), v.end());

        const std::string lhs = to_string(apply(h, Word(uv, 4)));
        const std::string rhs =
            to_string(apply(h, Word(u, 4))) + to_string(apply(h, Word(v, 4)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the builtin morphism is synchronizing") {
    const SyncReport report = check_synchronizing(builtin_morphism_h());
    CHECK(report.synchronizing);
    CHECK(report.counterexamples.empty());
}

TEST_CASE("overlapping images are reported with their offsets") {
    const Morphism bad = Morphism::make(2, 2, {parse_word("00", 2), parse_word("01", 2)});
    const SyncReport report = check_synchronizing(bad);
    CHECK(!report.synchronizing);
    // image(0) = 00 sits at offset 1 inside image(00) = 0000.
    const SyncCounterexample expected{0, 0, 0, 1};
    CHECK(std::find(report.counterexamples.begin(), report.counterexamples.end(), expected) !=
          report.counterexamples.end());
}

TEST_CASE("single-image morphisms with distinct letters synchronize") {
    const Morphism m = Morphism::make(1, 2, {parse_word("01", 2)});
    CHECK(check_synchronizing(m).synchronizing);
}

TEST_CASE("aligned image occurrences identify their source letter") {
    const Morphism& h = builtin_morphism_h();
    const int width = *uniform_width(h);
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Letter> u(1 + rng() % 20);
        for (auto& a : u) a = Letter(rng() % 4);
        const Word image = apply(h, Word(u, 4));
        for (std::size_t j = 0; j < u.size(); ++j) {
            for (Letter c = 0; c < 4; ++c) {
                const auto& needle = h.images[c].letters;
                if (std::equal(needle.begin(), needle.end(),
                               image.letters.begin() + j * width)) {
                    CHECK(u[j] == c);
                }
            }
        }
    }
}

TEST_CASE("morphism text format round trip") {
    std::stringstream in(to_string(builtin_morphism_h()));
    const Morphism parsed = parse_morphism(in);
    CHECK(parsed.k_src == 4);
    CHECK(parsed.k_dst == 3);
    for (int a = 0; a < 4; ++a) {
        CHECK(parsed.images[a] == builtin_morphism_h().images[a]);
    }
}

TEST_CASE("morphism parse errors") {
    auto parse_text = [](const char* text) {
        std::stringstream in(text);
        return parse_morphism(in);
    };
    CHECK_THROWS_AS(parse_text(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_text("0 -> 01\n0 -> 10\n"), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(parse_text("0 -> 01\n2 -> 10\n"), std::invalid_argument);  // gap
    CHECK_THROWS_AS(parse_text("0 -> \n"), std::invalid_argument);             // empty image
    CHECK_THROWS_AS(parse_text("0 = 01\n"), std::invalid_argument);            // no arrow
}

TEST_CASE("construction check succeeds end to end") {
    SUBCASE("vacuous at n = 0") {
        const ConstructionReport report = verify_construction(0, Budget::unlimited());
        CHECK(report.success);
        CHECK(report.image_length == 0);
    }
    SUBCASE("single letter") {
        const ConstructionReport report = verify_construction(1, Budget::unlimited());
        CHECK(report.success);
        CHECK(report.image_length == 6);
    }
    SUBCASE("medium length") {
        const ConstructionReport report = verify_construction(80, Budget::unlimited());
        CHECK(report.success);
        CHECK(report.image_length == 480);
        CHECK(!report.witness.has_value());
        // The source must itself be free.
        CHECK(!scan(report.source, parse_spec("7/5+ @ 1")));
    }
}

TEST_CASE("small-case scan over the identity morphism is vacuous") {
    const Morphism identity =
        Morphism::make(2, 2, {parse_word("0", 2), parse_word("1", 2)});
    const SmallCaseScan result =
        small_case_scan(identity, parse_spec("2/1 @ 1"), 4);
    CHECK(result.complete);
    CHECK(result.source_length == 8);
    CHECK(result.source_words == 0);  // no square-free binary word is that long
    CHECK(result.violations.empty());
}

TEST_CASE("small-case scan of the builtin morphism at a small bound") {
    const SmallCaseScan result =
        small_case_scan(builtin_morphism_h(), parse_spec("7/5+ @ 1"), 4);
    CHECK(result.complete);
    CHECK(result.source_length == 3);
    CHECK(result.source_words == 24);  // three distinct letters, ordered freely
    CHECK(result.violations.empty());
}

TEST_CASE("small-case scan reports an inconclusive run when capped") {
    const SmallCaseScan result =
        small_case_scan(builtin_morphism_h(), parse_spec("7/5+ @ 1"), 40, 50);
    CHECK(!result.complete);
    CHECK(result.violations.empty());
}

TEST_CASE("repetition order transfer bound holds over the whole range") {
    // For |x| >= 50, |y| < |x| and |x'x'''| <= 10, the repetition uvu pulled
    // back from x y x has order 1 + (|x| - |x'x'''|) / (|x| + |y|) > 7/5;
    // integer form: 3|x| > 2|y| + 5|x'x'''|.
    for (int x = 50; x <= 400; ++x) {
        for (int s = 0; s <= 10; ++s) {
            // The worst y is the largest one.
            const int y = x - 1;
            CHECK(3 * x > 2 * y + 5 * s);
            CHECK(5 * (x - s) > 2 * (x + y));
        }
    }
}
