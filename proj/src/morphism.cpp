#include "rep/morphism.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rep/checker.hpp"

namespace rep {

Morphism Morphism::make(int k_src, int k_dst, std::vector<Word> images) {
    if (k_src < 1 || k_src > kMaxAlphabetSize || k_dst < 1 || k_dst > kMaxAlphabetSize) {
        throw std::invalid_argument("morphism alphabet sizes must be in [1, " +
                                    std::to_string(kMaxAlphabetSize) + "]");
    }
    if (int(images.size()) != k_src) {
        throw std::invalid_argument("morphism needs exactly one image per source letter");
    }
    for (const Word& im : images) {
        if (im.empty()) throw std::invalid_argument("morphism images must be nonempty");
        for (Letter a : im.letters) {
            if (a >= k_dst) throw std::invalid_argument("image letter outside target alphabet");
        }
    }
    return Morphism{k_src, k_dst, std::move(images)};
}

Word apply(const Morphism& m, const Word& w) {
    std::vector<Letter> out;
    std::size_t total = 0;
    for (Letter a : w.letters) {
        if (a >= m.k_src) throw std::invalid_argument("word letter outside source alphabet");
        total += m.images[a].size();
    }
    out.reserve(total);
    for (Letter a : w.letters) {
        const auto& image = m.images[a].letters;
        out.insert(out.end(), image.begin(), image.end());
    }
    return Word(std::move(out), m.k_dst);
}

std::optional<int> uniform_width(const Morphism& m) {
    const int width = int(m.images.front().size());
    for (const Word& im : m.images) {
        if (int(im.size()) != width) return std::nullopt;
    }
    return width;
}

SyncReport check_synchronizing(const Morphism& m) {
    const auto width = uniform_width(m);
    if (!width) {
        throw std::invalid_argument("synchronization check requires a uniform morphism");
    }
    const int w = *width;

    SyncReport report;
    for (int a = 0; a < m.k_src; ++a) {
        for (int b = 0; b < m.k_src; ++b) {
            std::vector<Letter> pair_image = m.images[a].letters;
            pair_image.insert(pair_image.end(), m.images[b].letters.begin(),
                              m.images[b].letters.end());
            for (int c = 0; c < m.k_src; ++c) {
                const auto& needle = m.images[c].letters;
                for (int off = 0; off <= w; ++off) {
                    if (!std::equal(needle.begin(), needle.end(), pair_image.begin() + off)) {
                        continue;
                    }
                    const bool aligned_left = off == 0 && a == c;
                    const bool aligned_right = off == w && b == c;
                    if (!aligned_left && !aligned_right) {
                        report.counterexamples.push_back(
                            SyncCounterexample{Letter(a), Letter(b), Letter(c), off});
                    }
                }
            }
        }
    }
    report.synchronizing = report.counterexamples.empty();
    return report;
}

const Morphism& builtin_morphism_h() {
    static const Morphism h = Morphism::make(
        4, 3,
        {parse_word("000211", 3), parse_word("101221", 3), parse_word("020011", 3),
         parse_word("120221", 3)});
    return h;
}

Morphism parse_morphism(std::istream& in) {
    std::vector<std::pair<Letter, std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        // Trim and skip blanks.
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string body = line.substr(first, last - first + 1);

        const auto arrow = body.find("->");
        if (arrow == std::string::npos) {
            throw std::invalid_argument("morphism line without '->': '" + body + "'");
        }
        std::string lhs = body.substr(0, arrow);
        std::string rhs = body.substr(arrow + 2);
        while (!lhs.empty() && (lhs.back() == ' ' || lhs.back() == '\t')) lhs.pop_back();
        while (!rhs.empty() && (rhs.front() == ' ' || rhs.front() == '\t')) rhs.erase(0, 1);
        if (lhs.size() != 1) {
            throw std::invalid_argument("morphism line must map a single letter: '" + body + "'");
        }
        const auto letter = from_digit(lhs[0]);
        if (!letter || rhs.empty()) {
            throw std::invalid_argument("bad morphism line: '" + body + "'");
        }
        lines.emplace_back(*letter, rhs);
    }
    if (lines.empty()) {
        throw std::invalid_argument("morphism description is empty");
    }

    const int k_src = int(lines.size());
    std::vector<std::string> by_letter(k_src);
    std::vector<bool> seen(k_src, false);
    for (const auto& [letter, image] : lines) {
        if (letter >= k_src || seen[letter]) {
            throw std::invalid_argument("morphism lines must cover letters 0.." +
                                        std::to_string(k_src - 1) + " exactly once");
        }
        seen[letter] = true;
        by_letter[letter] = image;
    }

    int k_dst = 1;
    std::vector<Word> images;
    images.reserve(k_src);
    for (const std::string& text : by_letter) {
        Word image = parse_word(text, kMaxAlphabetSize);
        for (Letter a : image.letters) k_dst = std::max(k_dst, int(a) + 1);
        images.push_back(std::move(image));
    }
    for (Word& image : images) image.alphabet_size = k_dst;
    return Morphism::make(k_src, k_dst, std::move(images));
}

Morphism load_morphism(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open morphism file " + path);
    return parse_morphism(in);
}

std::string to_string(const Morphism& m) {
    std::string out;
    for (int a = 0; a < m.k_src; ++a) {
        out += to_digit(Letter(a));
        out += " -> ";
        out += to_string(m.images[a]);
        out += "\n";
    }
    return out;
}

ConstructionReport verify_construction(int n, Budget budget) {
    if (n < 0) throw std::invalid_argument("source length must be >= 0");

    ConstructionReport report;
    report.n = n;
    report.source = Word({}, 4);
    if (n == 0) {
        report.success = true;  // nothing to map, nothing to check
        return report;
    }

    const FreenessSpec source_spec = parse_spec("7/5+ @ 1");
    const GrowReport grown = grow(4, source_spec, n, budget);
    report.nodes_visited = grown.nodes_visited;
    if (grown.exceeded()) {
        report.budget_exceeded = true;
        return report;
    }
    if (grown.exhausted()) {
        report.source_exhausted = true;
        return report;
    }

    report.source = grown.found()->word;
    const Word image = apply(builtin_morphism_h(), report.source);
    report.image_length = image.size();

    IncrementalChecker checker(3, parse_spec("3/2+ @ 2"));
    for (Letter a : image.letters) {
        if (auto witness = checker.push(a)) {
            report.witness = witness;
            return report;
        }
    }
    report.success = true;
    return report;
}

SmallCaseScan small_case_scan(const Morphism& m, const FreenessSpec& src_spec, int max_root,
                              std::uint64_t node_cap) {
    const auto width = uniform_width(m);
    if (!width) {
        throw std::invalid_argument("small-case scan requires a uniform morphism");
    }
    if (max_root < 2) {
        throw std::invalid_argument("max_root must be >= 2");
    }
    if (node_cap == 0) {
        throw std::invalid_argument("node cap must be positive");
    }

    SmallCaseScan result;
    // Every image factor shorter than 3*max_root/2 appears inside the image
    // of some free word of this length.
    result.source_length = int((3 * std::int64_t(max_root) + 2 * *width - 1) / (2 * *width)) + 2;

    const FreenessSpec image_spec = FreenessSpec::make(Exponent::make(3, 2), 2, Mode::gt);
    const bool any_period = max_root > image_spec.min_period;

    // Plain DFS over all source words (every first letter: the scan is not
    // invariant under renaming once the morphism is applied).
    IncrementalChecker chk(m.k_src, src_spec);
    std::optional<Witness> witness = chk.push(0);
    std::uint64_t nodes = 1;
    const int k = m.k_src;
    for (;;) {
        if (nodes > node_cap) {
            result.nodes_visited = nodes;
            return result;  // inconclusive: complete stays false
        }

        bool at_target = false;
        if (!witness && int(chk.size()) == result.source_length) {
            at_target = true;
            ++result.source_words;
            if (any_period) {
                const Word image = apply(m, chk.word());
                IncrementalChecker image_chk(m.k_dst, image_spec, max_root);
                for (Letter a : image.letters) {
                    if (auto bad = image_chk.push(a)) {
                        result.violations.emplace_back(chk.word(), *bad);
                        break;
                    }
                }
            }
        }

        if (!witness && !at_target) {
            witness = chk.push(0);
            ++nodes;
            continue;
        }
        // Leaf or fully scanned word: advance in lex order.
        while (!chk.empty() && chk.letters().back() == Letter(k - 1)) {
            chk.pop();
        }
        if (chk.empty()) break;
        const Letter next = Letter(chk.letters().back() + 1);
        chk.pop();
        witness = chk.push(next);
        ++nodes;
    }

    result.complete = true;
    result.nodes_visited = nodes;
    return result;
}

}  // namespace rep
