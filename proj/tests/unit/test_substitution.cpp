#include <doctest.h>

#include "rss/errors.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace rss;
using oracle::bundled;

namespace {

// the level-p image set of a word, by applying one level at a time to every member
WordSet iterate_by_hand(const RandomSubstitution& sub, const Word& u, unsigned p) {
    std::set<Word> current{u};
    for (unsigned k = 0; k < p; ++k) {
        std::set<Word> next;
        for (const Word& w : current) {
            std::set<Word> partial{""};
            for (char c : w) {
                std::set<Word> grown;
                for (const Word& x : partial)
                    for (const Word& y : sub.images(c)) grown.insert(x + y);
                partial = std::move(grown);
            }
            next.insert(partial.begin(), partial.end());
        }
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}

} // namespace

TEST_CASE("random Fibonacci iterates") {
    const auto rf = bundled("random-fibonacci");
    CHECK(rss::apply(rf, "a") == WordSet{"ab", "ba"});
    CHECK(power(rf, 2).images('a') == WordSet{"aab", "aba", "baa"});
    CHECK(power(rf, 3).images('a') ==
          WordSet{"aabab", "aabba", "abaab", "ababa", "abbaa", "baaab", "baaba", "babaa"});
}

TEST_CASE("power agrees with level-by-level iteration") {
    for (const auto& name : oracle::bundled_names()) {
        const auto sub = bundled(name);
        const unsigned deepest = sub.max_image_length() <= 3 ? 3 : 2;
        for (unsigned p = 1; p <= deepest; ++p)
            for (char c : sub.alphabet()) CHECK(power(sub, p).images(c) == iterate_by_hand(sub, Word(1, c), p));
    }
}

TEST_CASE("apply on words is the concatenation of letter images") {
    const auto pd = bundled("period-doubling");
    CHECK(rss::apply(pd, "ab") == WordSet{"abaa", "baaa"});
    CHECK(rss::apply(pd, "aa").size() == 4);
    CHECK(rss::apply(pd, "bbb") == WordSet{"aaaaaa"});
    CHECK_THROWS_AS(rss::apply(pd, ""), InvalidArgument);
    CHECK_THROWS_AS(rss::apply(pd, "ac"), UnknownLetter);
    CHECK_THROWS_AS(rss::apply(pd, "aaaaaaaaaaaaaaaaaaaaa", 1000), SizeLimit);
}

TEST_CASE("spec parsing") {
    const auto sub = parse_substitution("alphabet: a b\n# note\n\na -> ba | ab | ab\nb -> a\n");
    CHECK(sub.alphabet() == "ab");
    CHECK(sub.images('a') == WordSet{"ab", "ba"});
    CHECK(parse_substitution(sub.to_spec()) == sub);
    CHECK(sub == bundled("random-fibonacci"));

    CHECK_THROWS_AS(parse_substitution("a -> ab\n"), SyntaxError);
    CHECK_THROWS_AS(parse_substitution("alphabet: a b\na -> ab\n"), SyntaxError);
    CHECK_THROWS_AS(parse_substitution("alphabet: a b\na -> ab\nb -> ac\n"), UnknownLetter);
    CHECK_THROWS_AS(parse_substitution("alphabet: a b\na -> ab\nb -> a\nc -> a\n"), UnknownLetter);
    CHECK_THROWS_AS(parse_substitution("alphabet: a b\na -> ab |\nb -> a\n"), EmptyImage);
    CHECK_THROWS_AS(parse_substitution("alphabet: a b\na -> ab\na -> b\nb -> a\n"), SyntaxError);
    CHECK_THROWS_AS(parse_substitution("alphabet: a a\na -> a\n"), SyntaxError);
    CHECK_THROWS_AS(parse_substitution("alphabet: ab\na -> a\n"), SyntaxError);
    CHECK_THROWS_AS(load_substitution("/nonexistent/x.sub"), InvalidArgument);
}

TEST_CASE("round trip of every bundled spec") {
    for (const auto& name : oracle::bundled_names()) {
        const auto sub = bundled(name);
        CHECK(parse_substitution(sub.to_spec()) == sub);
    }
}

TEST_CASE("property table") {
    const auto pd = bundled("period-doubling");
    CHECK(is_compatible(pd).compatible);
    CHECK(is_primitive(pd).primitive);
    CHECK(is_constant_length(pd) == 2u);
    CHECK(has_disjoint_letter_images(pd).disjoint);

    const auto rf = bundled("random-fibonacci");
    CHECK(is_compatible(rf).compatible);
    CHECK(is_primitive(rf).primitive);
    CHECK_FALSE(is_constant_length(rf).has_value());
    CHECK(has_disjoint_letter_images(rf).disjoint);

    const auto ab = bundled("abaa-aaba");
    CHECK(is_constant_length(ab) == 4u);
    CHECK(is_primitive(ab).primitive);
    CHECK(is_compatible(ab).compatible);

    const auto bad = parse_substitution("alphabet: a b\na -> ab | bba\nb -> a\n");
    const auto report = is_compatible(bad);
    CHECK_FALSE(report.compatible);
    CHECK(report.letter == 'a');

    const auto shared = parse_substitution("alphabet: a b\na -> ab | ba\nb -> ab\n");
    CHECK_FALSE(has_disjoint_letter_images(shared).disjoint);
    CHECK(has_disjoint_letter_images(shared).shared == "ab");

    const auto reducible = parse_substitution("alphabet: a b\na -> aa\nb -> ab\n");
    CHECK_FALSE(is_primitive(reducible).primitive);
}

TEST_CASE("matrix and abelianisation") {
    const auto pd = bundled("period-doubling");
    CHECK(substitution_matrix(pd) == Matrix{{1, 2}, {1, 0}});
    CHECK(abelianise(pd, "abba") == AbelianVector{2, 2});
    for (const auto& name : oracle::bundled_names()) {
        const auto sub = bundled(name);
        const Matrix m = substitution_matrix(sub);
        for (std::size_t j = 0; j < sub.size(); ++j)
            for (const Word& w : sub.images_at(j)) {
                const auto v = abelianise(sub, w);
                for (std::size_t i = 0; i < sub.size(); ++i) CHECK(v[i] == m[i][j]);
            }
    }
}

TEST_CASE("primitivity routes agree") {
    for (const auto& name : oracle::bundled_names()) {
        const auto sub = bundled(name);
        const auto by_matrix = is_primitive_by_matrix(sub);
        const auto by_occurrence = is_primitive_by_occurrence(sub);
        CHECK(by_matrix.primitive == by_occurrence.primitive);
        REQUIRE(by_occurrence.power.has_value());
        // every letter occurs in every image at that power
        const auto level = power(sub, *by_occurrence.power);
        for (char c : sub.alphabet())
            for (const Word& w : level.images(c))
                for (char d : sub.alphabet()) CHECK(w.find(d) != Word::npos);
    }
}

TEST_CASE("random substitutions are compatible under powers") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::map<char, std::vector<Word>> rules;
        for (char c : {'a', 'b'}) {
            const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
            Word base;
            for (std::size_t k = 0; k < len; ++k) base += "ab"[rng() % 2];
            std::vector<Word> images{base};
            Word shuffled = base;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            images.push_back(shuffled);
            rules[c] = images;
        }
        const RandomSubstitution sub("ab", rules);
        REQUIRE(is_compatible(sub).compatible);
        CHECK(is_compatible(power(sub, 2)).compatible);
        // the matrix of the square is the square of the matrix
        const Matrix m = substitution_matrix(sub), m2 = substitution_matrix(power(sub, 2));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(m2[i][j] == m[i][0] * m[0][j] + m[i][1] * m[1][j]);
    }
}
