#include <doctest.h>

#include "rss/errors.hpp"
#include "support/oracles.hpp"

using namespace rss;
using oracle::bundled;

namespace {

std::shared_ptr<const Language> lang_of(const std::string& name) { return make_language(bundled(name)); }

WordSet visited(const Language& lang, std::size_t m) {
    std::set<Word> out;
    lang.for_each_word(m, [&](std::string_view w) { out.emplace(w); });
    return {out.begin(), out.end()};
}

} // namespace

TEST_CASE("closure agrees with subwords of deep realisations") {
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = lang_of(name);
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto slice = lang->slice(n);
            CAPTURE(name);
            CAPTURE(n);
            CHECK(slice.words == oracle::brute_language(lang->substitution(), n, slice.stabilisation_power + 2));
        }
    }
}

TEST_CASE("slice members are legal and non-members are not") {
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = lang_of(name);
        const auto& sub = lang->substitution();
        for (std::size_t n = 1; n <= 5; ++n) {
            const auto words = lang->slice(n).words;
            const std::set<Word> members(words.begin(), words.end());
            for (const Word& w : oracle::all_words(sub.alphabet(), n)) CHECK(lang->is_legal(w) == members.count(w) > 0);
        }
    }
}

TEST_CASE("legality is factor closed and extendable") {
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = lang_of(name);
        const auto& alphabet = lang->substitution().alphabet();
        for (const Word& w : lang->slice(7).words) {
            CHECK(lang->is_legal(w.substr(1)));
            CHECK(lang->is_legal(w.substr(0, w.size() - 1)));
            bool left = false, right = false;
            for (char c : alphabet) {
                left = left || lang->is_legal(Word(1, c) + w);
                right = right || lang->is_legal(w + c);
            }
            CHECK(left);
            CHECK(right);
        }
    }
}

TEST_CASE("long words decided by desubstitution agree with the closure") {
    // lookup_length 4 forces the desubstitution route from length 5 on
    for (const auto& name : oracle::bundled_names()) {
        const auto fast = make_language(bundled(name), LanguageOptions{.lookup_length = 4});
        const auto reference = lang_of(name);
        for (std::size_t n = 5; n <= 9; ++n)
            for (const Word& w : oracle::all_words(reference->substitution().alphabet(), n))
                CHECK(fast->is_legal(w) == reference->is_legal(w));
    }
}

TEST_CASE("word enumeration visits exactly the slice") {
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = lang_of(name);
        for (std::size_t m = 1; m <= 10; ++m) CHECK(visited(*lang, m) == lang->slice(m).words);
    }
    const auto pd = lang_of("period-doubling");
    const auto long_words = visited(*pd, 24);
    CHECK(long_words.size() > 1000);
    for (std::size_t k = 0; k < long_words.size(); k += 97) CHECK(pd->is_legal(long_words[k]));
}

TEST_CASE("random words are legal") {
    std::mt19937_64 rng(3);
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = lang_of(name);
        for (std::size_t m : {1, 5, 17, 40}) {
            const Word w = lang->random_word(m, rng);
            CHECK(w.size() == m);
            CHECK(lang->is_legal(w));
        }
    }
}

TEST_CASE("legality facts") {
    const auto pd = lang_of("period-doubling");
    CHECK_FALSE(pd->is_legal("aaaaaaaaa"));
    CHECK(pd->is_legal("aaaaaa"));
    CHECK_FALSE(pd->is_legal("aaaaaaa"));
    CHECK(pd->is_legal("bb"));
    CHECK(pd->is_legal("abba"));
    CHECK_FALSE(pd->is_legal("bbb"));
    CHECK_THROWS_AS(pd->is_legal("abc"), UnknownLetter);
    CHECK_THROWS_AS(pd->is_legal(""), InvalidArgument);

    const auto sf = lang_of("square-fibonacci");
    CHECK_FALSE(sf->is_legal("bbb"));
    CHECK(sf->is_legal("bb"));
}

TEST_CASE("gap bounds match the smallest length forced to contain the word") {
    auto brute = [](const Language& lang, const Word& u, std::size_t m_max) -> std::optional<std::size_t> {
        for (std::size_t m = 1; m <= m_max; ++m) {
            bool all = true;
            for (const Word& w : lang.slice(m).words) all = all && w.find(u) != Word::npos;
            if (all) return m;
        }
        return std::nullopt;
    };
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = lang_of(name);
        const auto& alphabet = lang->substitution().alphabet();
        for (std::size_t len = 1; len <= 2; ++len)
            for (const Word& u : oracle::all_words(alphabet, len)) {
                CAPTURE(name);
                CAPTURE(u);
                CHECK(word_gap_bound(*lang, u, 14) == brute(*lang, u, 14));
            }
    }

    const auto abb = lang_of("abb-bab");
    const auto bound = word_gap_bound(*abb, "aa", 24);
    REQUIRE(bound.has_value());
    CHECK(*bound <= 24);
    for (const Word& w : abb->slice(24).words) CHECK(w.find("aa") != Word::npos);

    // bb is avoided forever in period doubling by the a-images alone
    CHECK_FALSE(word_gap_bound(*lang_of("period-doubling"), "bb", 30).has_value());
    CHECK_THROWS_AS(word_gap_bound(*abb, "", 4), InvalidArgument);
}

TEST_CASE("periodic probes") {
    const auto pd = lang_of("period-doubling");
    const auto candidates = periodic_candidates(*pd, 3, 8);
    CHECK(std::find(candidates.begin(), candidates.end(), "aab") != candidates.end());
    Word power;
    for (int k = 0; k < 8; ++k) power += "aab";
    CHECK(pd->is_legal(power));

    const auto sf = lang_of("square-fibonacci");
    CHECK(periodic_candidates(*sf, 4, 8).empty());

    // brute agreement for period doubling
    std::set<Word> expected;
    for (std::size_t p = 1; p <= 4; ++p)
        for (const Word& w : oracle::all_words("ab", p)) {
            if (is_proper_power(w) || least_rotation(w) != w) continue;
            Word rep;
            for (int k = 0; k < 6; ++k) rep += w;
            if (pd->is_legal(rep)) expected.insert(w);
        }
    CHECK(periodic_candidates(*pd, 4, 6) == WordSet(expected.begin(), expected.end()));
}

TEST_CASE("rotation helpers") {
    CHECK(least_rotation("baa") == "aab");
    CHECK(least_rotation("a") == "a");
    CHECK(is_proper_power("abab"));
    CHECK_FALSE(is_proper_power("aab"));
    CHECK_FALSE(is_proper_power("a"));
}
