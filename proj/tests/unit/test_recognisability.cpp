#include <doctest.h>

#include "rss/errors.hpp"
#include "support/oracles.hpp"

using namespace rss;
using oracle::bundled;

namespace {

// distinct induced decompositions of the centre u inside w, from brute decompositions of w
std::size_t brute_induced_count(const Language& lang, const Word& w, std::size_t left, std::size_t len) {
    std::set<std::pair<std::vector<Word>, Word>> induced;
    for (const auto& [pieces, root] : oracle::brute_decompositions(lang, w)) {
        Decomposition d{pieces, root};
        const auto i = induce(d, left, left + len - 1);
        induced.insert({i.pieces, i.root});
    }
    return induced.size();
}

std::optional<std::size_t> brute_radius(const Language& lang, const Word& u, std::size_t n_max) {
    for (std::size_t n = 0; n <= n_max; ++n) {
        bool unique = true;
        for (const Word& w : lang.slice(u.size() + 2 * n).words)
            if (w.compare(n, u.size(), u) == 0 && brute_induced_count(lang, w, n, u.size()) > 1) {
                unique = false;
                break;
            }
        if (unique) return n;
    }
    return std::nullopt;
}

// the two decompositions exist and disagree on the subject, checked without the library's decomposer
bool brute_valid_witness(const Language& lang, const Word& subject, const Ambiguity& a) {
    if (a.extension.compare(a.left, subject.size(), subject) != 0 || !lang.is_legal(a.extension)) return false;
    const auto all = oracle::brute_decompositions(lang, a.extension);
    if (!all.count({a.first.pieces, a.first.root}) || !all.count({a.second.pieces, a.second.root})) return false;
    const std::size_t last = a.left + subject.size() - 1;
    return !(induce(a.first, a.left, last) == induce(a.second, a.left, last));
}

} // namespace

TEST_CASE("word radii agree with brute force") {
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = make_language(bundled(name));
        const std::size_t n_max = lang->substitution().min_image_length() == 1 ? 1 : 2;
        for (std::size_t len = 1; len <= 2; ++len)
            for (const Word& u : lang->slice(len).words) {
                CAPTURE(name);
                CAPTURE(u);
                const auto v = word_radius(*lang, u, n_max);
                CHECK(v.radius == brute_radius(*lang, u, n_max));
                if (v.radius) {
                    CHECK(check_radius(*lang, u, *v.radius));
                    if (*v.radius > 0) CHECK_FALSE(check_radius(*lang, u, *v.radius - 1));
                } else {
                    REQUIRE(v.witness.has_value());
                    CHECK(brute_valid_witness(*lang, u, *v.witness));
                }
            }
    }
}

TEST_CASE("period doubling: bb is recognisable at once, aa never") {
    const auto pd = make_language(bundled("period-doubling"));
    const auto bb = word_radius(*pd, "bb", 4);
    REQUIRE(bb.certified());
    CHECK(*bb.radius == 0);

    const auto aa = word_radius(*pd, "aa", 6);
    CHECK_FALSE(aa.certified());
    REQUIRE(aa.witness.has_value());
    CHECK(aa.witness->extension.size() == 14);
    CHECK(is_valid_witness(*pd, "aa", *aa.witness));
    CHECK(brute_valid_witness(*pd, "aa", *aa.witness));

    // the periodic family (aabaab)^n hides the cut of its central aa
    const Word family = "aabaabaabaabaa";
    REQUIRE(pd->is_legal(family));
    CHECK(induced_set(*pd, family, 6, 7).size() > 1);

    // a tampered witness is rejected
    Ambiguity tampered = *aa.witness;
    tampered.second = tampered.first;
    CHECK_FALSE(is_valid_witness(*pd, "aa", tampered));
    CHECK_THROWS_AS(word_radius(*pd, "bbb", 2), NotLegal);
}

TEST_CASE("local recognisability of the bundled substitutions") {
    const auto sf = make_language(bundled("square-fibonacci"));
    const auto sf_verdict = local_radius(*sf, 8);
    REQUIRE(sf_verdict.certified());
    CHECK(*sf_verdict.radius <= 8);
    CHECK(sf_verdict.table.size() == sf->slice(2).words.size());

    const auto ex5 = make_language(bundled("example5"));
    const auto ex5_verdict = local_radius(*ex5, 8);
    REQUIRE(ex5_verdict.certified());
    CHECK(*ex5_verdict.radius <= 8);

    const auto abb = make_language(bundled("abb-bab"));
    const auto abb_verdict = is_recognisable(*abb, 12);
    REQUIRE(abb_verdict.certified());
    CHECK(*abb_verdict.radius == 10);
    CHECK_FALSE(is_recognisable(*abb, 9).certified());

    for (const char* name : {"period-doubling", "abaa-aaba"}) {
        const auto lang = make_language(bundled(name));
        const auto verdict = local_radius(*lang, 6);
        CHECK_FALSE(verdict.certified());
        REQUIRE(verdict.witness.has_value());
        bool found = false;
        for (const auto& entry : verdict.table)
            if (!entry.radius && verdict.witness->extension.find(entry.word) != Word::npos &&
                is_valid_witness(*lang, entry.word, *verdict.witness))
                found = true;
        CHECK(found);
    }

    const auto rf = make_language(bundled("random-fibonacci"));
    CHECK_FALSE(local_radius(*rf, 4).certified());
}

TEST_CASE("the length-two reduction agrees with scanning longer words") {
    for (const char* name : {"square-fibonacci", "abb-bab", "period-doubling"}) {
        const auto lang = make_language(bundled(name));
        const auto reduced = local_radius(*lang, 5);
        const auto full = local_radius_full_scan(*lang, 5, 4);
        CHECK(reduced.certified() == full.certified());
    }
}

TEST_CASE("powers of constant-length substitutions") {
    const auto pd = bundled("period-doubling");
    const auto found = power_recognisable_word(pd, 1, 4);
    REQUIRE(found.has_value());
    CHECK(found->radius == 0);
    const auto pd_lang = make_language(pd);
    CHECK(word_radius(*pd_lang, found->word, 0).radius == 0u);

    const auto found2 = power_recognisable_word(pd, 2, 4);
    REQUIRE(found2.has_value());
    const Language square(power(pd, 2));
    CHECK(word_radius(square, found2->word, found2->radius).radius == found2->radius);

    CHECK_THROWS_AS(power_recognisable_word(bundled("random-fibonacci"), 1, 2), NotConstantLength);

    const auto ext = extend_recognisable(*pd_lang, "bb", 0, "abba", 1);
    CHECK(ext.context_bound == 0);
    REQUIRE(ext.certified.has_value());
    CHECK(*ext.certified == 0);
    CHECK_THROWS_AS(extend_recognisable(*pd_lang, "bb", 0, "abba", 0), InvalidArgument);
}
