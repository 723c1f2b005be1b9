#include <doctest.h>

#include "rss/errors.hpp"
#include "support/oracles.hpp"

using namespace rss;
using oracle::bundled;

namespace {

using Pair = std::pair<std::vector<Word>, Word>;

std::set<Pair> as_pairs(const std::vector<Decomposition>& ds) {
    std::set<Pair> out;
    for (const auto& d : ds) out.insert({d.pieces, d.root});
    return out;
}

template <class D>
std::set<Pair> as_pairs_of(const std::vector<D>& ds) {
    std::set<Pair> out;
    for (const auto& d : ds) out.insert({d.pieces, d.root});
    return out;
}

} // namespace

TEST_CASE("period doubling decompositions") {
    const auto pd = make_language(bundled("period-doubling"));

    CHECK(as_pairs(decompositions(*pd, "aab")) ==
          std::set<Pair>{{{"a", "ab"}, "aa"}, {{"a", "ab"}, "ba"}, {{"aa", "b"}, "ba"}});

    CHECK(as_pairs(decompositions(*pd, "aa")) == std::set<Pair>{{{"aa"}, "b"},
                                                               {{"a", "a"}, "aa"},
                                                               {{"a", "a"}, "ab"},
                                                               {{"a", "a"}, "ba"},
                                                               {{"a", "a"}, "bb"}});

    CHECK(as_pairs(decompositions(*pd, "bb")) == std::set<Pair>{{{"b", "b"}, "aa"}});

    const auto ababa = decompositions(*pd, "ababa");
    CHECK(as_pairs(ababa) == std::set<Pair>{{{"a", "ba", "ba"}, "aaa"},
                                            {{"a", "ba", "ba"}, "baa"},
                                            {{"ab", "ab", "a"}, "aaa"},
                                            {{"ab", "ab", "a"}, "aab"}});

    CHECK(as_pairs_of(induced_set(ababa, 1, 3)) == std::set<Pair>{{{"ba", "b"}, "aa"}, {{"b", "ab"}, "aa"}});

    const auto bbaba = decompositions(*pd, "bbaba");
    CHECK(as_pairs(bbaba) == std::set<Pair>{{{"b", "ba", "ba"}, "aaa"}});
    CHECK(as_pairs_of(induced_set(bbaba, 1, 3)) == std::set<Pair>{{{"ba", "b"}, "aa"}});
}

TEST_CASE("decompositions agree with realising every root") {
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = make_language(bundled(name));
        for (std::size_t n = 1; n <= 5; ++n)
            for (const Word& u : lang->slice(n).words) {
                CAPTURE(name);
                CAPTURE(u);
                CHECK(as_pairs(decompositions(*lang, u)) == oracle::brute_decompositions(*lang, u));
            }
    }
}

TEST_CASE("every decomposition spells the word and edges are consistent") {
    for (const auto& name : oracle::bundled_names()) {
        const auto lang = make_language(bundled(name));
        const auto& sub = lang->substitution();
        for (const Word& u : lang->slice(6).words)
            for (const auto& d : decompositions(*lang, u)) {
                CHECK(d.word() == u);
                CHECK(d.pieces.size() == d.root.size());
                CHECK(lang->is_legal(d.root));
                for (std::size_t k = 1; k + 1 < d.pieces.size(); ++k) {
                    const auto& images = sub.images(d.root[k]);
                    CHECK(std::binary_search(images.begin(), images.end(), d.pieces[k]));
                }
                const auto& first = sub.images(d.root.front());
                CHECK(d.first_full == std::binary_search(first.begin(), first.end(), d.pieces.front()));
            }
    }
}

TEST_CASE("induced decompositions") {
    const auto pd = make_language(bundled("period-doubling"));
    const auto ds = decompositions(*pd, "ababa");
    // the whole interval reproduces each decomposition
    CHECK(as_pairs_of(induced_set(ds, 0, 4)) == as_pairs(ds));
    for (std::size_t i = 0; i < 5; ++i) {
        const auto single = induced_set(ds, i, i);
        for (const auto& d : single) CHECK(d.word() == Word(1, "ababa"[i]));
    }
    // restriction is transitive
    for (const auto& d : ds) {
        const auto outer = induce(d, 1, 4);
        const auto inner = induce(outer, 1, 2);
        const auto direct = induce(d, 2, 3);
        CHECK(inner.pieces == direct.pieces);
        CHECK(inner.root == direct.root);
    }
    CHECK_THROWS_AS(induce(ds.front(), 3, 2), IndexOutOfRange);
    CHECK_THROWS_AS(induce(ds.front(), 0, 5), IndexOutOfRange);
    CHECK_THROWS_AS(decompositions(*pd, "bbb"), NotLegal);
}

TEST_CASE("exact roots") {
    const auto pd = make_language(bundled("period-doubling"));
    CHECK(exact_roots(*pd, "abba") == WordSet{"aa"});
    CHECK(exact_roots(*pd, "bb").empty());
    CHECK(exact_roots(*pd, "aaab") == WordSet{"ba"});
    // brute: realisations of every legal root of length 3
    std::map<Word, std::set<Word>> roots_of;
    for (const Word& v : pd->slice(3).words)
        for (const Word& w : rss::apply(pd->substitution(), v)) roots_of[w].insert(v);
    for (const auto& [w, roots] : roots_of) CHECK(exact_roots(*pd, w) == WordSet(roots.begin(), roots.end()));
}

TEST_CASE("formatting") {
    const auto pd = make_language(bundled("period-doubling"));
    const auto ds = decompositions(*pd, "aab");
    std::vector<std::string> lines;
    for (const auto& d : ds) lines.push_back(format(d));
    CHECK(lines == std::vector<std::string>{"[a|ab] root=aa edges=suffix,full", "[a|ab] root=ba edges=suffix,full",
                                            "[aa|b] root=ba edges=full,prefix"});
}
