#include <doctest.h>

#include "rss/errors.hpp"
#include "support/oracles.hpp"

using namespace rss;
using oracle::bundled;

namespace {

// the XOR of a window's ends on {0,1}: a radius-1 code on the full shift
SlidingBlockCode xor_ends() {
    return symbol_code(2, 1, [](std::string_view w) { return symbol(symbol_index(w[0]) ^ symbol_index(w[2])); }, "xor");
}

Word rotate(const Word& w, std::size_t k) { return w.substr(k) + w.substr(0, k); }

} // namespace

TEST_CASE("identity and shifts") {
    const auto id = SlidingBlockCode::identity();
    CHECK(id.radius() == 0);
    CHECK(apply_central(id, "abba") == "abba");
    CHECK(apply_central(left_shift(2), "0110") == "10");
    CHECK(apply_central(right_shift(2), "0110") == "01");
    CHECK(apply_cyclic(left_shift(2), "0011") == "0110");
    CHECK(apply_cyclic(right_shift(2), "0011") == "1001");
    CHECK_THROWS_AS(apply_central(left_shift(2), "01"), TooShort);
    CHECK_THROWS_AS(left_shift(2)("0101"), TooShort);
}

TEST_CASE("symbols") {
    CHECK(symbol(0) == '0');
    CHECK(symbol(10) == 'a');
    CHECK(symbol_index('z') == 35);
    CHECK_THROWS_AS(symbol(36), InvalidArgument);
    const auto swap = symbol_permutation("10", "swap");
    CHECK(apply_central(swap, "0110") == "1001");
}

TEST_CASE("central and cyclic application agree with the local rule") {
    std::mt19937_64 rng(11);
    const auto code = xor_ends();
    for (int trial = 0; trial < 50; ++trial) {
        Word w;
        const std::size_t n = 3 + rng() % 20;
        for (std::size_t k = 0; k < n; ++k) w += symbol(rng() % 2);
        const Word out = apply_central(code, w);
        REQUIRE(out.size() == n - 2);
        for (std::size_t k = 0; k < out.size(); ++k) CHECK(out[k] == symbol(symbol_index(w[k]) ^ symbol_index(w[k + 2])));

        // cyclic application commutes with rotation
        const Word cyc = apply_cyclic(code, w);
        for (std::size_t s = 0; s < n; ++s) CHECK(apply_cyclic(code, rotate(w, s)) == rotate(cyc, s));
        // and restricted to the middle it is central application on the unrolled word
        CHECK(apply_central(code, w.substr(n - 1) + w + w.substr(0, 1)) == cyc);
    }
}

TEST_CASE("composition") {
    const auto code = xor_ends();
    const auto twice = compose(code, code);
    CHECK(twice.radius() == 2);
    CHECK(twice.provenance() == "xor . xor");
    for (const Word& w : oracle::all_words("01", 7))
        CHECK(apply_central(twice, w) == apply_central(code, apply_central(code, w)));
    const auto shifted = compose(left_shift(2), right_shift(2));
    for (const Word& w : oracle::all_words("01", 5)) CHECK(apply_central(shifted, w) == w.substr(2, 1));
}

TEST_CASE("materialise and table round trip") {
    const auto pd = make_language(bundled("period-doubling"));
    // a radius-1 rule that fills in the b of bab
    const auto rule = SlidingBlockCode::from_function(
        1, [](std::string_view w) { return w == "bab" ? 'a' : w[1]; }, "probe");
    const auto table = materialise(rule, *pd);
    REQUIRE(table.table() != nullptr);
    CHECK(table.table()->size() == pd->slice(3).words.size());
    for (const Word& w : pd->slice(3).words) CHECK(table(w) == rule(w));

    const std::string text = export_table(table);
    CHECK(text.rfind("aaa -> a\n", 0) == 0);
    const auto back = import_table(text);
    CHECK(export_table(back) == text);
    CHECK(back.radius() == 1);
    CHECK_THROWS_AS(back("bbb"), IllegalInput);

    CHECK_THROWS_AS(export_table(rule), InvalidArgument);
    CHECK_THROWS_AS(materialise(rule, *pd, 2), SizeLimit);
    CHECK_THROWS_AS(apply_central(table, *pd, "abbba"), IllegalInput);
    CHECK(apply_central(table, *pd, "abbab") == "bba");
}

TEST_CASE("table parsing errors") {
    CHECK_THROWS_AS(import_table(""), SyntaxError);
    CHECK_THROWS_AS(import_table("ab -> a\n"), SyntaxError);
    CHECK_THROWS_AS(import_table("aba -> a\nababa -> b\n"), SyntaxError);
    CHECK_THROWS_AS(import_table("aba -> a\naba -> b\n"), SyntaxError);
    CHECK_THROWS_AS(import_table("aba => a\n"), SyntaxError);
    CHECK_THROWS_AS(import_table("aba -> ab\n"), SyntaxError);
    CHECK(import_table("# comment\n\na -> b\n").radius() == 0);
    RuleTable bad{{"ab", 'a'}};
    CHECK_THROWS_AS(SlidingBlockCode::from_table(1, bad, "bad"), InvalidArgument);
}

TEST_CASE("memoised rules give the same outputs") {
    int calls = 0;
    const auto memo = SlidingBlockCode::from_function(
        1, [&](std::string_view w) { ++calls; return w[2]; }, "memo", true);
    CHECK(apply_central(memo, "0101010101") == "01010101");
    CHECK(calls == 2);
}
