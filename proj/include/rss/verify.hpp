#pragma once

#include "rss/block_code.hpp"

#include <optional>
#include <span>

namespace rss {

struct Counterexample {
    Word input;
    Word expected; // empty when the complaint is illegality of `actual`
    Word actual;
};

struct Verdict {
    bool pass = true;
    std::size_t checked = 0; // windows or words examined
    std::optional<Counterexample> witness;

    explicit operator bool() const noexcept { return pass; }
};

// central output of every legal word of length 2r + l_max is legal
Verdict verify_endomorphism(const SlidingBlockCode& code, const Language& lang, std::size_t l_max);

// each output letter depends on one window, so all legal windows of the
// combined radius decide the laws below for every length
Verdict verify_inverse(const SlidingBlockCode& f, const SlidingBlockCode& g, const Language& lang);
Verdict verify_equal(const SlidingBlockCode& f, const SlidingBlockCode& g, const Language& lang);
Verdict verify_commute(const SlidingBlockCode& f, const SlidingBlockCode& g, const Language& lang);
Verdict verify_identity(const SlidingBlockCode& f, const Language& lang);

// the same laws on the central windows of given legal words
Verdict sample_endomorphism(const SlidingBlockCode& code, const Language& lang, std::span<const Word> words);
Verdict sample_inverse(const SlidingBlockCode& f, const SlidingBlockCode& g, std::span<const Word> words);
Verdict sample_equal(const SlidingBlockCode& f, const SlidingBlockCode& g, std::span<const Word> words);
Verdict sample_identity(const SlidingBlockCode& f, std::span<const Word> words);

// a legal window on which the code moves the centre letter
std::optional<Word> nontrivial_witness(const SlidingBlockCode& code, const Language& lang);
std::optional<Word> nontrivial_witness(const SlidingBlockCode& code, std::span<const Word> words);

// f applied k times
SlidingBlockCode iterate(const SlidingBlockCode& f, unsigned k);

} // namespace rss
