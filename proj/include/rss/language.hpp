#pragma once

#include "rss/image_index.hpp"
#include "rss/substitution.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace rss {

struct LanguageSlice {
    std::size_t length = 0;
    WordSet words;
    unsigned stabilisation_power = 0;
};

struct LanguageOptions {
    // words up to this length are answered from a precomputed closure
    std::size_t lookup_length = 16;
    std::size_t closure_cap = 30'000'000;
};

class Language {
public:
    explicit Language(RandomSubstitution sub, LanguageOptions options = {});
    Language(const Language&) = delete;
    Language& operator=(const Language&) = delete;

    const RandomSubstitution& substitution() const noexcept { return sub_; }
    const ImageIndex& index() const noexcept { return index_; }

    LanguageSlice slice(std::size_t n) const;
    bool is_legal(std::string_view u) const;

    // visits every legal word of length m at least once; long lengths may repeat words
    void for_each_word(std::size_t m, const std::function<void(std::string_view)>& visit) const;

    // a legal word of length m, drawn from a random realisation
    Word random_word(std::size_t m, std::mt19937_64& rng) const;

private:
    struct Closure {
        std::size_t n = 0;
        unsigned power = 0;
        std::unordered_set<Word> members;
    };
    struct Verdict {
        bool legal;
        bool tainted;
    };

    const Closure& closure(std::size_t n) const;
    const Closure* covering(std::size_t n) const;
    Verdict legal_by_desubstitution(const Word& u) const;
    bool desubstitute(const Word& u, std::size_t pos, Word& root, bool& tainted) const;
    Verdict root_legal(const Word& root) const;

    RandomSubstitution sub_;
    ImageIndex index_;
    LanguageOptions options_;

    mutable std::recursive_mutex mutex_;
    mutable std::map<std::size_t, Closure> closures_;
    mutable std::unordered_map<Word, bool> memo_;
    mutable std::unordered_set<Word> in_progress_;
};

std::shared_ptr<const Language> make_language(RandomSubstitution sub, LanguageOptions options = {});

std::optional<std::size_t> word_gap_bound(const Language& lang, std::string_view u, std::size_t m_max);
std::optional<std::size_t> letter_gap_bound(const Language& lang, char a, std::size_t m_max);

// least rotation of each primitive word w with |w| <= p_max and w^k_max legal
WordSet periodic_candidates(const Language& lang, std::size_t p_max, std::size_t k_max);

Word least_rotation(std::string_view w);
bool is_proper_power(std::string_view w);

} // namespace rss
