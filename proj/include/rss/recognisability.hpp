#pragma once

#include "rss/decomposition.hpp"

#include <optional>
#include <utility>

namespace rss {

// a legal extension of the subject together with two of its decompositions
// that induce different decompositions on the subject
struct Ambiguity {
    Word extension;
    std::size_t left = 0; // subject occupies [left, left + |subject|)
    Decomposition first, second;
};

struct RadiusEntry {
    Word word;
    std::optional<std::size_t> radius;
};

struct RecognisabilityVerdict {
    Word subject; // empty when the verdict is about the whole substitution
    std::optional<std::size_t> radius;
    std::size_t bound = 0;
    std::optional<Ambiguity> witness;
    std::vector<RadiusEntry> table;

    bool certified() const noexcept { return radius.has_value(); }
};

inline constexpr std::size_t default_extension_cap = 2'000'000;

RecognisabilityVerdict word_radius(const Language& lang, std::string_view u, std::size_t n_max,
                                   std::size_t cap = default_extension_cap);

// exhaustive check of one radius over all legal (n, n)-extensions
bool check_radius(const Language& lang, std::string_view u, std::size_t n);

// does the ambiguity really show two different induced decompositions?
bool is_valid_witness(const Language& lang, std::string_view subject, const Ambiguity& a);

RecognisabilityVerdict local_radius(const Language& lang, std::size_t n_max);

// every legal word up to max_length, without the length-2 reduction
RecognisabilityVerdict local_radius_full_scan(const Language& lang, std::size_t n_max, std::size_t max_length);

RecognisabilityVerdict is_recognisable(const Language& lang, std::size_t n_max);

struct RecognisableWord {
    Word word;
    std::size_t radius;
};

std::optional<RecognisableWord> power_recognisable_word(const RandomSubstitution& sub, unsigned p, std::size_t n_max,
                                                        std::size_t max_length = 8);

struct ExtensionRadius {
    std::size_t context_bound = 0;
    std::optional<std::size_t> certified;
};

// w carries u at offset `left`; u is recognisable with radius n
ExtensionRadius extend_recognisable(const Language& lang, std::string_view u, std::size_t n, std::string_view w,
                                    std::size_t left);

} // namespace rss
