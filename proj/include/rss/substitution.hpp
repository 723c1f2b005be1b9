#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rss {

using Word = std::string;
using WordSet = std::vector<Word>; // sorted, deduplicated

inline constexpr std::size_t default_image_cap = 1'000'000;

class RandomSubstitution {
public:
    // alphabet order is preserved; image sets are deduplicated and sorted
    RandomSubstitution(std::string alphabet, std::map<char, std::vector<Word>> rules);

    const std::string& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return alphabet_.size(); }
    bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }
    std::size_t index_of(char c) const;

    const WordSet& images(char c) const { return images_[index_of(c)]; }
    const WordSet& images_at(std::size_t i) const { return images_[i]; }

    std::size_t min_image_length() const noexcept { return min_len_; }
    std::size_t max_image_length() const noexcept { return max_len_; }

    // canonical spec-file text
    std::string to_spec() const;

    void check_word(std::string_view u) const;

    friend bool operator==(const RandomSubstitution&, const RandomSubstitution&) = default;

private:
    std::string alphabet_;
    std::vector<WordSet> images_;
    std::array<int, 256> index_{};
    std::size_t min_len_ = 0;
    std::size_t max_len_ = 0;
};

RandomSubstitution parse_substitution(std::string_view text);
RandomSubstitution load_substitution(const std::string& path);

// set concatenation of letter images
WordSet apply(const RandomSubstitution& sub, std::string_view u,
              std::size_t cap = default_image_cap);

RandomSubstitution power(const RandomSubstitution& sub, unsigned p,
                         std::size_t cap = default_image_cap);

using AbelianVector = std::vector<std::size_t>;

AbelianVector abelianise(const RandomSubstitution& sub, std::string_view u);

struct CompatibilityReport {
    bool compatible = true;
    char letter = 0;
    Word first, second;
};

CompatibilityReport is_compatible(const RandomSubstitution& sub);

using Matrix = std::vector<std::vector<std::size_t>>;

// entry [i][j] counts letter i in the images of letter j
Matrix substitution_matrix(const RandomSubstitution& sub);

struct PrimitivityReport {
    bool primitive = false;
    std::optional<unsigned> power;
    bool matrix_route = false;
};

PrimitivityReport is_primitive(const RandomSubstitution& sub);
PrimitivityReport is_primitive_by_matrix(const RandomSubstitution& sub);
PrimitivityReport is_primitive_by_occurrence(const RandomSubstitution& sub,
                                             std::optional<unsigned> max_power = {});

std::optional<std::size_t> is_constant_length(const RandomSubstitution& sub);

struct DisjointnessReport {
    bool disjoint = true;
    Word shared;
};

DisjointnessReport has_disjoint_letter_images(const RandomSubstitution& sub);

struct Branching {
    char letter;
    unsigned power;
};

std::optional<Branching> branching_witness(const RandomSubstitution& sub, std::size_t k,
                                           unsigned max_power = 12);

} // namespace rss
