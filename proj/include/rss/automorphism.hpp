#pragma once

#include "rss/block_code.hpp"
#include "rss/recognisability.hpp"

#include <array>
#include <map>
#include <memory>

namespace rss {

// a bijection of {0..n-1}; image[k] is where k goes
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t n);
    // cycle notation over 1-based points, e.g. "(1 2)(3 5 4)"; "()" or "" is the identity
    static Permutation parse(std::string_view cycles, std::size_t n);

    std::size_t size() const noexcept { return image_.size(); }
    std::size_t operator()(std::size_t k) const { return image_.at(k); }
    const std::vector<std::size_t>& image() const noexcept { return image_; }
    bool is_identity() const noexcept;
    Permutation inverse() const;
    std::size_t order() const;
    std::string cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> image_;
};

// outer after inner
Permutation operator*(const Permutation& outer, const Permutation& inner);

struct ShuffleSpec {
    unsigned level = 1;
    char letter = 0;
    Permutation alpha; // acts on the sorted level-n images of letter
};

inline constexpr std::size_t default_max_radius = 8;

SlidingBlockCode compile_shuffle(const RandomSubstitution& sub, const ShuffleSpec& spec,
                                 std::size_t max_radius = default_max_radius);

struct EmbeddingPlan {
    std::size_t local_radius = 0; // of the substitution itself
    std::size_t gap_letters = 0;  // every legal word this long contains the letter
    std::size_t block_gap = 0;    // bound on material between consecutive type-a images
    std::size_t radius = 0;
};

EmbeddingPlan plan_full_shift_embedding(const Language& lang, char letter, std::size_t symbol_radius,
                                        std::size_t max_radius = default_max_radius, std::size_t max_gap = 64);

// alpha acts on the index sequence of the type-a images, image k coded by symbol(k)
SlidingBlockCode compile_full_shift_embedding(const RandomSubstitution& sub, char letter, const SlidingBlockCode& alpha,
                                              std::size_t max_radius = default_max_radius, std::size_t max_gap = 64);

struct MarkerReport {
    Word marker;
    std::size_t gap_length = 0;
    WordSet gaps;                     // every admissible gap word
    std::map<Word, WordSet> by_root;  // gaps whose block has a unique root
    WordSet rootless;                 // gaps whose block has several roots
};

MarkerReport find_markers(const Language& lang, std::string_view marker, std::size_t gap_length,
                          std::size_t cap = 1'000'000);

struct MarkerSpec {
    Word marker;
    std::size_t marker_radius = 0;
    std::vector<Word> gaps; // v_1..v_k
    Permutation pi;
};

// the common root of the blocks; throws when an invariant fails
Word validate_marker_spec(const Language& lang, const MarkerSpec& spec);

SlidingBlockCode compile_marker_automorphism(const Language& lang, const MarkerSpec& spec);

struct ConveyorSpec {
    Word marker;
    std::array<std::array<Word, 2>, 2> gaps; // gaps[i][j]: bottom bit i, top bit j
    std::size_t gap_threshold = 0;
    SlidingBlockCode forward = SlidingBlockCode::identity();
    SlidingBlockCode inverse = SlidingBlockCode::identity();

    std::size_t gap_length() const noexcept { return gaps[0][0].size(); }
    ConveyorSpec inverted() const;
};

// smallest distance between two coded blocks seen in a legal word, negative when they share the marker
std::ptrdiff_t conveyor_visibility_bound(const Language& lang, const ConveyorSpec& spec, std::size_t search = 48);

void validate_conveyor_spec(const Language& lang, const ConveyorSpec& spec);

std::size_t conveyor_radius(const ConveyorSpec& spec);

SlidingBlockCode compile_conveyor(const Language& lang, const ConveyorSpec& spec);

} // namespace rss
