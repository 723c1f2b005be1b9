#pragma once

#include "rss/language.hpp"

#include <compare>
#include <string_view>
#include <vector>

namespace rss {

struct Decomposition {
    std::vector<Word> pieces;
    Word root;
    bool first_full = false; // first piece is a whole image of root[0]
    bool last_full = false;  // last piece is a whole image of root.back()

    Word word() const;

    friend bool operator==(const Decomposition& x, const Decomposition& y) {
        return x.pieces == y.pieces && x.root == y.root;
    }
    friend auto operator<=>(const Decomposition& x, const Decomposition& y) {
        if (auto c = x.pieces <=> y.pieces; c != 0) return c;
        return x.root <=> y.root;
    }
};

struct InducedDecomposition : Decomposition {
    std::size_t from = 0, to = 0;             // inclusive source interval
    std::size_t first_piece = 0, last_piece = 0; // pieces of the source holding `from` and `to`
};

// all cuttings of u paired with all legal roots, sorted
std::vector<Decomposition> decompositions(const Language& lang, std::string_view u);

// legal roots v with u a realisation of the image of v
WordSet exact_roots(const Language& lang, std::string_view u);

InducedDecomposition induce(const Decomposition& d, std::size_t i, std::size_t j);

// distinct (pieces, root) restrictions, sorted
std::vector<InducedDecomposition> induced_set(const std::vector<Decomposition>& ds, std::size_t i, std::size_t j);
std::vector<InducedDecomposition> induced_set(const Language& lang, std::string_view w, std::size_t i, std::size_t j);

// e.g. "[a|ab] root=aa edges=prefix,full"
std::string format(const Decomposition& d);

} // namespace rss
