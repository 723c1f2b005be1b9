#include "rss/decomposition.hpp"

#include "rss/errors.hpp"

#include <algorithm>
#include <functional>

namespace rss {

namespace {

constexpr std::size_t tail_check = 12;

bool is_image_of(const RandomSubstitution& sub, std::string_view piece, char letter) {
    const WordSet& images = sub.images(letter);
    return std::binary_search(images.begin(), images.end(), piece);
}

bool tail_legal(const Language& lang, const Word& root) {
    const std::size_t k = std::min(root.size(), tail_check);
    return lang.is_legal(std::string_view(root).substr(root.size() - k));
}

void sort_unique(std::vector<Decomposition>& ds) {
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
}

} // namespace

Word Decomposition::word() const {
    Word out;
    for (const Word& p : pieces) out += p;
    return out;
}

std::vector<Decomposition> decompositions(const Language& lang, std::string_view u) {
    if (u.empty() || !lang.is_legal(u)) throw NotLegal("word '" + std::string(u) + "' is not legal");
    const RandomSubstitution& sub = lang.substitution();
    const ImageIndex& index = lang.index();
    std::vector<Decomposition> out;

    for (char b : index.factor(u))
        out.push_back({{Word(u)}, Word(1, b), is_image_of(sub, u, b), is_image_of(sub, u, b)});

    std::vector<Word> pieces;
    Word root;
    std::function<void(std::size_t)> extend = [&](std::size_t pos) {
        const std::string_view rest = u.substr(pos);
        for (char b : index.prefix(rest)) {
            root.push_back(b);
            if (lang.is_legal(root)) {
                pieces.emplace_back(rest);
                out.push_back({pieces, root, is_image_of(sub, pieces.front(), root.front()), is_image_of(sub, rest, b)});
                pieces.pop_back();
            }
            root.pop_back();
        }
        for (std::size_t len = sub.min_image_length(); len <= sub.max_image_length() && pos + len < u.size(); ++len) {
            const std::string_view piece = rest.substr(0, len);
            for (char b : index.full(piece)) {
                root.push_back(b);
                if (tail_legal(lang, root)) {
                    pieces.emplace_back(piece);
                    extend(pos + len);
                    pieces.pop_back();
                }
                root.pop_back();
            }
        }
    };
    for (std::size_t c = 1; c < u.size() && c <= sub.max_image_length(); ++c) {
        const std::string_view first = u.substr(0, c);
        for (char b : index.suffix(first)) {
            root.assign(1, b);
            pieces.assign(1, Word(first));
            extend(c);
        }
    }
    sort_unique(out);
    return out;
}

WordSet exact_roots(const Language& lang, std::string_view u) {
    if (u.empty()) throw InvalidArgument("exact_roots needs a nonempty word");
    lang.substitution().check_word(u);
    const RandomSubstitution& sub = lang.substitution();
    WordSet out;
    Word root;
    std::function<void(std::size_t)> parse = [&](std::size_t pos) {
        if (pos == u.size()) {
            if (lang.is_legal(root)) out.push_back(root);
            return;
        }
        for (std::size_t len = sub.min_image_length(); len <= sub.max_image_length() && pos + len <= u.size(); ++len)
            for (char b : lang.index().full(u.substr(pos, len))) {
                root.push_back(b);
                parse(pos + len);
                root.pop_back();
            }
    };
    parse(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

InducedDecomposition induce(const Decomposition& d, std::size_t i, std::size_t j) {
    std::vector<std::size_t> starts;
    std::size_t total = 0;
    for (const Word& p : d.pieces) {
        starts.push_back(total);
        total += p.size();
    }
    if (i > j || j >= total)
        throw IndexOutOfRange("interval [" + std::to_string(i) + "," + std::to_string(j) + "] outside word of length " +
                              std::to_string(total));
    auto piece_of = [&](std::size_t pos) {
        return static_cast<std::size_t>(std::upper_bound(starts.begin(), starts.end(), pos) - starts.begin()) - 1;
    };
    const std::size_t ki = piece_of(i), kj = piece_of(j);

    InducedDecomposition out;
    out.from = i;
    out.to = j;
    out.first_piece = ki;
    out.last_piece = kj;
    out.root = d.root.substr(ki, kj - ki + 1);
    const Word w = d.word();
    if (ki == kj) {
        out.pieces.push_back(w.substr(i, j - i + 1));
    } else {
        out.pieces.push_back(w.substr(i, starts[ki] + d.pieces[ki].size() - i));
        for (std::size_t k = ki + 1; k < kj; ++k) out.pieces.push_back(d.pieces[k]);
        out.pieces.push_back(w.substr(starts[kj], j - starts[kj] + 1));
    }
    auto original_full = [&](std::size_t k) {
        if (k == 0) return d.first_full;
        if (k + 1 == d.pieces.size()) return d.last_full;
        return true;
    };
    const bool left_whole = i == starts[ki];
    const bool right_whole = j + 1 == starts[kj] + d.pieces[kj].size();
    out.first_full = original_full(ki) && left_whole && (ki != kj || right_whole);
    out.last_full = original_full(kj) && right_whole && (ki != kj || left_whole);
    return out;
}

std::vector<InducedDecomposition> induced_set(const std::vector<Decomposition>& ds, std::size_t i, std::size_t j) {
    std::vector<InducedDecomposition> out;
    for (const Decomposition& d : ds) out.push_back(induce(d, i, j));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<InducedDecomposition> induced_set(const Language& lang, std::string_view w, std::size_t i, std::size_t j) {
    return induced_set(decompositions(lang, w), i, j);
}

std::string format(const Decomposition& d) {
    std::string out = "[";
    for (std::size_t k = 0; k < d.pieces.size(); ++k) out += (k ? "|" : "") + d.pieces[k];
    out += "] root=" + d.root + " edges=";
    if (d.pieces.size() == 1) return out + (d.first_full ? "full" : "factor");
    return out + (d.first_full ? "full" : "suffix") + "," + (d.last_full ? "full" : "prefix");
}

} // namespace rss
