#include "rss/image_index.hpp"

namespace rss {

namespace {

void add(std::map<std::string, std::string, std::less<>>& table, std::string key, char letter) {
    std::string& letters = table[std::move(key)];
    if (letters.find(letter) == std::string::npos) letters.push_back(letter);
}

} // namespace

ImageIndex::ImageIndex(const RandomSubstitution& sub) {
    for (char letter : sub.alphabet())
        for (const Word& w : sub.images(letter)) {
            add(full_, w, letter);
            for (std::size_t i = 0; i < w.size(); ++i) {
                add(suffix_, w.substr(i), letter);
                add(prefix_, w.substr(0, i + 1), letter);
                for (std::size_t j = i + 1; j <= w.size(); ++j) add(factor_, w.substr(i, j - i), letter);
            }
        }
}

const std::string& ImageIndex::lookup(const Table& table, std::string_view piece) {
    static const std::string none;
    const auto it = table.find(piece);
    return it == table.end() ? none : it->second;
}

} // namespace rss
