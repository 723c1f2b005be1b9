#pragma once

#include "rss/substitution.hpp"

#include <map>
#include <string>
#include <string_view>

namespace rss {

// Which letters can produce a given piece: as a full image, a nonempty suffix,
// a nonempty prefix or an arbitrary factor of one of their images.
class ImageIndex {
public:
    explicit ImageIndex(const RandomSubstitution& sub);

    const std::string& full(std::string_view piece) const { return lookup(full_, piece); }
    const std::string& suffix(std::string_view piece) const { return lookup(suffix_, piece); }
    const std::string& prefix(std::string_view piece) const { return lookup(prefix_, piece); }
    const std::string& factor(std::string_view piece) const { return lookup(factor_, piece); }

private:
    using Table = std::map<std::string, std::string, std::less<>>;
    static const std::string& lookup(const Table& table, std::string_view piece);

    Table full_, suffix_, prefix_, factor_;
};

} // namespace rss
