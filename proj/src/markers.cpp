#include "rss/automorphism.hpp"

#include "rss/errors.hpp"

#include <algorithm>
#include <set>

namespace rss {

namespace {

std::size_t occurrences(std::string_view text, std::string_view pattern) {
    std::size_t count = 0;
    for (auto pos = text.find(pattern); pos != std::string_view::npos; pos = text.find(pattern, pos + 1)) ++count;
    return count;
}

void require_marker_setting(const Language& lang) {
    const RandomSubstitution& sub = lang.substitution();
    if (!is_constant_length(sub)) throw NotConstantLength("markers need a constant-length substitution");
    if (!is_compatible(sub).compatible) throw NotCompatible("markers need a compatible substitution");
    if (const auto d = has_disjoint_letter_images(sub); !d.disjoint)
        throw InvalidArgument("letters share the image " + d.shared);
}

WordSet roots_of(const Language& lang, const Word& block) {
    WordSet roots;
    for (const Decomposition& d : decompositions(lang, block)) roots.push_back(d.root);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

MarkerReport find_markers(const Language& lang, std::string_view marker, std::size_t gap_length, std::size_t cap) {
    require_marker_setting(lang);
    if (marker.empty() || !lang.is_legal(marker)) throw NotLegal("marker '" + std::string(marker) + "' is not legal");
    if (!word_radius(lang, marker, default_max_radius).certified())
        throw NotRecognisable("marker '" + std::string(marker) + "' has no radius up to " +
                              std::to_string(default_max_radius));

    MarkerReport report;
    report.marker = Word(marker);
    report.gap_length = gap_length;
    std::set<Word> seen;
    auto consider = [&](std::string_view v) {
        if (!seen.emplace(v).second) return;
        const Word block = report.marker + Word(v) + report.marker;
        if (occurrences(block, marker) != 2 || !lang.is_legal(block)) return;
        report.gaps.emplace_back(v);
        if (report.gaps.size() > cap) throw SizeLimit("more than " + std::to_string(cap) + " gap words");
    };
    if (gap_length == 0)
        consider("");
    else
        lang.for_each_word(gap_length, consider);
    std::sort(report.gaps.begin(), report.gaps.end());

    for (const Word& v : report.gaps) {
        const WordSet roots = roots_of(lang, report.marker + v + report.marker);
        if (roots.size() == 1)
            report.by_root[roots.front()].push_back(v);
        else
            report.rootless.push_back(v);
    }
    return report;
}

Word validate_marker_spec(const Language& lang, const MarkerSpec& spec) {
    require_marker_setting(lang);
    if (spec.gaps.empty()) throw InvalidArgument("marker spec needs at least one gap word");
    if (spec.pi.size() != spec.gaps.size())
        throw InvalidArgument("permutation degree " + std::to_string(spec.pi.size()) + " does not match " +
                              std::to_string(spec.gaps.size()) + " gap words");
    if (spec.marker.empty() || !lang.is_legal(spec.marker)) throw NotLegal("marker '" + spec.marker + "' is not legal");
    if (!word_radius(lang, spec.marker, spec.marker_radius).certified())
        throw NotRecognisable("marker '" + spec.marker + "' has no radius up to " + std::to_string(spec.marker_radius));

    std::optional<Word> common;
    std::set<Word> distinct;
    for (const Word& v : spec.gaps) {
        if (v.size() != spec.gaps.front().size()) throw InvalidArgument("gap words differ in length");
        if (!distinct.insert(v).second) throw InvalidArgument("gap word " + v + " repeated");
        const Word block = spec.marker + v + spec.marker;
        if (!lang.is_legal(block)) throw NotLegal("block '" + block + "' is not legal");
        if (occurrences(block, spec.marker) != 2)
            throw InvalidArgument("marker occurs more than twice in '" + block + "'");
        const WordSet roots = roots_of(lang, block);
        if (roots.size() != 1) throw RootMismatch("block '" + block + "' has " + std::to_string(roots.size()) + " roots");
        if (common && *common != roots.front())
            throw RootMismatch("block '" + block + "' has root " + roots.front() + ", not " + *common);
        common = roots.front();
    }
    return *common;
}

SlidingBlockCode compile_marker_automorphism(const Language& lang, const MarkerSpec& spec) {
    validate_marker_spec(lang, spec);
    const Word marker = spec.marker;
    const std::vector<Word> gaps = spec.gaps;
    const Permutation pi = spec.pi;
    const std::size_t m = marker.size(), n = gaps.front().size();
    const std::size_t radius = m + n - 1;

    std::map<Word, std::size_t, std::less<>> slot;
    for (std::size_t k = 0; k < gaps.size(); ++k) slot.emplace(gaps[k], k);

    // a block starting at s covers the centre with its gap when s lies in [0, n)
    auto rule = [marker, gaps, pi, slot, m, n, radius](std::string_view window) {
        std::optional<char> out;
        for (std::size_t s = 0; s < n; ++s) {
            if (window.substr(s, m) != marker || window.substr(s + m + n, m) != marker) continue;
            const auto it = slot.find(window.substr(s + m, n));
            if (it == slot.end()) continue;
            const char letter = gaps[pi(it->second)][radius - s - m];
            if (out && *out != letter)
                throw OverlapConflict("two marker blocks rewrite the centre of '" + std::string(window) + "'");
            out = letter;
        }
        return out.value_or(window[radius]);
    };
    return SlidingBlockCode::from_function(radius, rule, "marker " + marker + " gap " + std::to_string(n) + " " +
                                                             pi.cycles());
}

} // namespace rss
