#include "rss/recognisability.hpp"

#include "rss/errors.hpp"

#include <algorithm>
#include <set>

namespace rss {

namespace {

std::optional<Ambiguity> ambiguity_in(const Language& lang, const Word& w, std::size_t left, std::size_t len) {
    const auto ds = decompositions(lang, w);
    for (std::size_t x = 0; x < ds.size(); ++x) {
        const auto ix = induce(ds[x], left, left + len - 1);
        for (std::size_t y = x + 1; y < ds.size(); ++y)
            if (!(induce(ds[y], left, left + len - 1) == ix)) return Ambiguity{w, left, ds[x], ds[y]};
    }
    return std::nullopt;
}

bool ambiguous(const Language& lang, const Word& w, std::size_t left, std::size_t len) {
    return induced_set(decompositions(lang, w), left, left + len - 1).size() > 1;
}

} // namespace

// Longer context can only shrink the induced set, so only the ambiguous
// extensions of one radius need to be grown to the next.
RecognisabilityVerdict word_radius(const Language& lang, std::string_view u, std::size_t n_max, std::size_t cap) {
    if (u.empty() || !lang.is_legal(u)) throw NotLegal("word '" + std::string(u) + "' is not legal");
    RecognisabilityVerdict verdict;
    verdict.subject = Word(u);
    verdict.bound = n_max;

    std::vector<Word> open;
    if (ambiguous(lang, Word(u), 0, u.size())) open.emplace_back(u);
    const std::string& alphabet = lang.substitution().alphabet();
    std::size_t n = 0;
    while (!open.empty() && n < n_max) {
        ++n;
        std::set<Word> next;
        for (const Word& w : open)
            for (char x : alphabet)
                for (char y : alphabet) {
                    Word e = x + w + y;
                    if (lang.is_legal(e) && ambiguous(lang, e, n, u.size())) next.insert(std::move(e));
                }
        if (next.size() > cap) throw SizeLimit("more than " + std::to_string(cap) + " ambiguous extensions");
        open.assign(next.begin(), next.end());
    }
    if (open.empty()) {
        verdict.radius = n;
        return verdict;
    }
    std::sort(open.begin(), open.end());
    verdict.witness = ambiguity_in(lang, open.front(), n, u.size());
    return verdict;
}

bool check_radius(const Language& lang, std::string_view u, std::size_t n) {
    if (u.empty() || !lang.is_legal(u)) throw NotLegal("word '" + std::string(u) + "' is not legal");
    bool unique = true;
    lang.for_each_word(u.size() + 2 * n, [&](std::string_view w) {
        if (unique && w.substr(n, u.size()) == u) unique = !ambiguous(lang, Word(w), n, u.size());
    });
    return unique;
}

bool is_valid_witness(const Language& lang, std::string_view subject, const Ambiguity& a) {
    if (a.extension.substr(a.left, subject.size()) != subject) return false;
    if (!lang.is_legal(a.extension)) return false;
    const auto ds = decompositions(lang, a.extension);
    auto member = [&](const Decomposition& d) { return std::find(ds.begin(), ds.end(), d) != ds.end(); };
    if (!member(a.first) || !member(a.second)) return false;
    const std::size_t last = a.left + subject.size() - 1;
    return !(induce(a.first, a.left, last) == induce(a.second, a.left, last));
}

namespace {

RecognisabilityVerdict combine(const Language& lang, std::size_t n_max, const std::vector<Word>& subjects) {
    RecognisabilityVerdict out;
    out.bound = n_max;
    std::size_t worst = 0;
    bool all = true;
    for (const Word& w : subjects) {
        auto v = word_radius(lang, w, n_max);
        out.table.push_back({w, v.radius});
        if (v.radius) {
            worst = std::max(worst, *v.radius);
        } else {
            if (all) out.witness = v.witness;
            all = false;
        }
    }
    if (all) out.radius = worst;
    return out;
}

} // namespace

RecognisabilityVerdict local_radius(const Language& lang, std::size_t n_max) {
    if (!is_compatible(lang.substitution()).compatible)
        throw NotCompatible("local recognisability needs a compatible substitution");
    return combine(lang, n_max, lang.slice(2).words);
}

RecognisabilityVerdict local_radius_full_scan(const Language& lang, std::size_t n_max, std::size_t max_length) {
    std::vector<Word> subjects;
    for (std::size_t m = 1; m <= max_length; ++m)
        lang.for_each_word(m, [&](std::string_view w) { subjects.emplace_back(w); });
    std::sort(subjects.begin(), subjects.end());
    subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
    return combine(lang, n_max, subjects);
}

RecognisabilityVerdict is_recognisable(const Language& lang, std::size_t n_max) {
    return local_radius(lang, n_max);
}

namespace {

void require_constant_disjoint(const RandomSubstitution& sub) {
    if (!is_constant_length(sub)) throw NotConstantLength("substitution is not of constant length");
    if (const auto d = has_disjoint_letter_images(sub); !d.disjoint)
        throw InvalidArgument("letters share the image " + d.shared);
}

} // namespace

// Single letters come last: their one-piece decomposition says nothing about cut positions.
std::optional<RecognisableWord> power_recognisable_word(const RandomSubstitution& sub, unsigned p, std::size_t n_max,
                                                        std::size_t max_length) {
    require_constant_disjoint(sub);
    const Language lang(power(sub, p));
    std::optional<RecognisableWord> best;
    auto scan = [&](std::size_t m) {
        for (const Word& w : lang.slice(m).words) {
            if (best && best->radius == 0) return;
            const std::size_t limit = best ? best->radius - 1 : n_max;
            const auto v = word_radius(lang, w, limit);
            if (v.radius) best = RecognisableWord{w, *v.radius};
        }
    };
    for (std::size_t m = 2; m <= max_length; ++m) scan(m);
    if (!best) scan(1);
    return best;
}

ExtensionRadius extend_recognisable(const Language& lang, std::string_view u, std::size_t n, std::string_view w,
                                    std::size_t left) {
    require_constant_disjoint(lang.substitution());
    if (left + u.size() > w.size() || w.substr(left, u.size()) != u)
        throw InvalidArgument("word '" + std::string(u) + "' does not sit at offset " + std::to_string(left));
    if (!lang.is_legal(w)) throw NotLegal("word '" + std::string(w) + "' is not legal");
    ExtensionRadius out;
    const std::size_t right = w.size() - left - u.size();
    out.context_bound = left >= n && right >= n ? 0 : n;
    out.certified = word_radius(lang, w, n + lang.substitution().max_image_length()).radius;
    return out;
}

} // namespace rss
