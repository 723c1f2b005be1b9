#include "rss/language.hpp"

#include "rss/errors.hpp"

#include <algorithm>

namespace rss {

namespace {

// one round of the refinement map: length-<=n subwords of realisations of
// images of members of `roots`, gathered into `out`
void refine(const RandomSubstitution& sub, const std::unordered_set<Word>& roots, std::size_t n,
            std::unordered_set<Word>& out, std::size_t cap) {
    auto emit = [&](const Word& g, std::size_t from) {
        for (std::size_t len = from + 1; len <= std::min(g.size(), n); ++len) out.insert(g.substr(0, len));
        if (out.size() > cap) throw SizeLimit("language closure exceeds cap of " + std::to_string(cap));
    };
    std::function<void(Word&, Word&)> extend = [&](Word& root, Word& g) {
        if (g.size() >= n) return;
        for (char c : sub.alphabet()) {
            root.push_back(c);
            if (roots.count(root)) {
                for (const Word& img : sub.images(c)) {
                    const std::size_t old = g.size();
                    g += img;
                    emit(g, old);
                    extend(root, g);
                    g.resize(old);
                }
            }
            root.pop_back();
        }
    };
    for (char c : sub.alphabet()) {
        Word root(1, c);
        for (const Word& img : sub.images(c))
            for (std::size_t s = 0; s < img.size(); ++s) {
                Word g = img.substr(s);
                emit(g, 0);
                extend(root, g);
            }
    }
}

} // namespace

Language::Language(RandomSubstitution sub, LanguageOptions options)
    : sub_(std::move(sub)), index_(sub_), options_(options) {
    if (!is_primitive(sub_).primitive) throw NotPrimitive("language enumeration needs a primitive substitution");
}

std::shared_ptr<const Language> make_language(RandomSubstitution sub, LanguageOptions options) {
    return std::make_shared<const Language>(std::move(sub), options);
}

const Language::Closure& Language::closure(std::size_t n) const {
    std::lock_guard lock(mutex_);
    if (auto it = closures_.find(n); it != closures_.end()) return it->second;

    Closure result;
    result.n = n;
    std::unordered_set<Word> current;
    for (char c : sub_.alphabet()) current.insert(Word(1, c));
    while (true) {
        std::unordered_set<Word> next = current;
        refine(sub_, current, n, next, options_.closure_cap);
        if (next.size() == current.size()) break;
        current = std::move(next);
        ++result.power;
    }
    result.members = std::move(current);
    return closures_.emplace(n, std::move(result)).first->second;
}

const Language::Closure* Language::covering(std::size_t n) const {
    std::lock_guard lock(mutex_);
    const auto it = closures_.lower_bound(n);
    return it == closures_.end() ? nullptr : &it->second;
}

LanguageSlice Language::slice(std::size_t n) const {
    if (n == 0) throw InvalidArgument("slice length must be positive");
    const Closure& c = closure(n);
    LanguageSlice out{n, {}, c.power};
    for (const Word& w : c.members)
        if (w.size() == n) out.words.push_back(w);
    std::sort(out.words.begin(), out.words.end());
    return out;
}

bool Language::is_legal(std::string_view u) const {
    if (u.empty()) throw InvalidArgument("legality is defined for nonempty words");
    sub_.check_word(u);
    // cached closures are immutable
    const Closure* c = covering(u.size());
    if (!c && u.size() <= options_.lookup_length) c = &closure(options_.lookup_length);
    if (c) return c->members.count(Word(u)) > 0;
    std::lock_guard lock(mutex_);
    return legal_by_desubstitution(Word(u)).legal;
}

Language::Verdict Language::root_legal(const Word& root) const {
    if (root.size() <= options_.lookup_length) return {closure(options_.lookup_length).members.count(root) > 0, false};
    if (const Closure* c = covering(root.size())) return {c->members.count(root) > 0, false};
    return legal_by_desubstitution(root);
}

// Positive answers are always memoised. A negative answer is memoised only if the
// search never ran into a word that was itself still being decided; otherwise the
// cycle may have hidden a derivation.
Language::Verdict Language::legal_by_desubstitution(const Word& u) const {
    if (auto it = memo_.find(u); it != memo_.end()) return {it->second, false};
    if (in_progress_.count(u)) return {false, true};
    in_progress_.insert(u);

    bool tainted = false;
    bool legal = !index_.factor(u).empty();
    const std::size_t first_max = std::min(u.size() - 1, sub_.max_image_length());
    for (std::size_t c = 1; !legal && c <= first_max; ++c)
        for (char b : index_.suffix(std::string_view(u).substr(0, c))) {
            Word root(1, b);
            if (desubstitute(u, c, root, tainted)) {
                legal = true;
                break;
            }
        }

    in_progress_.erase(u);
    if (legal || !tainted) memo_[u] = legal;
    return {legal, tainted};
}

bool Language::desubstitute(const Word& u, std::size_t pos, Word& root, bool& tainted) const {
    const std::string_view rest = std::string_view(u).substr(pos);
    const Closure& lookup = closure(options_.lookup_length);
    auto tail_ok = [&] {
        const std::size_t k = std::min(root.size(), options_.lookup_length);
        return lookup.members.count(root.substr(root.size() - k)) > 0;
    };

    for (char b : index_.prefix(rest)) {
        root.push_back(b);
        const Verdict v = tail_ok() ? root_legal(root) : Verdict{false, false};
        root.pop_back();
        tainted = tainted || v.tainted;
        if (v.legal) return true;
    }
    for (std::size_t len = sub_.min_image_length(); len <= sub_.max_image_length() && pos + len < u.size(); ++len)
        for (char b : index_.full(rest.substr(0, len))) {
            root.push_back(b);
            const bool found = tail_ok() && desubstitute(u, pos + len, root, tainted);
            root.pop_back();
            if (found) return true;
        }
    return false;
}

void Language::for_each_word(std::size_t m, const std::function<void(std::string_view)>& visit) const {
    if (m == 0) return;
    // every legal m-word starts inside the first image of a legal root of length k
    const std::size_t lmin = sub_.min_image_length();
    const std::size_t k = (m - 1 + lmin - 1) / lmin + 1;
    const Closure* c = covering(m);
    if (!c && m <= options_.lookup_length) c = &closure(options_.lookup_length);
    if (!c && k >= m) c = &closure(m);
    if (c) {
        std::vector<const Word*> words;
        for (const Word& w : c->members)
            if (w.size() == m) words.push_back(&w);
        std::sort(words.begin(), words.end(), [](const Word* x, const Word* y) { return *x < *y; });
        for (const Word* w : words) visit(*w);
        return;
    }

    std::function<void(std::string_view, std::size_t, Word&, std::size_t)> realise =
        [&](std::string_view root, std::size_t i, Word& g, std::size_t first) {
            if (i > 0 && g.size() >= first - 1 + m) {
                for (std::size_t s = 0; s < first; ++s) visit(std::string_view(g).substr(s, m));
                return;
            }
            if (i == root.size()) {
                for (std::size_t s = 0; s < first && s + m <= g.size(); ++s) visit(std::string_view(g).substr(s, m));
                return;
            }
            for (const Word& img : sub_.images(root[i])) {
                const std::size_t old = g.size();
                g += img;
                realise(root, i + 1, g, i == 0 ? img.size() : first);
                g.resize(old);
            }
        };
    for_each_word(k, [&](std::string_view root) {
        Word g;
        realise(root, 0, g, 0);
    });
}

Word Language::random_word(std::size_t m, std::mt19937_64& rng) const {
    if (m == 0) return {};
    const auto& alphabet = sub_.alphabet();
    Word w(1, alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]);
    for (int step = 0; step < 64; ++step) {
        Word next;
        for (char c : w) {
            const WordSet& images = sub_.images(c);
            next += images[std::uniform_int_distribution<std::size_t>(0, images.size() - 1)(rng)];
        }
        w = std::move(next);
        if (w.size() > 4 * m + 8) {
            const std::size_t keep = 2 * m + 4;
            const std::size_t start = std::uniform_int_distribution<std::size_t>(0, w.size() - keep)(rng);
            w = w.substr(start, keep);
        }
        if (step >= 6 && w.size() >= m) break;
    }
    if (w.size() < m) throw SizeLimit("no legal word of length " + std::to_string(m) + " reached by iteration");
    const std::size_t start = std::uniform_int_distribution<std::size_t>(0, w.size() - m)(rng);
    return w.substr(start, m);
}

// One legal avoiding word of length m_max already settles the question, since its
// prefixes avoid u too; otherwise the avoiding words die out below m_max and a
// breadth-first sweep finds the exact length.
std::optional<std::size_t> word_gap_bound(const Language& lang, std::string_view u, std::size_t m_max) {
    if (u.empty()) throw InvalidArgument("gap target must be nonempty");
    lang.substitution().check_word(u);
    const std::string& alphabet = lang.substitution().alphabet();
    auto extends = [&](const Word& x) {
        const bool avoids = x.size() < u.size() || std::string_view(x).substr(x.size() - u.size()) != u;
        return avoids && lang.is_legal(x);
    };

    Word path;
    std::function<bool()> dive = [&] {
        if (path.size() == m_max) return true;
        for (char c : alphabet) {
            path.push_back(c);
            if (extends(path) && dive()) return true;
            path.pop_back();
        }
        return false;
    };
    if (m_max == 0 || dive()) return std::nullopt;

    std::vector<Word> avoiding{Word{}};
    for (std::size_t m = 1; m <= m_max; ++m) {
        std::vector<Word> next;
        for (const Word& w : avoiding)
            for (char c : alphabet)
                if (Word x = w + c; extends(x)) next.push_back(std::move(x));
        if (next.empty()) return m;
        avoiding = std::move(next);
    }
    return std::nullopt;
}

std::optional<std::size_t> letter_gap_bound(const Language& lang, char a, std::size_t m_max) {
    if (!is_compatible(lang.substitution()).compatible)
        throw NotCompatible("letter gap bounds need a compatible substitution");
    return word_gap_bound(lang, std::string(1, a), m_max);
}

Word least_rotation(std::string_view w) {
    Word best(w);
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word r = Word(w.substr(i)) + Word(w.substr(0, i));
        if (r < best) best = std::move(r);
    }
    return best;
}

bool is_proper_power(std::string_view w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
        if (w.size() % p) continue;
        bool periodic = true;
        for (std::size_t i = p; i < w.size() && periodic; ++i) periodic = w[i] == w[i - p];
        if (periodic) return true;
    }
    return false;
}

WordSet periodic_candidates(const Language& lang, std::size_t p_max, std::size_t k_max) {
    WordSet out;
    const std::size_t reps = std::max<std::size_t>(k_max, 1);
    for (std::size_t p = 1; p <= p_max; ++p)
        lang.for_each_word(p, [&](std::string_view w) {
            if (is_proper_power(w) || least_rotation(w) != w) return;
            Word repeated;
            for (std::size_t k = 0; k < reps; ++k) repeated += w;
            if (lang.is_legal(repeated)) out.emplace_back(w);
        });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace rss
