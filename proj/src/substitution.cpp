#include "rss/substitution.hpp"

#include "rss/errors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace rss {

namespace {

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

bool has_space(std::string_view s) {
    return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

void sort_unique(WordSet& words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

// concatenation of a sequence of word sets, deduplicated
WordSet concat_sets(const std::vector<const WordSet*>& parts, std::size_t cap) {
    std::unordered_set<Word> current{Word{}};
    for (const WordSet* part : parts) {
        std::unordered_set<Word> next;
        next.reserve(current.size() * part->size());
        for (const Word& prefix : current)
            for (const Word& w : *part) {
                next.insert(prefix + w);
                if (next.size() > cap)
                    throw SizeLimit("image set exceeds cap of " + std::to_string(cap));
            }
        current = std::move(next);
    }
    WordSet out(current.begin(), current.end());
    std::sort(out.begin(), out.end());
    return out;
}

using BoolMatrix = std::vector<std::vector<bool>>;

BoolMatrix bool_product(const BoolMatrix& x, const BoolMatrix& y) {
    const std::size_t d = x.size();
    BoolMatrix z(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k)
            if (x[i][k])
                for (std::size_t j = 0; j < d; ++j)
                    if (y[k][j]) z[i][j] = true;
    return z;
}

bool all_true(const BoolMatrix& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& row) {
        return std::all_of(row.begin(), row.end(), [](bool b) { return b; });
    });
}

PrimitivityReport first_positive_power(const BoolMatrix& base, unsigned max_power) {
    PrimitivityReport report;
    BoolMatrix acc = base;
    for (unsigned p = 1; p <= max_power; ++p) {
        if (all_true(acc)) {
            report.primitive = true;
            report.power = p;
            return report;
        }
        acc = bool_product(acc, base);
    }
    return report;
}

unsigned wielandt_bound(std::size_t d) {
    return static_cast<unsigned>((d - 1) * (d - 1) + 1);
}

} // namespace

RandomSubstitution::RandomSubstitution(std::string alphabet, std::map<char, std::vector<Word>> rules)
    : alphabet_(std::move(alphabet)) {
    index_.fill(-1);
    if (alphabet_.empty()) throw SyntaxError("empty alphabet");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        const char c = alphabet_[i];
        if (c == '#' || c == '|' || std::isspace(static_cast<unsigned char>(c)) || !std::isprint(static_cast<unsigned char>(c)))
            throw SyntaxError(std::string("invalid letter '") + c + "'");
        if (index_[static_cast<unsigned char>(c)] >= 0)
            throw SyntaxError(std::string("duplicate letter '") + c + "'");
        index_[static_cast<unsigned char>(c)] = static_cast<int>(i);
    }
    for (const auto& [letter, _] : rules)
        if (!contains(letter)) throw UnknownLetter(std::string("rule for letter '") + letter + "' outside the alphabet");

    images_.resize(alphabet_.size());
    min_len_ = SIZE_MAX;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        auto it = rules.find(alphabet_[i]);
        if (it == rules.end()) throw SyntaxError(std::string("no rule for letter '") + alphabet_[i] + "'");
        WordSet images = it->second;
        if (images.empty()) throw EmptyImage(std::string("letter '") + alphabet_[i] + "' has no images");
        for (const Word& w : images) {
            if (w.empty()) throw EmptyImage(std::string("letter '") + alphabet_[i] + "' has an empty image");
            for (char c : w)
                if (!contains(c)) throw UnknownLetter(std::string("image ") + w + " uses '" + c + "'");
            min_len_ = std::min(min_len_, w.size());
            max_len_ = std::max(max_len_, w.size());
        }
        sort_unique(images);
        images_[i] = std::move(images);
    }
}

std::size_t RandomSubstitution::index_of(char c) const {
    const int i = index_[static_cast<unsigned char>(c)];
    if (i < 0) throw UnknownLetter(std::string("letter '") + c + "' not in alphabet");
    return static_cast<std::size_t>(i);
}

void RandomSubstitution::check_word(std::string_view u) const {
    for (char c : u) index_of(c);
}

std::string RandomSubstitution::to_spec() const {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : alphabet_) out << ' ' << c;
    out << '\n';
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        out << alphabet_[i] << " ->";
        for (std::size_t k = 0; k < images_[i].size(); ++k)
            out << (k ? " | " : " ") << images_[i][k];
        out << '\n';
    }
    return out.str();
}

RandomSubstitution parse_substitution(std::string_view text) {
    std::optional<std::string> alphabet;
    std::map<char, std::vector<Word>> rules;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const auto where = " (line " + std::to_string(line_no) + ")";

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (!alphabet) {
            constexpr std::string_view key = "alphabet:";
            if (line.substr(0, key.size()) != key) throw SyntaxError("expected 'alphabet:' header" + where);
            std::istringstream tokens{std::string(line.substr(key.size()))};
            std::string letters, token;
            while (tokens >> token) {
                if (token.size() != 1) throw SyntaxError("letter token '" + token + "' is not one character" + where);
                letters += token;
            }
            if (letters.empty()) throw SyntaxError("empty alphabet" + where);
            alphabet = letters;
            continue;
        }

        const auto arrow = line.find("->", 1);
        if (arrow == std::string_view::npos) throw SyntaxError("expected 'X -> w1 | w2'" + where);
        const auto lhs = trim(line.substr(0, arrow));
        if (lhs.size() != 1) throw SyntaxError("rule must start with a single letter" + where);
        const char letter = lhs.front();
        if (alphabet->find(letter) == std::string::npos)
            throw UnknownLetter(std::string("rule for letter '") + letter + "' outside the alphabet" + where);
        if (rules.count(letter)) throw SyntaxError(std::string("duplicate rule for '") + letter + "'" + where);

        std::vector<Word> images;
        std::string_view rhs = line.substr(arrow + 2);
        while (true) {
            const auto bar = rhs.find('|');
            const auto image = trim(rhs.substr(0, bar));
            if (image.empty()) throw EmptyImage(std::string("empty image for '") + letter + "'" + where);
            if (has_space(image)) throw SyntaxError("whitespace inside image '" + std::string(image) + "'" + where);
            for (char c : image)
                if (alphabet->find(c) == std::string::npos)
                    throw UnknownLetter(std::string("image ") + std::string(image) + " uses '" + c + "'" + where);
            images.emplace_back(image);
            if (bar == std::string_view::npos) break;
            rhs = rhs.substr(bar + 1);
        }
        rules.emplace(letter, std::move(images));
    }
    if (!alphabet) throw SyntaxError("missing 'alphabet:' header");
    return RandomSubstitution(*alphabet, std::move(rules));
}

RandomSubstitution load_substitution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open spec file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_substitution(buffer.str());
}

WordSet apply(const RandomSubstitution& sub, std::string_view u, std::size_t cap) {
    if (u.empty()) throw InvalidArgument("apply needs a nonempty word");
    std::vector<const WordSet*> parts;
    for (char c : u) parts.push_back(&sub.images(c));
    return concat_sets(parts, cap);
}

RandomSubstitution power(const RandomSubstitution& sub, unsigned p, std::size_t cap) {
    if (p == 0) throw InvalidArgument("power needs p >= 1");
    std::vector<WordSet> level(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i) level[i] = sub.images_at(i);
    for (unsigned step = 1; step < p; ++step) {
        std::vector<WordSet> next(sub.size());
        for (std::size_t i = 0; i < sub.size(); ++i) {
            std::set<Word> merged;
            for (const Word& w : sub.images_at(i)) {
                std::vector<const WordSet*> parts;
                for (char c : w) parts.push_back(&level[sub.index_of(c)]);
                for (Word& x : concat_sets(parts, cap)) merged.insert(std::move(x));
                if (merged.size() > cap) throw SizeLimit("image set exceeds cap of " + std::to_string(cap));
            }
            next[i].assign(merged.begin(), merged.end());
        }
        level = std::move(next);
    }
    std::map<char, std::vector<Word>> rules;
    for (std::size_t i = 0; i < sub.size(); ++i) rules.emplace(sub.alphabet()[i], std::move(level[i]));
    return RandomSubstitution(sub.alphabet(), std::move(rules));
}

AbelianVector abelianise(const RandomSubstitution& sub, std::string_view u) {
    AbelianVector counts(sub.size(), 0);
    for (char c : u) ++counts[sub.index_of(c)];
    return counts;
}

CompatibilityReport is_compatible(const RandomSubstitution& sub) {
    for (std::size_t i = 0; i < sub.size(); ++i) {
        const WordSet& images = sub.images_at(i);
        const AbelianVector first = abelianise(sub, images.front());
        for (const Word& w : images)
            if (abelianise(sub, w) != first) return {false, sub.alphabet()[i], images.front(), w};
    }
    return {};
}

Matrix substitution_matrix(const RandomSubstitution& sub) {
    if (const auto report = is_compatible(sub); !report.compatible)
        throw NotCompatible(std::string("images of '") + report.letter + "' differ: " + report.first + ", " + report.second);
    const std::size_t d = sub.size();
    Matrix m(d, std::vector<std::size_t>(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
        const AbelianVector column = abelianise(sub, sub.images_at(j).front());
        for (std::size_t i = 0; i < d; ++i) m[i][j] = column[i];
    }
    return m;
}

PrimitivityReport is_primitive_by_matrix(const RandomSubstitution& sub) {
    const Matrix m = substitution_matrix(sub);
    BoolMatrix base(m.size(), std::vector<bool>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) base[i][j] = m[i][j] > 0;
    auto report = first_positive_power(base, wielandt_bound(m.size()));
    report.matrix_route = true;
    return report;
}

// occ_p(b) is the set of letters in some word of the p-th iterate of b; the union
// over images makes this a boolean matrix power, so the matrix bound applies
PrimitivityReport is_primitive_by_occurrence(const RandomSubstitution& sub, std::optional<unsigned> max_power) {
    const std::size_t d = sub.size();
    BoolMatrix base(d, std::vector<bool>(d, false));
    for (std::size_t j = 0; j < d; ++j)
        for (const Word& w : sub.images_at(j))
            for (char c : w) base[sub.index_of(c)][j] = true;
    return first_positive_power(base, max_power.value_or(wielandt_bound(d)));
}

PrimitivityReport is_primitive(const RandomSubstitution& sub) {
    if (is_compatible(sub).compatible) return is_primitive_by_matrix(sub);
    return is_primitive_by_occurrence(sub);
}

std::optional<std::size_t> is_constant_length(const RandomSubstitution& sub) {
    if (sub.min_image_length() != sub.max_image_length()) return std::nullopt;
    return sub.min_image_length();
}

DisjointnessReport has_disjoint_letter_images(const RandomSubstitution& sub) {
    std::map<Word, std::size_t> owner;
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (const Word& w : sub.images_at(i))
            if (auto [it, fresh] = owner.emplace(w, i); !fresh && it->second != i) return {false, w};
    return {};
}

std::optional<Branching> branching_witness(const RandomSubstitution& sub, std::size_t k, unsigned max_power) {
    if (k == 0) throw InvalidArgument("branching threshold must be positive");
    for (unsigned p = 1; p <= max_power; ++p) {
        RandomSubstitution level = sub;
        try {
            level = power(sub, p, std::max(k, default_image_cap));
        } catch (const SizeLimit&) {
            return std::nullopt;
        }
        for (char c : sub.alphabet())
            if (level.images(c).size() >= k) return Branching{c, p};
    }
    return std::nullopt;
}

} // namespace rss
