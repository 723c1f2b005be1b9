#include "rss/automorphism.hpp"

#include "rss/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace rss {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t k : image_) {
        if (k >= image_.size() || seen[k]) throw InvalidArgument("not a bijection");
        seen[k] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::parse(std::string_view text, std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::vector<bool> used(n, false);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(') throw SyntaxError("expected '(' in permutation '" + std::string(text) + "'");
        ++pos;
        std::vector<std::size_t> cycle;
        while (true) {
            skip();
            if (pos >= text.size()) throw SyntaxError("unterminated cycle in '" + std::string(text) + "'");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t value = 0, digits = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
                ++digits;
            }
            if (digits == 0) throw SyntaxError("expected a point in '" + std::string(text) + "'");
            if (value == 0 || value > n)
                throw IndexOutOfRange("point " + std::to_string(value) + " outside 1.." + std::to_string(n));
            if (used[value - 1]) throw InvalidArgument("point " + std::to_string(value) + " repeated");
            used[value - 1] = true;
            cycle.push_back(value - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) image[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t k = 0; k < image_.size(); ++k)
        if (image_[k] != k) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k]] = k;
    return Permutation(std::move(inv));
}

std::size_t Permutation::order() const {
    std::size_t result = 1;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t k = 0; k < image_.size(); ++k) {
        std::size_t len = 0;
        for (std::size_t x = k; !seen[x]; x = image_[x]) {
            seen[x] = true;
            ++len;
        }
        if (len) result = std::lcm(result, len);
    }
    return result;
}

std::string Permutation::cycles() const {
    std::string out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t k = 0; k < image_.size(); ++k) {
        if (seen[k] || image_[k] == k) continue;
        out += '(';
        for (std::size_t x = k; !seen[x]; x = image_[x]) {
            seen[x] = true;
            if (x != k) out += ' ';
            out += std::to_string(x + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size()) throw InvalidArgument("permutations of different degree");
    std::vector<std::size_t> image(inner.size());
    for (std::size_t k = 0; k < image.size(); ++k) image[k] = outer(inner(k));
    return Permutation(std::move(image));
}

namespace {

struct Piece {
    std::size_t start;
    Word text;
    char type;

    std::size_t end() const noexcept { return start + text.size(); }
    friend bool operator==(const Piece&, const Piece&) = default;
    friend auto operator<=>(const Piece&, const Piece&) = default;
};

// interior pieces on which every decomposition of the window agrees, by start
std::vector<Piece> agreed_pieces(const Language& lang, std::string_view window) {
    if (!lang.is_legal(window)) throw IllegalInput("window '" + std::string(window) + "' is not legal");
    const auto ds = decompositions(lang, window);
    std::vector<Piece> common;
    for (std::size_t x = 0; x < ds.size(); ++x) {
        std::vector<Piece> mine;
        std::size_t at = ds[x].pieces.front().size();
        for (std::size_t k = 1; k + 1 < ds[x].pieces.size(); ++k) {
            mine.push_back({at, ds[x].pieces[k], ds[x].root[k]});
            at += ds[x].pieces[k].size();
        }
        if (x == 0) {
            common = std::move(mine);
        } else {
            std::vector<Piece> both;
            std::set_intersection(common.begin(), common.end(), mine.begin(), mine.end(), std::back_inserter(both));
            common = std::move(both);
        }
    }
    return common;
}

std::optional<std::size_t> piece_at(const std::vector<Piece>& pieces, std::size_t pos) {
    for (std::size_t k = 0; k < pieces.size(); ++k)
        if (pieces[k].start <= pos && pos < pieces[k].end()) return k;
    return std::nullopt;
}

std::size_t certified_radius(const Language& lang, std::size_t max_radius) {
    const auto verdict = local_radius(lang, max_radius);
    if (!verdict.radius)
        throw NotRecognisable("no local recognisability radius up to " + std::to_string(max_radius));
    return *verdict.radius;
}

std::size_t image_position(const WordSet& images, std::string_view piece) {
    const auto it = std::lower_bound(images.begin(), images.end(), piece);
    return static_cast<std::size_t>(it - images.begin());
}

} // namespace

SlidingBlockCode compile_shuffle(const RandomSubstitution& sub, const ShuffleSpec& spec, std::size_t max_radius) {
    if (spec.level == 0) throw InvalidArgument("shuffle level must be at least 1");
    std::shared_ptr<const Language> lang = make_language(power(sub, spec.level));
    const WordSet images = lang->substitution().images(spec.letter);
    if (spec.alpha.size() != images.size())
        throw InvalidArgument("permutation has degree " + std::to_string(spec.alpha.size()) + " but there are " +
                              std::to_string(images.size()) + " images");
    for (std::size_t k = 0; k < images.size(); ++k)
        if (images[spec.alpha(k)].size() != images[k].size())
            throw LengthChangingPermutation(images[k] + " would become " + images[spec.alpha(k)]);

    const std::size_t radius = certified_radius(*lang, max_radius) + 2 * lang->substitution().max_image_length();
    const char letter = spec.letter;
    const Permutation alpha = spec.alpha;
    auto rule = [lang, images, letter, alpha, radius](std::string_view window) {
        const auto pieces = agreed_pieces(*lang, window);
        const auto k = piece_at(pieces, radius);
        if (!k || pieces[*k].type != letter) return window[radius];
        const Piece& p = pieces[*k];
        return images[alpha(image_position(images, p.text))][radius - p.start];
    };
    return SlidingBlockCode::from_function(radius, rule,
                                           "shuffle level " + std::to_string(spec.level) + " letter " + letter + " " +
                                               alpha.cycles(),
                                           true);
}

EmbeddingPlan plan_full_shift_embedding(const Language& lang, char letter, std::size_t symbol_radius,
                                        std::size_t max_radius, std::size_t max_gap) {
    EmbeddingPlan plan;
    plan.local_radius = certified_radius(lang, max_radius);
    const auto gap = letter_gap_bound(lang, letter, max_gap);
    if (!gap) throw GapUnbounded("no gap bound for letter " + std::string(1, letter) + " up to " + std::to_string(max_gap));
    plan.gap_letters = *gap;
    const std::size_t longest = lang.substitution().max_image_length();
    plan.block_gap = (plan.gap_letters - 1) * longest;
    plan.radius = plan.local_radius + (symbol_radius + 1) * (plan.block_gap + longest);
    return plan;
}

SlidingBlockCode compile_full_shift_embedding(const RandomSubstitution& sub, char letter, const SlidingBlockCode& alpha,
                                              std::size_t max_radius, std::size_t max_gap) {
    std::shared_ptr<const Language> lang = make_language(sub);
    const WordSet images = sub.images(letter);
    if (images.size() < 2) throw InvalidArgument("letter " + std::string(1, letter) + " has a single image");
    for (const Word& w : images)
        if (w.size() != images.front().size())
            throw LengthChangingPermutation("images of " + std::string(1, letter) + " differ in length");
    const EmbeddingPlan plan = plan_full_shift_embedding(*lang, letter, alpha.radius(), max_radius, max_gap);
    const std::size_t radius = plan.radius, reach = alpha.radius();

    auto rule = [lang, images, letter, alpha, radius, reach](std::string_view window) {
        const auto pieces = agreed_pieces(*lang, window);
        const auto k0 = piece_at(pieces, radius);
        if (!k0 || pieces[*k0].type != letter) return window[radius];
        auto contiguous = [&](std::size_t k) { return pieces[k].end() == pieces[k + 1].start; };
        auto short_context = [&] {
            return InsufficientContext("type-" + std::string(1, letter) + " images around the centre of '" +
                                       std::string(window) + "' are not determined");
        };
        std::vector<std::size_t> left, right;
        for (std::size_t k = *k0; left.size() < reach; --k) {
            if (k == 0 || !contiguous(k - 1)) throw short_context();
            if (pieces[k - 1].type == letter) left.push_back(k - 1);
        }
        for (std::size_t k = *k0; right.size() < reach; ++k) {
            if (k + 1 >= pieces.size() || !contiguous(k)) throw short_context();
            if (pieces[k + 1].type == letter) right.push_back(k + 1);
        }
        Word indices;
        for (auto it = left.rbegin(); it != left.rend(); ++it)
            indices += symbol(image_position(images, pieces[*it].text));
        indices += symbol(image_position(images, pieces[*k0].text));
        for (std::size_t k : right) indices += symbol(image_position(images, pieces[k].text));
        const std::size_t target = symbol_index(alpha(indices));
        if (target >= images.size()) throw InvalidArgument("symbol code leaves the image range");
        return images[target][radius - pieces[*k0].start];
    };
    return SlidingBlockCode::from_function(
        radius, rule, "embedding letter " + std::string(1, letter) + " via " + alpha.provenance(), true);
}

} // namespace rss
