#include "rss/automorphism.hpp"

#include "rss/errors.hpp"

#include <functional>
#include <set>

namespace rss {

ConveyorSpec ConveyorSpec::inverted() const {
    ConveyorSpec out = *this;
    std::swap(out.forward, out.inverse);
    return out;
}

namespace {

MarkerSpec as_marker_spec(const ConveyorSpec& spec) {
    MarkerSpec m;
    m.marker = spec.marker;
    m.marker_radius = default_max_radius;
    for (const auto& row : spec.gaps)
        for (const Word& v : row) m.gaps.push_back(v);
    m.pi = Permutation::identity(4);
    return m;
}

std::vector<Word> coded_blocks(const ConveyorSpec& spec) {
    std::vector<Word> out;
    for (const auto& row : spec.gaps)
        for (const Word& v : row) out.push_back(spec.marker + v + spec.marker);
    return out;
}

// every binary word of the given length
void for_each_binary(std::size_t length, const std::function<void(const Word&)>& visit) {
    Word w(length, '0');
    while (true) {
        visit(w);
        std::size_t k = 0;
        while (k < length && w[k] == '1') w[k++] = '0';
        if (k == length) return;
        w[k] = '1';
    }
}

void require_binary_pair(const SlidingBlockCode& forward, const SlidingBlockCode& inverse) {
    const std::size_t reach = forward.radius() + inverse.radius();
    auto round_trip = [&](const SlidingBlockCode& first, const SlidingBlockCode& second) {
        for_each_binary(2 * reach + 1, [&](const Word& w) {
            if (apply_central(second, apply_central(first, w))[0] != w[reach])
                throw InvalidArgument("conveyor symbol codes are not mutually inverse on " + w);
        });
    };
    round_trip(forward, inverse);
    round_trip(inverse, forward);
}

} // namespace

std::ptrdiff_t conveyor_visibility_bound(const Language& lang, const ConveyorSpec& spec, std::size_t search) {
    const std::vector<Word> blocks = coded_blocks(spec);
    const std::ptrdiff_t shared = static_cast<std::ptrdiff_t>(spec.marker.size());
    for (std::ptrdiff_t g = -shared; g < 0; ++g) {
        const std::size_t overlap = static_cast<std::size_t>(-g);
        for (const Word& x : blocks)
            for (const Word& y : blocks)
                if (x.compare(x.size() - overlap, overlap, y, 0, overlap) == 0 && lang.is_legal(x + y.substr(overlap)))
                    return g;
    }
    for (std::size_t g = 0; g <= search; ++g) {
        for (const Word& x : blocks) {
            bool found = false;
            Word w = x;
            std::function<void()> grow = [&] {
                if (found) return;
                if (w.size() == x.size() + g) {
                    for (const Word& y : blocks)
                        if (lang.is_legal(w + y)) found = true;
                    return;
                }
                for (char c : lang.substitution().alphabet()) {
                    w.push_back(c);
                    if (lang.is_legal(w)) grow();
                    w.pop_back();
                }
            };
            grow();
            if (found) return static_cast<std::ptrdiff_t>(g);
        }
    }
    throw GapUnbounded("no two coded blocks within " + std::to_string(search) + " letters");
}

void validate_conveyor_spec(const Language& lang, const ConveyorSpec& spec) {
    if (!is_primitive(lang.substitution()).primitive) throw NotPrimitive("conveyor needs a primitive substitution");
    validate_marker_spec(lang, as_marker_spec(spec));
    require_binary_pair(spec.forward, spec.inverse);
    const auto bound = conveyor_visibility_bound(lang, spec);
    if (static_cast<std::ptrdiff_t>(spec.gap_threshold) < bound)
        throw InvalidArgument("gap threshold " + std::to_string(spec.gap_threshold) +
                              " is below the closest realised pair of coded blocks (" + std::to_string(bound) + ")");
}

std::size_t conveyor_radius(const ConveyorSpec& spec) {
    return (spec.forward.radius() + 2) * (2 * spec.marker.size() + spec.gap_length() + spec.gap_threshold);
}

SlidingBlockCode compile_conveyor(const Language& lang, const ConveyorSpec& spec) {
    validate_conveyor_spec(lang, spec);
    const std::size_t radius = conveyor_radius(spec);
    const Word marker = spec.marker;
    const auto gaps = spec.gaps;
    const SlidingBlockCode alpha = spec.forward;
    const std::size_t m = marker.size(), n = spec.gap_length(), block = 2 * m + n;
    const std::size_t pitch = block + spec.gap_threshold;
    const std::size_t reach = alpha.radius();

    std::map<Word, std::pair<int, int>, std::less<>> bits;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) bits.emplace(gaps[i][j], std::pair{i, j});

    auto rule = [=](std::string_view window) -> char {
        using Bits = std::pair<int, int>;
        auto coded_at = [&](std::size_t s) -> std::optional<Bits> {
            if (s + block > window.size()) return std::nullopt;
            if (window.substr(s, m) != marker || window.substr(s + m + n, m) != marker) return std::nullopt;
            const auto it = bits.find(window.substr(s + m, n));
            if (it == bits.end()) return std::nullopt;
            return it->second;
        };
        auto short_context = [&] {
            return InsufficientContext("run structure around the centre of '" + std::string(window) +
                                       "' is not determined");
        };

        std::optional<std::size_t> centre_start;
        std::optional<Bits> centre_bits;
        for (std::size_t s = radius - m - n + 1; s <= radius - m; ++s)
            if (auto b = coded_at(s)) {
                centre_start = s;
                centre_bits = b;
            }
        if (!centre_start) return window[radius];

        // walk outwards block by block until the run ends or enough neighbours are known
        auto walk = [&](bool rightwards, std::vector<Bits>& found) {
            std::size_t at = *centre_start;
            while (found.size() < reach) {
                std::optional<std::size_t> next;
                if (rightwards) {
                    for (std::size_t s = at + m + n; s <= at + pitch && !next; ++s) {
                        if (s + block > window.size()) throw short_context();
                        if (coded_at(s)) next = s;
                    }
                } else {
                    for (std::size_t d = m + n; d <= pitch && !next; ++d) {
                        if (d > at) throw short_context();
                        if (coded_at(at - d)) next = at - d;
                    }
                }
                if (!next) return true;
                found.push_back(*coded_at(*next));
                at = *next;
            }
            return false;
        };
        std::vector<Bits> left, right;
        const bool left_end = walk(false, left);
        const bool right_end = walk(true, right);

        // run positions -L..R; top tracks read forwards, bottom tracks backwards
        const auto L = static_cast<std::ptrdiff_t>(left.size()), R = static_cast<std::ptrdiff_t>(right.size());
        auto at = [&](std::ptrdiff_t p) -> const Bits& {
            if (p == 0) return *centre_bits;
            return p < 0 ? left[static_cast<std::size_t>(-p - 1)] : right[static_cast<std::size_t>(p - 1)];
        };
        auto top = [&](std::ptrdiff_t p) { return symbol(static_cast<std::size_t>(at(p).second)); };
        auto bottom = [&](std::ptrdiff_t p) { return symbol(static_cast<std::size_t>(at(p).first)); };
        auto top_run = [&](std::ptrdiff_t from, std::ptrdiff_t to) {
            Word out;
            for (std::ptrdiff_t p = from; p <= to; ++p) out += top(p);
            return out;
        };
        auto bottom_run = [&](std::ptrdiff_t from, std::ptrdiff_t to) {
            Word out;
            for (std::ptrdiff_t p = from; p >= to; --p) out += bottom(p);
            return out;
        };
        const auto r = static_cast<std::ptrdiff_t>(reach);

        Word belt;
        std::size_t top_index = 0, bottom_index = 0;
        bool circular = false;
        if (left_end && right_end) {
            belt = top_run(-L, R) + bottom_run(R, -L);
            top_index = static_cast<std::size_t>(L);
            bottom_index = static_cast<std::size_t>(L + 2 * R + 1);
            circular = true;
        } else if (right_end) {
            belt = top_run(-r, R) + bottom_run(R, -r);
            top_index = reach;
            bottom_index = static_cast<std::size_t>(r + 2 * R + 1);
        } else if (left_end) {
            belt = bottom_run(r, -L) + top_run(-L, r);
            bottom_index = reach;
            top_index = static_cast<std::size_t>(r + 2 * L + 1);
        }

        auto advanced = [&](std::size_t index) {
            Word w;
            for (std::ptrdiff_t k = -r; k <= r; ++k) {
                const auto size = static_cast<std::ptrdiff_t>(belt.size());
                const std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(index) + k;
                w += circular ? belt[static_cast<std::size_t>(((pos % size) + size) % size)]
                              : belt.at(static_cast<std::size_t>(pos));
            }
            return symbol_index(alpha(w));
        };
        std::size_t new_top = 0, new_bottom = 0;
        if (!left_end && !right_end) {
            new_top = symbol_index(alpha(top_run(-r, r)));
            new_bottom = symbol_index(alpha(bottom_run(r, -r)));
        } else {
            new_top = advanced(top_index);
            new_bottom = advanced(bottom_index);
        }
        if (new_top > 1 || new_bottom > 1) throw InvalidArgument("conveyor symbol code leaves {0,1}");
        return gaps[new_bottom][new_top][radius - *centre_start - m];
    };
    return SlidingBlockCode::from_function(radius, rule, "conveyor " + marker + " via " + alpha.provenance());
}

} // namespace rss
