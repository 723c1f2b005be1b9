#include "rss/block_code.hpp"

#include "rss/errors.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace rss {

namespace {

class FunctionRule : public LocalRule {
public:
    explicit FunctionRule(std::function<char(std::string_view)> f) : f_(std::move(f)) {}
    char operator()(std::string_view window) const override { return f_(window); }

private:
    std::function<char(std::string_view)> f_;
};

class MemoRule : public LocalRule {
public:
    explicit MemoRule(std::function<char(std::string_view)> f) : f_(std::move(f)) {}
    char operator()(std::string_view window) const override {
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(window); it != memo_.end()) return it->second;
        }
        const char out = f_(window);
        std::lock_guard lock(mutex_);
        memo_.emplace(Word(window), out);
        return out;
    }

private:
    std::function<char(std::string_view)> f_;
    mutable std::mutex mutex_;
    mutable RuleTable memo_;
};

class TableRule : public LocalRule {
public:
    explicit TableRule(RuleTable table) : table_(std::move(table)) {}
    char operator()(std::string_view window) const override {
        const auto it = table_.find(window);
        if (it == table_.end()) throw IllegalInput("window '" + std::string(window) + "' is not in the rule table");
        return it->second;
    }
    const RuleTable& table() const noexcept { return table_; }

private:
    RuleTable table_;
};

} // namespace

SlidingBlockCode::SlidingBlockCode(std::size_t radius, std::shared_ptr<const LocalRule> rule, std::string provenance)
    : radius_(radius), rule_(std::move(rule)), provenance_(std::move(provenance)) {}

SlidingBlockCode SlidingBlockCode::identity() {
    return from_function(0, [](std::string_view w) { return w[0]; }, "identity");
}

SlidingBlockCode SlidingBlockCode::from_function(std::size_t radius, std::function<char(std::string_view)> rule,
                                                 std::string provenance, bool memoise) {
    std::shared_ptr<const LocalRule> r;
    if (memoise)
        r = std::make_shared<MemoRule>(std::move(rule));
    else
        r = std::make_shared<FunctionRule>(std::move(rule));
    return SlidingBlockCode(radius, std::move(r), std::move(provenance));
}

SlidingBlockCode SlidingBlockCode::from_table(std::size_t radius, RuleTable table, std::string provenance) {
    for (const auto& [window, _] : table)
        if (window.size() != 2 * radius + 1)
            throw InvalidArgument("table window '" + window + "' does not match radius " + std::to_string(radius));
    return SlidingBlockCode(radius, std::make_shared<TableRule>(std::move(table)), std::move(provenance));
}

char SlidingBlockCode::operator()(std::string_view window) const {
    if (window.size() != window_size())
        throw TooShort("window of length " + std::to_string(window.size()) + " for radius " + std::to_string(radius_));
    return (*rule_)(window);
}

const RuleTable* SlidingBlockCode::table() const noexcept {
    const auto* t = dynamic_cast<const TableRule*>(rule_.get());
    return t ? &t->table() : nullptr;
}

Word apply_central(const SlidingBlockCode& code, std::string_view w) {
    const std::size_t size = code.window_size();
    if (w.size() < size)
        throw TooShort("word of length " + std::to_string(w.size()) + " is shorter than the window " + std::to_string(size));
    Word out(w.size() - size + 1, '\0');
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = code(w.substr(i, size));
    return out;
}

Word apply_central(const SlidingBlockCode& code, const Language& lang, std::string_view w) {
    if (w.size() < code.window_size())
        throw TooShort("word of length " + std::to_string(w.size()) + " is shorter than the window " +
                       std::to_string(code.window_size()));
    if (!lang.is_legal(w)) throw IllegalInput("word '" + std::string(w) + "' is not legal");
    return apply_central(code, w);
}

Word apply_cyclic(const SlidingBlockCode& code, std::string_view period) {
    if (period.empty()) throw InvalidArgument("cyclic configuration needs a nonempty period");
    const std::size_t p = period.size(), r = code.radius();
    Word unrolled;
    unrolled.reserve(p + 2 * r);
    for (std::size_t k = 0; k < p + 2 * r; ++k) unrolled.push_back(period[(k + p - r % p) % p]);
    return apply_central(code, unrolled);
}

SlidingBlockCode compose(const SlidingBlockCode& outer, const SlidingBlockCode& inner) {
    const std::size_t radius = outer.radius() + inner.radius();
    return SlidingBlockCode::from_function(
        radius, [outer, inner](std::string_view window) { return outer(apply_central(inner, window)); },
        outer.provenance() + " . " + inner.provenance());
}

SlidingBlockCode materialise(const SlidingBlockCode& code, const Language& lang, std::size_t cap) {
    RuleTable table;
    lang.for_each_word(code.window_size(), [&](std::string_view window) {
        if (table.find(window) != table.end()) return;
        table.emplace(Word(window), code(window));
        if (table.size() > cap) throw SizeLimit("more than " + std::to_string(cap) + " legal windows");
    });
    return SlidingBlockCode::from_table(code.radius(), std::move(table), code.provenance());
}

std::string export_table(const SlidingBlockCode& code) {
    const RuleTable* table = code.table();
    if (!table) throw InvalidArgument("code is not table-backed; materialise it first");
    std::vector<std::pair<Word, char>> rows(table->begin(), table->end());
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& [window, letter] : rows) {
        out += window;
        out += " -> ";
        out += letter;
        out += '\n';
    }
    return out;
}

SlidingBlockCode import_table(std::string_view text, std::string provenance) {
    RuleTable table;
    std::optional<std::size_t> width;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string window, arrow, letter;
        if (!(fields >> window >> arrow >> letter) || arrow != "->" || letter.size() != 1)
            throw SyntaxError("expected 'window -> letter' on line " + std::to_string(line_no));
        if (window.size() % 2 == 0) throw SyntaxError("window of even length on line " + std::to_string(line_no));
        if (width && *width != window.size()) throw SyntaxError("mixed window lengths on line " + std::to_string(line_no));
        width = window.size();
        if (!table.emplace(window, letter[0]).second)
            throw SyntaxError("duplicate window on line " + std::to_string(line_no));
    }
    if (!width) throw SyntaxError("empty rule table");
    return SlidingBlockCode::from_table((*width - 1) / 2, std::move(table), std::move(provenance));
}

char symbol(std::size_t i) {
    static constexpr std::string_view digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    if (i >= digits.size()) throw InvalidArgument("at most 36 symbols are supported");
    return digits[i];
}

std::size_t symbol_index(char c) {
    if (c >= '0' && c <= '9') return static_cast<std::size_t>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<std::size_t>(c - 'a') + 10;
    throw InvalidArgument(std::string("not a symbol: '") + c + "'");
}

SlidingBlockCode symbol_code(std::size_t symbols, std::size_t radius, const std::function<char(std::string_view)>& rule,
                             std::string provenance) {
    if (symbols == 0) throw InvalidArgument("symbol code needs at least one symbol");
    RuleTable table;
    const std::size_t size = 2 * radius + 1;
    Word window(size, symbol(0));
    std::vector<std::size_t> digits(size, 0);
    while (true) {
        const char out = rule(window);
        if (symbol_index(out) >= symbols) throw InvalidArgument("symbol rule leaves the symbol set");
        table.emplace(window, out);
        std::size_t k = 0;
        while (k < size && ++digits[k] == symbols) {
            digits[k] = 0;
            window[k] = symbol(0);
            ++k;
        }
        if (k == size) break;
        window[k] = symbol(digits[k]);
    }
    return SlidingBlockCode::from_table(radius, std::move(table), std::move(provenance));
}

SlidingBlockCode symbol_permutation(const std::string& images, std::string provenance) {
    return symbol_code(images.size(), 0, [images](std::string_view w) { return images[symbol_index(w[0])]; },
                       std::move(provenance));
}

SlidingBlockCode left_shift(std::size_t symbols) {
    return symbol_code(symbols, 1, [](std::string_view w) { return w[2]; }, "left shift");
}

SlidingBlockCode right_shift(std::size_t symbols) {
    return symbol_code(symbols, 1, [](std::string_view w) { return w[0]; }, "right shift");
}

} // namespace rss
