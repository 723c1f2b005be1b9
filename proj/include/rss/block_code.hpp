#pragma once

#include "rss/language.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>

namespace rss {

struct WindowHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

using RuleTable = std::unordered_map<Word, char, WindowHash, std::equal_to<>>;

class LocalRule {
public:
    virtual ~LocalRule() = default;
    virtual char operator()(std::string_view window) const = 0;
};

class SlidingBlockCode {
public:
    SlidingBlockCode(std::size_t radius, std::shared_ptr<const LocalRule> rule, std::string provenance);

    static SlidingBlockCode identity();
    static SlidingBlockCode from_function(std::size_t radius, std::function<char(std::string_view)> rule,
                                          std::string provenance, bool memoise = false);
    static SlidingBlockCode from_table(std::size_t radius, RuleTable table, std::string provenance);

    std::size_t radius() const noexcept { return radius_; }
    std::size_t window_size() const noexcept { return 2 * radius_ + 1; }
    const std::string& provenance() const noexcept { return provenance_; }

    char operator()(std::string_view window) const;

    // the rule table, when the code is table-backed
    const RuleTable* table() const noexcept;

private:
    std::size_t radius_;
    std::shared_ptr<const LocalRule> rule_;
    std::string provenance_;
};

Word apply_central(const SlidingBlockCode& code, std::string_view w);
Word apply_central(const SlidingBlockCode& code, const Language& lang, std::string_view w);

// windows read with wraparound; output has the same period
Word apply_cyclic(const SlidingBlockCode& code, std::string_view period);

// outer after inner
SlidingBlockCode compose(const SlidingBlockCode& outer, const SlidingBlockCode& inner);

// tabulate the rule over every legal window
SlidingBlockCode materialise(const SlidingBlockCode& code, const Language& lang, std::size_t cap = 5'000'000);

// "window -> letter" lines, windows sorted
std::string export_table(const SlidingBlockCode& code);
SlidingBlockCode import_table(std::string_view text, std::string provenance = "imported");

// codes on the full shift over the symbols '0', '1', ... used as index sequences
SlidingBlockCode symbol_code(std::size_t symbols, std::size_t radius, const std::function<char(std::string_view)>& rule,
                             std::string provenance);
SlidingBlockCode symbol_permutation(const std::string& images, std::string provenance);
SlidingBlockCode left_shift(std::size_t symbols);
SlidingBlockCode right_shift(std::size_t symbols);
char symbol(std::size_t i);
std::size_t symbol_index(char c);

} // namespace rss
