#include "rss/groups.hpp"

#include "rss/errors.hpp"

namespace rss {

BigInt factorial(std::size_t n) {
    BigInt out = 1;
    for (std::size_t k = 2; k <= n; ++k) out *= k;
    return out;
}

std::map<char, std::size_t> inflation_counts(const RandomSubstitution& sub, unsigned n, std::size_t cap) {
    std::map<char, std::size_t> counts;
    if (n == 0) {
        for (char c : sub.alphabet()) counts[c] = 1;
        return counts;
    }
    const RandomSubstitution level = power(sub, n, cap);
    for (char c : sub.alphabet()) counts[c] = level.images(c).size();
    return counts;
}

GroupOrderReport shuffle_group_order(const RandomSubstitution& sub, unsigned n, std::size_t cap) {
    GroupOrderReport report;
    report.level = n;
    report.counts = inflation_counts(sub, n, cap);
    report.shuffle_order = 1;
    report.alternating_order = 1;
    for (const auto& [letter, count] : report.counts) {
        const BigInt f = factorial(count);
        report.shuffle_order *= f;
        if (count >= 2) {
            report.alternating_order *= f / 2;
            ++report.nontrivial_letters;
        }
    }
    report.index_divisor = BigInt(1) << report.nontrivial_letters;
    report.alphabet_bound = BigInt(1) << sub.size();
    return report;
}

CountCheck thompson_count_check(unsigned n, unsigned max_level) {
    if (n == 0) throw InvalidArgument("level must be at least 1");
    if (n > max_level)
        throw SizeLimit("level " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(max_level));
    const RandomSubstitution cyclic = parse_substitution("alphabet: 0 1 2\n"
                                                         "0 -> 012 | 210\n"
                                                         "1 -> 120 | 021\n"
                                                         "2 -> 201 | 102\n");
    CountCheck out;
    out.computed = power(cyclic, n, std::size_t{1} << 24).images('0').size();
    std::size_t three = 1;
    for (unsigned k = 0; k < n; ++k) three *= 3;
    out.closed_form = BigInt(1) << ((three - 1) / 2);
    return out;
}

} // namespace rss
