#pragma once

#include "rss/substitution.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>

namespace rss {

using BigInt = boost::multiprecision::cpp_int;

std::map<char, std::size_t> inflation_counts(const RandomSubstitution& sub, unsigned n,
                                             std::size_t cap = default_image_cap);

struct GroupOrderReport {
    unsigned level = 0;
    std::map<char, std::size_t> counts;
    BigInt shuffle_order;      // product of count!
    BigInt alternating_order;  // product of count!/2 over letters with count >= 2
    std::size_t nontrivial_letters = 0;
    BigInt index_divisor;      // 2^nontrivial_letters
    BigInt alphabet_bound;     // 2^(alphabet size)
};

GroupOrderReport shuffle_group_order(const RandomSubstitution& sub, unsigned n, std::size_t cap = default_image_cap);

struct CountCheck {
    BigInt computed;
    BigInt closed_form;
};

// letter 0 of the three-letter cyclic example: 2^((3^n - 1)/2) words at level n
CountCheck thompson_count_check(unsigned n, unsigned max_level = 3);

BigInt factorial(std::size_t n);

} // namespace rss
