#ifndef MSTD_TESTS_ORACLE_HPP
#define MSTD_TESTS_ORACLE_HPP

// Test-only reference implementations, independent of the library's code
// paths: std::set accumulation over every ordered pair, no bit tricks.

#include "mstd/integer_set.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace mstd::test {

struct BruteForce
{
    std::vector<Element> sums;
    std::vector<Element> diffs;
};

inline auto brute_force(const std::vector<Element> & a) -> BruteForce
{
    std::set<Element> sums, diffs;
    for (auto x : a)
        for (auto y : a) {
            sums.insert(x + y);
            diffs.insert(x - y);
        }
    return { { sums.begin(), sums.end() }, { diffs.begin(), diffs.end() } };
}

inline auto brute_force_is_mstd(const std::vector<Element> & a) -> bool
{
    auto r = brute_force(a);
    return r.sums.size() > r.diffs.size();
}

/// Random set of at most max_size distinct values in [lo, hi].
inline auto random_set(std::mt19937_64 & rng, std::size_t max_size, Element lo, Element hi, bool nonempty = false)
    -> IntegerSet
{
    std::uniform_int_distribution<std::size_t> size_dist(nonempty ? 1 : 0, max_size);
    std::uniform_int_distribution<Element> value_dist(lo, hi);
    std::vector<Element> raw;
    auto size = size_dist(rng);
    for (std::size_t i = 0 ; i < size ; ++i)
        raw.push_back(value_dist(rng));
    return make_set(raw).set;
}

inline auto to_vector(const IntegerSet & s) -> std::vector<Element>
{
    return { s.elements().begin(), s.elements().end() };
}

inline const std::vector<Element> conway{ 0, 2, 3, 4, 7, 11, 12, 14 };

} // namespace mstd::test

#endif
