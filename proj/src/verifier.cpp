#include "mstd/verifier.hpp"
#include "mstd/error.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace mstd {

namespace {
    auto counted_add(Element a, Element b, OpCounts & counts) -> Element
    {
        ++counts.additions;
        Element r;
        if (__builtin_add_overflow(a, b, &r))
            throw OverflowError{ "sum " + std::to_string(a) + " + " + std::to_string(b) + " overflows int64" };
        return r;
    }

    auto counted_sub(Element a, Element b, OpCounts & counts) -> Element
    {
        ++counts.subtractions;
        Element r;
        if (__builtin_sub_overflow(a, b, &r))
            throw OverflowError{ "difference " + std::to_string(a) + " - " + std::to_string(b) + " overflows int64" };
        return r;
    }

    auto eliminate_duplicates(std::vector<Element> & values, OpCounts & counts) -> void
    {
        std::sort(values.begin(), values.end(), [&] (Element a, Element b) {
            ++counts.comparisons;
            return a < b;
        });
        auto last = std::unique(values.begin(), values.end(), [&] (Element a, Element b) {
            ++counts.comparisons;
            return a == b;
        });
        values.erase(last, values.end());
    }

    /// ceil(log2(x)) for x >= 2
    auto ceil_log2(std::uint64_t x) -> std::uint64_t
    {
        return static_cast<std::uint64_t>(std::bit_width(x - 1));
    }

    auto magnitude(Element a) -> std::uint64_t
    {
        auto u = static_cast<std::uint64_t>(a);
        return a < 0 ? ~u + 1 : u;
    }
}

auto bit_cost_estimate(const IntegerSet & set) -> BitCost
{
    if (set.empty())
        throw DomainError{ "bit_cost_estimate: the empty set has no infimum" };

    auto n = static_cast<std::uint64_t>(set.size());

    auto k = magnitude(set.min());
    auto paper_log = std::max<std::uint64_t>(1, ceil_log2(std::max<std::uint64_t>(2, k)));

    auto largest = std::max(magnitude(set.min()), magnitude(set.max()));
    // 1 + |a| overflows only for |INT64_MIN| + 1 > 2^63, whose log is 64
    auto practical_log = largest >= (std::uint64_t{ 1 } << 63)
        ? std::uint64_t{ 64 }
        : std::max<std::uint64_t>(1, ceil_log2(largest + 1));

    return { n * n * paper_log, (3 * n * n - n) / 2 * practical_log };
}

auto verify(const IntegerSet & set) -> VerificationReport
{
    VerificationReport report{ set, {}, {}, {} };
    auto & counts = report.op_counts;
    auto a = set.elements();
    auto n = a.size();

    // step 1
    std::vector<Element> sums;
    sums.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0 ; i < n ; ++i)
        for (std::size_t j = i ; j < n ; ++j)
            sums.push_back(counted_add(a[i], a[j], counts));

    // step 2: a_i - a_i = 0 is known without computing it
    std::vector<Element> diffs;
    diffs.reserve(n * (n - 1) + 1);
    if (n != 0)
        diffs.push_back(0);
    for (std::size_t i = 0 ; i < n ; ++i)
        for (std::size_t j = 0 ; j < n ; ++j)
            if (j != i)
                diffs.push_back(counted_sub(a[i], a[j], counts));

    // step 3
    eliminate_duplicates(sums, counts);
    eliminate_duplicates(diffs, counts);

    // steps 4-6
    ++counts.comparisons;
    report.classification = make_classification(sums.size(), diffs.size());

    if (n != 0)
        report.bit_cost = bit_cost_estimate(set);
    return report;
}

} // namespace mstd
