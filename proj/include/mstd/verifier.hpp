#ifndef MSTD_VERIFIER_HPP
#define MSTD_VERIFIER_HPP

#include "mstd/integer_set.hpp"
#include "mstd/sumset.hpp"

#include <cstdint>

namespace mstd {

/// Arithmetic performed by one run of the instrumented verifier.
struct OpCounts
{
    std::uint64_t additions = 0;
    std::uint64_t subtractions = 0;
    /// Duplicate-elimination comparisons plus the final cardinality
    /// comparison. Depends on the sort implementation.
    std::uint64_t comparisons = 0;

    auto operator==(const OpCounts &) const -> bool = default;
};

struct BitCost
{
    /// n^2 * max(1, ceil(log2(max(2, |min A|))))
    std::uint64_t paper_model = 0;
    /// (3n^2 - n)/2 * max(1, ceil(log2(1 + max |a|)))
    std::uint64_t practical_model = 0;
};

struct VerificationReport
{
    IntegerSet set;
    Classification classification;
    OpCounts op_counts;
    BitCost bit_cost;
};

/**
 * Runs the brute-force verification procedure step by step:
 *
 *  1. a_i + a_j for every j >= i, appended to the sum list;
 *  2. a_j - a_i for every ordered pair i != j, appended to the difference
 *     list, with 0 recorded once without a subtraction;
 *  3. duplicates removed from both lists (sort, then adjacent compare);
 *  4. both lists counted;
 *  5-6. the counts compared, MSTD when |A+A| > |A-A|.
 *
 * For |A| = n this performs exactly n(n+1)/2 additions and n(n-1)
 * subtractions. The bit-cost fields are zero for the empty set.
 *
 * Throws OverflowError if any sum or difference leaves the 64-bit range.
 */
auto verify(const IntegerSet & set) -> VerificationReport;

/// Throws DomainError on the empty set.
auto bit_cost_estimate(const IntegerSet & set) -> BitCost;

} // namespace mstd

#endif
