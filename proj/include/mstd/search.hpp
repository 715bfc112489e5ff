#ifndef MSTD_SEARCH_HPP
#define MSTD_SEARCH_HPP

#include "mstd/error.hpp"
#include "mstd/integer_set.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mstd {

/// Exact enumeration is refused above this interval length.
inline constexpr unsigned exact_enumeration_hard_cap = 30;

/// Largest interval length the mask-based searches handle.
inline constexpr unsigned max_mask_interval = 64;

inline constexpr std::uint64_t default_node_budget = 10'000'000'000ULL;

/// Name of the pseudo-random generator recorded in Monte Carlo reports.
inline constexpr const char * monte_carlo_generator = "mt19937_64/splitmix64-blocks";

/// Worker count 0 means one per hardware thread. Results never depend on it.
struct EnumerationOptions
{
    unsigned exact_cap = exact_enumeration_hard_cap;
    unsigned workers = 0;
};

struct EnumerationReport
{
    unsigned n = 0;
    std::uint64_t total_subsets = 0;
    std::uint64_t mstd_count = 0;
    /// Only cardinalities with at least one MSTD subset appear.
    std::map<unsigned, std::uint64_t> mstd_count_by_cardinality;
    /// mstd_count / 2^n in lowest terms.
    std::uint64_t probability_numerator = 0;
    std::uint64_t probability_denominator = 1;

    auto probability() const -> double
    {
        return static_cast<double>(probability_numerator) / static_cast<double>(probability_denominator);
    }
};

/**
 * Classifies all 2^n subsets of {0, ..., n-1}. Throws DomainError unless
 * 1 <= n <= options.exact_cap, and unless exact_cap itself is at most
 * exact_enumeration_hard_cap.
 */
auto enumerate_interval(unsigned n, const EnumerationOptions & options = {}) -> EnumerationReport;

struct SearchOptions
{
    /// Upper bound on candidate subsets scheduled across all levels.
    std::uint64_t node_budget = default_node_budget;
    /// Skip a candidate whose mirror image within the interval is
    /// lexicographically smaller. Never changes the result.
    bool reflection_pruning = true;
    unsigned workers = 0;
};

struct LargestResult
{
    unsigned n = 0;
    std::optional<unsigned> max_cardinality;
    /// Lexicographically smallest MSTD subset of that cardinality.
    std::optional<IntegerSet> witness;
    /// Candidate subsets in every level that was scheduled.
    std::uint64_t candidates_scheduled = 0;
};

/// The search ran out of budget. Every cardinality above
/// next_cardinality was cleared: no MSTD subset of those sizes exists.
class BudgetExceeded : public Error
{
public:
    BudgetExceeded(unsigned n, unsigned next_cardinality, std::uint64_t scheduled, std::uint64_t level_size,
            std::uint64_t budget);

    unsigned n;
    unsigned next_cardinality;
    std::uint64_t candidates_scheduled;
    std::uint64_t level_size;
    std::uint64_t node_budget;
};

/**
 * Largest MSTD subset of {0, ..., n-1}, found by scanning cardinalities
 * n, n-1, ... and, within one cardinality, subsets in lexicographic order;
 * the first MSTD subset met is the witness. Requires 1 <= n <= 64.
 *
 * Before each level the whole level is charged against the budget, so an
 * abort is deterministic. Throws BudgetExceeded.
 */
auto largest_mstd_cardinality(unsigned n, const SearchOptions & options = {}) -> LargestResult;

struct MonteCarloReport
{
    unsigned n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string generator = monte_carlo_generator;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double std_error = 0.0;
};

/**
 * Samples subsets of {0, ..., n-1} by independent fair coin per element and
 * counts MSTD hits. Trials are split into fixed-size blocks, each with its
 * own generator seeded from (seed, block index), so the report is a pure
 * function of (n, trials, seed).
 */
auto mstd_probability_monte_carlo(unsigned n, std::uint64_t trials, std::uint64_t seed, unsigned workers = 0)
    -> MonteCarloReport;

struct SeriesOptions
{
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    unsigned exact_cap = exact_enumeration_hard_cap;
    unsigned workers = 0;
};

struct SeriesRow
{
    unsigned n = 0;
    std::string method;   // "exact" or "monte-carlo"
    double estimate = 0.0;
    double std_error = 0.0;
    /// Seed used for this row; zero for exact rows.
    std::uint64_t seed = 0;
};

/// Seed used for the Monte Carlo row at interval length n.
auto series_seed(std::uint64_t seed, unsigned n) -> std::uint64_t;

/// One row per n in [n_min, n_max]: exact up to options.exact_cap, sampled above.
auto probability_series(unsigned n_min, unsigned n_max, const SeriesOptions & options = {}) -> std::vector<SeriesRow>;

} // namespace mstd

#endif
