#include "mstd/search.hpp"
#include "mstd/sumset.hpp"

#include "parallel.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>

namespace mstd {

namespace {
    using Mask = std::uint64_t;

    auto bit(unsigned i) -> Mask { return Mask{ 1 } << i; }

    auto interval_mask(unsigned n) -> Mask { return n >= 64 ? ~Mask{ 0 } : bit(n) - 1; }

    auto mask_to_set(Mask mask) -> IntegerSet
    {
        std::vector<Element> elems;
        for (auto m = mask ; m != 0 ; m &= m - 1)
            elems.push_back(std::countr_zero(m));
        return IntegerSet::from_sorted_unique(std::move(elems));
    }

    // ---- exact enumeration -------------------------------------------------

    /// Per-cardinality MSTD counts, indexed by cardinality.
    using CardinalityCounts = std::array<std::uint64_t, exact_enumeration_hard_cap + 1>;

    /**
     * Incremental state of a subset built by adding elements in increasing
     * order. reflected holds bit (63 - b) for each member b, so shifting it
     * right by 63 - a lines up every difference a - b at bit a - b.
     */
    struct PartialSubset
    {
        Mask members = 0;
        Mask reflected = 0;
        Mask sums = 0;
        Mask positive_diffs = 0;
        unsigned cardinality = 0;

        auto with(unsigned a) const -> PartialSubset
        {
            return {
                members | bit(a),
                reflected | bit(63 - a),
                sums | (members << a) | bit(2 * a),
                positive_diffs | (reflected >> (63 - a)),
                cardinality + 1
            };
        }

        auto is_mstd() const -> bool
        {
            return static_cast<unsigned>(std::popcount(sums)) > 2 * static_cast<unsigned>(std::popcount(positive_diffs)) + 1;
        }
    };

    auto enumerate_extensions(const PartialSubset & node, unsigned next, unsigned n, CardinalityCounts & counts) -> void
    {
        for (unsigned a = next ; a < n ; ++a) {
            auto child = node.with(a);
            if (child.is_mstd())
                ++counts[child.cardinality];
            enumerate_extensions(child, a + 1, n, counts);
        }
    }

    // ---- combinations in lexicographic order -------------------------------

    class BinomialTable
    {
    public:
        BinomialTable()
        {
            for (unsigned n = 0 ; n <= max_mask_interval ; ++n) {
                _c[n][0] = 1;
                for (unsigned k = 1 ; k <= n ; ++k)
                    _c[n][k] = _c[n - 1][k - 1] + (k <= n - 1 ? _c[n - 1][k] : 0);
            }
        }

        auto operator()(unsigned n, unsigned k) const -> std::uint64_t { return k > n ? 0 : _c[n][k]; }

    private:
        std::array<std::array<std::uint64_t, max_mask_interval + 1>, max_mask_interval + 1> _c{};
    };

    auto binomial(unsigned n, unsigned k) -> std::uint64_t
    {
        static const BinomialTable table;
        return table(n, k);
    }

    /// k-subsets of {0, ..., n-1} as sorted index arrays, lexicographic order.
    class Combination
    {
    public:
        /// Positions at the combination of the given lexicographic rank.
        Combination(unsigned n, unsigned k, std::uint64_t rank) : _n(n), _k(k)
        {
            unsigned x = 0;
            for (unsigned i = 0 ; i < k ; ++i) {
                while (true) {
                    auto below = binomial(n - 1 - x, k - 1 - i);
                    if (rank < below)
                        break;
                    rank -= below;
                    ++x;
                }
                _index[i] = x;
                _mask |= bit(x);
                ++x;
            }
        }

        auto mask() const -> Mask { return _mask; }

        auto advance() -> bool
        {
            unsigned i = _k;
            while (i > 0 && _index[i - 1] == _n - _k + i - 1)
                --i;
            if (i == 0)
                return false;
            --i;
            for (unsigned j = i ; j < _k ; ++j)
                _mask &= ~bit(_index[j]);
            ++_index[i];
            _mask |= bit(_index[i]);
            for (unsigned j = i + 1 ; j < _k ; ++j) {
                _index[j] = _index[j - 1] + 1;
                _mask |= bit(_index[j]);
            }
            return true;
        }

    private:
        unsigned _n, _k;
        std::array<unsigned, max_mask_interval> _index{};
        Mask _mask = 0;
    };

    auto reverse_bits(Mask x) -> Mask
    {
        x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
        x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
        x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
        return __builtin_bswap64(x);
    }

    /// For equal-size sets: the sorted sequence of a precedes that of b.
    auto lex_less(Mask a, Mask b) -> bool
    {
        auto d = a ^ b;
        return (a & d & (~d + 1)) != 0;
    }

    auto mirror(Mask mask, unsigned n) -> Mask { return reverse_bits(mask) >> (64 - n); }

    // ---- sampling ----------------------------------------------------------

    constexpr std::uint64_t trials_per_block = 1 << 16;

    auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    auto sample_is_mstd(std::mt19937_64 & rng, unsigned n) -> bool
    {
        if (n <= max_mask_interval)
            return classify_mask(rng() & interval_mask(n)).label == Label::mstd;

        std::vector<Element> elems;
        for (unsigned base = 0 ; base < n ; base += 64) {
            auto word = rng();
            for (unsigned b = 0 ; b < 64 && base + b < n ; ++b)
                if ((word >> b) & 1)
                    elems.push_back(base + b);
        }
        return classify(IntegerSet::from_sorted_unique(std::move(elems))).label == Label::mstd;
    }
}

auto enumerate_interval(unsigned n, const EnumerationOptions & options) -> EnumerationReport
{
    if (options.exact_cap > exact_enumeration_hard_cap)
        throw DomainError{ "enumerate: exact cap " + std::to_string(options.exact_cap)
            + " exceeds the hard cap of " + std::to_string(exact_enumeration_hard_cap) };
    if (n < 1 || n > options.exact_cap)
        throw DomainError{ "enumerate: N = " + std::to_string(n) + " is outside [1, "
            + std::to_string(options.exact_cap) + "] (exact enumeration cap)" };

    // Chunk c fixes membership of elements 0 .. prefix-1, element 0 as the
    // most significant bit of c, so chunks are contiguous ranges of subset
    // indices in that numbering.
    unsigned prefix = std::min(n, 12u);
    std::uint64_t chunks = std::uint64_t{ 1 } << prefix;

    CardinalityCounts totals{};
    std::mutex totals_mutex;

    detail::for_each_chunk(chunks, options.workers, [&] (std::uint64_t chunk) {
        CardinalityCounts counts{};
        PartialSubset node;
        for (unsigned e = 0 ; e < prefix ; ++e)
            if ((chunk >> (prefix - 1 - e)) & 1)
                node = node.with(e);
        if (node.cardinality != 0 && node.is_mstd())
            ++counts[node.cardinality];
        enumerate_extensions(node, prefix, n, counts);

        std::lock_guard lock{ totals_mutex };
        for (std::size_t i = 0 ; i < counts.size() ; ++i)
            totals[i] += counts[i];
    });

    EnumerationReport report;
    report.n = n;
    report.total_subsets = std::uint64_t{ 1 } << n;
    for (unsigned c = 0 ; c <= n ; ++c)
        if (totals[c] != 0) {
            report.mstd_count_by_cardinality[c] = totals[c];
            report.mstd_count += totals[c];
        }
    auto g = std::gcd(report.mstd_count, report.total_subsets);
    report.probability_numerator = report.mstd_count / g;
    report.probability_denominator = report.total_subsets / g;
    return report;
}

BudgetExceeded::BudgetExceeded(unsigned n, unsigned next_cardinality, std::uint64_t scheduled,
        std::uint64_t level_size, std::uint64_t budget) :
    Error{ "largest: node budget " + std::to_string(budget) + " exhausted at N = " + std::to_string(n)
        + ": cardinality " + std::to_string(next_cardinality) + " needs " + std::to_string(level_size)
        + " candidates after " + std::to_string(scheduled) + " already scheduled; no MSTD subset of cardinality > "
        + std::to_string(next_cardinality) + " exists" },
    n(n),
    next_cardinality(next_cardinality),
    candidates_scheduled(scheduled),
    level_size(level_size),
    node_budget(budget)
{
}

auto largest_mstd_cardinality(unsigned n, const SearchOptions & options) -> LargestResult
{
    if (n < 1 || n > max_mask_interval)
        throw DomainError{ "largest: N = " + std::to_string(n) + " is outside [1, "
            + std::to_string(max_mask_interval) + "]" };

    LargestResult result;
    result.n = n;

    for (unsigned c = n ; c >= 1 ; --c) {
        auto level = binomial(n, c);
        if (level > options.node_budget || result.candidates_scheduled > options.node_budget - level)
            throw BudgetExceeded{ n, c, result.candidates_scheduled, level, options.node_budget };
        result.candidates_scheduled += level;

        std::uint64_t chunk_size = std::max<std::uint64_t>(1024, level / 4096);
        std::uint64_t chunks = (level + chunk_size - 1) / chunk_size;

        // Earliest chunk holding a hit, and that chunk's first hit. Chunks
        // after it cannot improve on it and are skipped.
        std::atomic<std::uint64_t> best_chunk{ chunks };
        std::mutex witness_mutex;
        Mask best_witness = 0;

        detail::for_each_chunk(chunks, options.workers, [&] (std::uint64_t chunk) {
            if (chunk > best_chunk.load(std::memory_order_relaxed))
                return;
            auto begin = chunk * chunk_size;
            auto count = std::min(chunk_size, level - begin);
            Combination comb{ n, c, begin };
            for (std::uint64_t i = 0 ; i < count ; ++i, comb.advance()) {
                auto mask = comb.mask();
                if (options.reflection_pruning) {
                    auto m = mirror(mask, n);
                    if (lex_less(m, mask))
                        continue;
                }
                if (classify_mask(mask).label == Label::mstd) {
                    std::lock_guard lock{ witness_mutex };
                    if (chunk < best_chunk.load()) {
                        best_chunk = chunk;
                        best_witness = mask;
                    }
                    return;
                }
            }
        });

        if (best_chunk.load() != chunks) {
            result.max_cardinality = c;
            result.witness = mask_to_set(best_witness);
            return result;
        }
    }
    return result;
}

auto mstd_probability_monte_carlo(unsigned n, std::uint64_t trials, std::uint64_t seed, unsigned workers)
    -> MonteCarloReport
{
    if (n < 1)
        throw DomainError{ "prob: N must be at least 1" };
    if (trials < 1)
        throw DomainError{ "prob: trials must be at least 1" };

    auto blocks = (trials + trials_per_block - 1) / trials_per_block;
    std::atomic<std::uint64_t> hits{ 0 };

    detail::for_each_chunk(blocks, workers, [&] (std::uint64_t block) {
        std::mt19937_64 rng{ splitmix64(seed ^ splitmix64(block)) };
        auto count = std::min(trials_per_block, trials - block * trials_per_block);
        std::uint64_t local = 0;
        for (std::uint64_t t = 0 ; t < count ; ++t)
            if (sample_is_mstd(rng, n))
                ++local;
        hits += local;
    });

    MonteCarloReport report;
    report.n = n;
    report.trials = trials;
    report.seed = seed;
    report.hits = hits.load();
    report.estimate = static_cast<double>(report.hits) / static_cast<double>(trials);
    report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(trials));
    return report;
}

auto series_seed(std::uint64_t seed, unsigned n) -> std::uint64_t
{
    return splitmix64(seed + n);
}

auto probability_series(unsigned n_min, unsigned n_max, const SeriesOptions & options) -> std::vector<SeriesRow>
{
    if (n_min < 1 || n_min > n_max)
        throw DomainError{ "series: need 1 <= N_min <= N_max, got " + std::to_string(n_min) + ".."
            + std::to_string(n_max) };
    if (options.exact_cap > exact_enumeration_hard_cap)
        throw DomainError{ "series: exact cap " + std::to_string(options.exact_cap)
            + " exceeds the hard cap of " + std::to_string(exact_enumeration_hard_cap) };

    std::vector<SeriesRow> rows;
    for (unsigned n = n_min ; n <= n_max ; ++n) {
        if (n <= options.exact_cap) {
            auto report = enumerate_interval(n, { options.exact_cap, options.workers });
            rows.push_back({ n, "exact", report.probability(), 0.0, 0 });
        }
        else {
            auto s = series_seed(options.seed, n);
            auto report = mstd_probability_monte_carlo(n, options.trials, s, options.workers);
            rows.push_back({ n, "monte-carlo", report.estimate, report.std_error, s });
        }
        if (n == n_max)
            break;
    }
    return rows;
}

} // namespace mstd
