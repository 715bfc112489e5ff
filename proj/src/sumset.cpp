#include "mstd/sumset.hpp"
#include "mstd/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

namespace mstd {

auto to_string(Label label) -> std::string_view
{
    switch (label) {
        case Label::mstd: return "MSTD";
        case Label::balanced: return "balanced";
        case Label::difference_dominated: return "difference-dominated";
    }
    return "unknown";
}

auto make_classification(std::uint64_t sum_cardinality, std::uint64_t diff_cardinality) -> Classification
{
    Label label = Label::balanced;
    if (sum_cardinality > diff_cardinality)
        label = Label::mstd;
    else if (sum_cardinality < diff_cardinality)
        label = Label::difference_dominated;
    return { sum_cardinality, diff_cardinality, label };
}

namespace {
    using Word = std::uint64_t;
    constexpr unsigned bits_per_word = 64;

    auto checked_add(Element a, Element b) -> Element
    {
        Element r;
        if (__builtin_add_overflow(a, b, &r))
            throw OverflowError{ "sum " + std::to_string(a) + " + " + std::to_string(b) + " overflows int64" };
        return r;
    }

    auto checked_sub(Element a, Element b) -> Element
    {
        Element r;
        if (__builtin_sub_overflow(a, b, &r))
            throw OverflowError{ "difference " + std::to_string(a) + " - " + std::to_string(b) + " overflows int64" };
        return r;
    }

    auto checked_mul(Element a, Element b) -> Element
    {
        Element r;
        if (__builtin_mul_overflow(a, b, &r))
            throw OverflowError{ "product " + std::to_string(a) + " * " + std::to_string(b) + " overflows int64" };
        return r;
    }

    /// Growable-once dense bit vector; only the operations the accumulators need.
    class BitVector
    {
    public:
        explicit BitVector(std::uint64_t bits) : _words(bits / bits_per_word + 2, 0) {}

        auto set(std::uint64_t i) -> void { _words[i / bits_per_word] |= Word{ 1 } << (i % bits_per_word); }

        auto test(std::uint64_t i) const -> bool { return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1; }

        auto count() const -> std::uint64_t
        {
            std::uint64_t result = 0;
            for (auto w : _words)
                result += std::popcount(w);
            return result;
        }

        /// this |= other << shift
        auto or_shifted_left(const BitVector & other, std::uint64_t shift) -> void
        {
            auto q = shift / bits_per_word;
            auto r = shift % bits_per_word;
            for (std::size_t k = 0 ; k + q < _words.size() && k < other._words.size() ; ++k) {
                _words[k + q] |= other._words[k] << r;
                if (r != 0 && k + q + 1 < _words.size())
                    _words[k + q + 1] |= other._words[k] >> (bits_per_word - r);
            }
        }

        /// this |= other >> shift
        auto or_shifted_right(const BitVector & other, std::uint64_t shift) -> void
        {
            auto q = shift / bits_per_word;
            auto r = shift % bits_per_word;
            for (std::size_t k = 0 ; k < _words.size() && k + q < other._words.size() ; ++k) {
                Word w = other._words[k + q] >> r;
                if (r != 0 && k + q + 1 < other._words.size())
                    w |= other._words[k + q + 1] << (bits_per_word - r);
                _words[k] |= w;
            }
        }

        template <typename F>
        auto for_each_set_bit(F && f) const -> void
        {
            for (std::size_t k = 0 ; k < _words.size() ; ++k)
                for (Word w = _words[k] ; w != 0 ; w &= w - 1)
                    f(k * bits_per_word + static_cast<unsigned>(std::countr_zero(w)));
        }

    private:
        std::vector<Word> _words;
    };

    /// Sum bits indexed by (a - min) + (b - min); positive-difference bits
    /// indexed by b - a for b >= a. Bit 0 (the a == b terms) is not counted.
    struct DenseAccumulator
    {
        BitVector sums;
        BitVector positive_diffs;
    };

    auto accumulate_dense(const IntegerSet & set, std::uint64_t span) -> DenseAccumulator
    {
        DenseAccumulator acc{ BitVector{ 2 * span + 1 }, BitVector{ span + 1 } };
        auto elems = set.elements();
        auto n = elems.size();

        std::vector<std::uint64_t> offsets(n);
        for (std::size_t i = 0 ; i < n ; ++i)
            offsets[i] = static_cast<std::uint64_t>(elems[i]) - static_cast<std::uint64_t>(set.min());

        // Shift-or touches span/64 words per element; direct bit setting
        // touches n/2 bits per element on average.
        bool word_parallel = span / bits_per_word + 1 < (n + 1) / 2;
        if (word_parallel) {
            BitVector members{ span + 1 };
            for (auto o : offsets)
                members.set(o);
            for (auto o : offsets) {
                acc.sums.or_shifted_left(members, o);
                acc.positive_diffs.or_shifted_right(members, o);
            }
        }
        else {
            for (std::size_t i = 0 ; i < n ; ++i)
                for (std::size_t j = i ; j < n ; ++j) {
                    acc.sums.set(offsets[i] + offsets[j]);
                    acc.positive_diffs.set(offsets[j] - offsets[i]);
                }
        }
        return acc;
    }

    auto positive_diff_count(const DenseAccumulator & acc) -> std::uint64_t
    {
        // bit 0 is always set by the i == j terms
        return acc.positive_diffs.count() - (acc.positive_diffs.test(0) ? 1 : 0);
    }

    struct HashAccumulator
    {
        std::unordered_set<Element> sums;
        std::unordered_set<Element> positive_diffs;
    };

    enum class Want { sums, diffs, both };

    auto accumulate_hashed(const IntegerSet & set, Want want) -> HashAccumulator
    {
        HashAccumulator acc;
        auto elems = set.elements();
        auto n = elems.size();
        bool sums = want != Want::diffs;
        bool diffs = want != Want::sums;
        if (sums)
            acc.sums.reserve(n * (n + 1) / 2);
        if (diffs)
            acc.positive_diffs.reserve(n * (n - 1) / 2);
        for (std::size_t i = 0 ; i < n ; ++i)
            for (std::size_t j = i ; j < n ; ++j) {
                if (sums)
                    acc.sums.insert(checked_add(elems[i], elems[j]));
                if (diffs && j != i)
                    acc.positive_diffs.insert(checked_sub(elems[j], elems[i]));
            }
        return acc;
    }

    auto check_sum_range(const IntegerSet & set) -> void
    {
        checked_add(set.min(), set.min());
        checked_add(set.max(), set.max());
    }

    auto check_diff_range(const IntegerSet & set) -> void
    {
        checked_sub(set.max(), set.min());
    }

    auto sorted(const std::unordered_set<Element> & values) -> std::vector<Element>
    {
        std::vector<Element> out(values.begin(), values.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    auto mirrored_with_zero(const std::vector<Element> & positives) -> std::vector<Element>
    {
        std::vector<Element> out;
        out.reserve(2 * positives.size() + 1);
        for (auto it = positives.rbegin() ; it != positives.rend() ; ++it)
            out.push_back(-*it);
        out.push_back(0);
        out.insert(out.end(), positives.begin(), positives.end());
        return out;
    }
}

auto sumset(const IntegerSet & set) -> IntegerSet
{
    if (set.empty())
        return {};
    check_sum_range(set);

    auto span = *set.span();
    if (span <= dense_span_limit) {
        auto acc = accumulate_dense(set, span);
        std::vector<Element> out;
        Element base = 2 * set.min();
        acc.sums.for_each_set_bit([&] (std::uint64_t i) { out.push_back(base + static_cast<Element>(i)); });
        return IntegerSet::from_sorted_unique(std::move(out));
    }
    return IntegerSet::from_sorted_unique(sorted(accumulate_hashed(set, Want::sums).sums));
}

auto diffset(const IntegerSet & set) -> IntegerSet
{
    if (set.empty())
        return {};
    check_diff_range(set);

    auto span = *set.span();
    std::vector<Element> positives;
    if (span <= dense_span_limit) {
        auto acc = accumulate_dense(set, span);
        acc.positive_diffs.for_each_set_bit([&] (std::uint64_t i) {
            if (i != 0)
                positives.push_back(static_cast<Element>(i));
        });
    }
    else
        positives = sorted(accumulate_hashed(set, Want::diffs).positive_diffs);
    return IntegerSet::from_sorted_unique(mirrored_with_zero(positives));
}

auto classify(const IntegerSet & set) -> Classification
{
    if (set.empty())
        return make_classification(0, 0);
    check_sum_range(set);
    check_diff_range(set);

    auto span = *set.span();
    if (span <= dense_span_limit) {
        auto acc = accumulate_dense(set, span);
        return make_classification(acc.sums.count(), 2 * positive_diff_count(acc) + 1);
    }
    auto acc = accumulate_hashed(set, Want::both);
    return make_classification(acc.sums.size(), 2 * acc.positive_diffs.size() + 1);
}

auto normalize(const IntegerSet & set) -> IntegerSet
{
    if (set.empty())
        throw DomainError{ "normalize: the empty set has no minimum" };
    check_diff_range(set);
    std::vector<Element> out;
    out.reserve(set.size());
    for (auto a : set.elements())
        out.push_back(a - set.min());
    return IntegerSet::from_sorted_unique(std::move(out));
}

auto reflect(const IntegerSet & set) -> IntegerSet
{
    if (set.empty())
        throw DomainError{ "reflect: the empty set has no extremes" };
    // min + (max - a) always lies in [min, max]; unsigned arithmetic keeps
    // the intermediate well defined even when the span exceeds INT64_MAX.
    auto lo = static_cast<std::uint64_t>(set.min());
    auto hi = static_cast<std::uint64_t>(set.max());
    std::vector<Element> out;
    out.reserve(set.size());
    auto elems = set.elements();
    for (auto it = elems.rbegin() ; it != elems.rend() ; ++it)
        out.push_back(static_cast<Element>(lo + (hi - static_cast<std::uint64_t>(*it))));
    return IntegerSet::from_sorted_unique(std::move(out));
}

auto translate(const IntegerSet & set, Element shift) -> IntegerSet
{
    std::vector<Element> out;
    out.reserve(set.size());
    for (auto a : set.elements())
        out.push_back(checked_add(a, shift));
    return IntegerSet::from_sorted_unique(std::move(out));
}

auto dilate(const IntegerSet & set, Element factor) -> IntegerSet
{
    if (factor == 0)
        throw DomainError{ "dilate: factor must be nonzero" };
    std::vector<Element> out;
    out.reserve(set.size());
    for (auto a : set.elements())
        out.push_back(checked_mul(a, factor));
    if (factor < 0)
        std::reverse(out.begin(), out.end());
    return IntegerSet::from_sorted_unique(std::move(out));
}

auto naive_sumset_and_diffset(const IntegerSet & set) -> std::pair<IntegerSet, IntegerSet>
{
    auto a = set.elements();
    auto n = a.size();

    std::vector<Element> sums;
    for (std::size_t i = 0 ; i < n ; ++i)
        for (std::size_t j = i ; j < n ; ++j)
            sums.push_back(checked_add(a[i], a[j]));

    std::vector<Element> diffs;
    if (n != 0)
        diffs.push_back(0);
    for (std::size_t i = 0 ; i < n ; ++i)
        for (std::size_t j = 0 ; j < n ; ++j)
            if (i != j)
                diffs.push_back(checked_sub(a[j], a[i]));

    for (auto * list : { &sums, &diffs }) {
        std::sort(list->begin(), list->end());
        list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    return { IntegerSet::from_sorted_unique(std::move(sums)), IntegerSet::from_sorted_unique(std::move(diffs)) };
}

auto classify_mask(std::uint64_t mask) -> Classification
{
    if (mask == 0)
        return make_classification(0, 0);

    unsigned __int128 sums = 0;
    std::uint64_t diffs = 0;
    for (auto m = mask ; m != 0 ; m &= m - 1) {
        auto o = static_cast<unsigned>(std::countr_zero(m));
        sums |= static_cast<unsigned __int128>(mask) << o;
        diffs |= mask >> o;
    }
    auto sum_card = static_cast<std::uint64_t>(std::popcount(static_cast<std::uint64_t>(sums))
            + std::popcount(static_cast<std::uint64_t>(sums >> 64)));
    // bit 0 of diffs is the zero difference
    auto diff_card = 2 * static_cast<std::uint64_t>(std::popcount(diffs) - 1) + 1;
    return make_classification(sum_card, diff_card);
}

} // namespace mstd
