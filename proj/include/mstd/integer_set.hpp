#ifndef MSTD_INTEGER_SET_HPP
#define MSTD_INTEGER_SET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mstd {

using Element = std::int64_t;

/**
 * A finite set of signed 64-bit integers, stored as a strictly increasing
 * sequence. Instances are immutable once built, so they may be shared
 * freely between threads.
 */
class IntegerSet
{
public:
    IntegerSet() = default;

    /// Builds from values that the caller guarantees are strictly increasing.
    /// Checked in debug builds only.
    static auto from_sorted_unique(std::vector<Element> elements) -> IntegerSet;

    auto elements() const noexcept -> std::span<const Element> { return _elements; }
    auto size() const noexcept -> std::size_t { return _elements.size(); }
    auto empty() const noexcept -> bool { return _elements.empty(); }

    /// Smallest element. Precondition: nonempty.
    auto min() const -> Element { return _elements.front(); }
    /// Largest element. Precondition: nonempty.
    auto max() const -> Element { return _elements.back(); }

    /// max - min, or nothing for the empty set. Unsigned because the span of
    /// a set holding both extremes of the 64-bit range exceeds INT64_MAX.
    auto span() const noexcept -> std::optional<std::uint64_t>;

    auto contains(Element value) const -> bool;

    auto operator==(const IntegerSet &) const -> bool = default;
    auto operator<=>(const IntegerSet &) const = default;

private:
    explicit IntegerSet(std::vector<Element> elements) : _elements(std::move(elements)) {}

    std::vector<Element> _elements;
};

/// Result of canonicalising a raw list of values.
struct MadeSet
{
    IntegerSet set;
    std::size_t duplicates_dropped = 0;
};

/// Sorts and deduplicates, reporting how many repeated values were removed.
auto make_set(std::span<const Element> raw) -> MadeSet;

/**
 * Parses the set text format: decimal integers separated by commas, with
 * optional whitespace and optional surrounding braces, e.g.
 * "{0, 2, 3, 4, 7, 11, 12, 14}". An empty string or "{}" is the empty list.
 * Values are returned as written; duplicates are kept.
 *
 * Throws ParseError on malformed text or values outside the 64-bit range.
 */
auto parse_set_text(std::string_view text) -> std::vector<Element>;

/// Renders "{a, b, c}".
auto format_set(std::span<const Element> elements) -> std::string;
auto format_set(const IntegerSet & set) -> std::string;

} // namespace mstd

#endif
