#ifndef MSTD_SUMSET_HPP
#define MSTD_SUMSET_HPP

#include "mstd/integer_set.hpp"

#include <cstdint>
#include <string_view>
#include <utility>

namespace mstd {

enum class Label
{
    mstd,
    balanced,
    difference_dominated,
};

auto to_string(Label label) -> std::string_view;

/// Verdict for one set: |A+A|, |A-A| and the resulting label.
struct Classification
{
    std::uint64_t sum_cardinality = 0;
    std::uint64_t diff_cardinality = 0;
    Label label = Label::balanced;

    auto operator==(const Classification &) const -> bool = default;
};

/// Labels a pair of cardinalities.
auto make_classification(std::uint64_t sum_cardinality, std::uint64_t diff_cardinality) -> Classification;

/// Spans up to this size use the dense bit-vector accumulator; larger spans
/// fall back to hashing.
inline constexpr std::uint64_t dense_span_limit = std::uint64_t{ 1 } << 22;

/// A+A. Throws OverflowError if any sum leaves the 64-bit range.
auto sumset(const IntegerSet & set) -> IntegerSet;

/// A-A. Throws OverflowError if any difference leaves the 64-bit range.
auto diffset(const IntegerSet & set) -> IntegerSet;

/// Cardinalities and label without materialising the two sets.
auto classify(const IntegerSet & set) -> Classification;

/// Translates so the minimum is 0. Throws DomainError on the empty set and
/// OverflowError if the span does not fit in a signed 64-bit value.
auto normalize(const IntegerSet & set) -> IntegerSet;

/// {min + max - a : a in A}. Throws DomainError on the empty set.
auto reflect(const IntegerSet & set) -> IntegerSet;

/// {a + shift : a in A}, overflow checked.
auto translate(const IntegerSet & set, Element shift) -> IntegerSet;

/// {factor * a : a in A}, overflow checked. factor must be nonzero.
auto dilate(const IntegerSet & set, Element factor) -> IntegerSet;

/**
 * Reference computation of (A+A, A-A): literal pairwise loops into a list,
 * then an explicit sort-and-unique pass to eliminate duplicates. Slow but
 * obviously correct; used as the oracle for the fast paths.
 */
auto naive_sumset_and_diffset(const IntegerSet & set) -> std::pair<IntegerSet, IntegerSet>;

/**
 * Classification of the subset of [0, 63] whose members are the set bits of
 * mask. Word-parallel shift-or: each element contributes one shifted copy
 * of the mask to the sum bits and one to the positive-difference bits.
 */
auto classify_mask(std::uint64_t mask) -> Classification;

} // namespace mstd

#endif
