#ifndef MSTD_CORPUS_HPP
#define MSTD_CORPUS_HPP

#include "mstd/integer_set.hpp"
#include "mstd/sumset.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mstd {

/// One explicit set as published: claimed size and the printed element list.
struct CorpusEntry
{
    std::string id;
    std::uint64_t claimed_cardinality = 0;
    /// Exactly as printed, repeated values included.
    std::vector<Element> raw_elements;
    std::string source;
};

struct CorpusFinding
{
    std::string id;
    std::uint64_t claimed_cardinality = 0;
    std::uint64_t actual_cardinality = 0;
    bool cardinality_matches = false;
    /// Values printed more than once, ascending.
    std::vector<Element> duplicates_in_print;
    Classification classification;
    /// Whether the pairwise reference computation gives the same verdict.
    bool oracle_agrees = false;
};

/**
 * Parses corpus text: blocks of `id:`, `claimed:`, `elements:` and
 * `source:` lines, separated by blank lines. Lines starting with '#' are
 * comments. Throws ParseError naming the offending line.
 */
auto parse_corpus(std::string_view text) -> std::vector<CorpusEntry>;

/// FNV-1a 64-bit hash, used to guard the embedded corpus against edits.
auto corpus_checksum(std::string_view text) -> std::uint64_t;

/// The embedded corpus text, verbatim.
auto embedded_corpus_text() -> std::string_view;

/// The Conway set followed by the thirteen large sets. Throws Error if the
/// embedded text fails its checksum.
auto corpus_entries() -> const std::vector<CorpusEntry> &;

/// Audits one entry. Mismatches are reported in the finding, never thrown.
auto validate_entry(const CorpusEntry & entry) -> CorpusFinding;

auto validate_corpus() -> std::vector<CorpusFinding>;

} // namespace mstd

#endif
