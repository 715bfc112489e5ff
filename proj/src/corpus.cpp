#include "mstd/corpus.hpp"
#include "mstd/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace mstd {

namespace detail {
    extern const char embedded_corpus[];
}

namespace {
    constexpr std::uint64_t kCorpusChecksum = 0x99c71b2b2269e70fULL;

    auto trim(std::string_view s) -> std::string_view
    {
        auto first = s.find_first_not_of(" \t\r");
        if (first == std::string_view::npos)
            return {};
        auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    }

    struct PendingEntry
    {
        CorpusEntry entry;
        bool has_id = false, has_claimed = false, has_elements = false, has_source = false;
        std::size_t first_line = 0;

        auto started() const -> bool { return has_id || has_claimed || has_elements || has_source; }
    };

    auto finish(PendingEntry & pending, std::vector<CorpusEntry> & out) -> void
    {
        if (! pending.started())
            return;
        auto where = "corpus entry starting at line " + std::to_string(pending.first_line);
        if (! (pending.has_id && pending.has_claimed && pending.has_elements && pending.has_source))
            throw ParseError{ where + ": needs id, claimed, elements and source" };
        if (pending.entry.raw_elements.empty())
            throw ParseError{ where + ": element list is empty" };
        if (pending.entry.claimed_cardinality == 0)
            throw ParseError{ where + ": claimed cardinality must be positive" };
        out.push_back(std::move(pending.entry));
        pending = {};
    }
}

auto parse_corpus(std::string_view text) -> std::vector<CorpusEntry>
{
    std::vector<CorpusEntry> result;
    PendingEntry pending;
    std::size_t line_no = 0;

    while (! text.empty()) {
        auto eol = text.find('\n');
        auto line = trim(text.substr(0, eol));
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        if (line.empty()) {
            finish(pending, result);
            continue;
        }
        if (line.front() == '#')
            continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError{ "corpus line " + std::to_string(line_no) + ": expected 'key: value'" };
        auto key = trim(line.substr(0, colon));
        auto value = trim(line.substr(colon + 1));
        if (! pending.started())
            pending.first_line = line_no;

        auto duplicate_key = [&] (bool seen) {
            if (seen)
                throw ParseError{ "corpus line " + std::to_string(line_no) + ": repeated key '" + std::string{ key } + "'" };
        };

        if (key == "id") {
            duplicate_key(pending.has_id);
            pending.entry.id = value;
            pending.has_id = true;
        }
        else if (key == "claimed") {
            duplicate_key(pending.has_claimed);
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), pending.entry.claimed_cardinality);
            if (ec != std::errc{} || ptr != value.data() + value.size())
                throw ParseError{ "corpus line " + std::to_string(line_no) + ": bad claimed cardinality" };
            pending.has_claimed = true;
        }
        else if (key == "elements") {
            duplicate_key(pending.has_elements);
            try {
                pending.entry.raw_elements = parse_set_text(value);
            }
            catch (const ParseError & e) {
                throw ParseError{ "corpus line " + std::to_string(line_no) + ": " + e.what() };
            }
            pending.has_elements = true;
        }
        else if (key == "source") {
            duplicate_key(pending.has_source);
            pending.entry.source = value;
            pending.has_source = true;
        }
        else
            throw ParseError{ "corpus line " + std::to_string(line_no) + ": unknown key '" + std::string{ key } + "'" };
    }
    finish(pending, result);
    return result;
}

auto corpus_checksum(std::string_view text) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

auto embedded_corpus_text() -> std::string_view
{
    return detail::embedded_corpus;
}

auto corpus_entries() -> const std::vector<CorpusEntry> &
{
    static const std::vector<CorpusEntry> entries = [] {
        auto text = embedded_corpus_text();
        if (auto sum = corpus_checksum(text) ; sum != kCorpusChecksum) {
            std::ostringstream msg;
            msg << "embedded corpus checksum mismatch: got 0x" << std::hex << sum
                << ", expected 0x" << kCorpusChecksum;
            throw Error{ msg.str() };
        }
        return parse_corpus(text);
    }();
    return entries;
}

auto validate_entry(const CorpusEntry & entry) -> CorpusFinding
{
    CorpusFinding finding;
    finding.id = entry.id;
    finding.claimed_cardinality = entry.claimed_cardinality;

    auto made = make_set(entry.raw_elements);
    finding.actual_cardinality = made.set.size();
    finding.cardinality_matches = finding.actual_cardinality == entry.claimed_cardinality;

    auto printed = entry.raw_elements;
    std::sort(printed.begin(), printed.end());
    for (std::size_t i = 1 ; i < printed.size() ; ++i)
        if (printed[i] == printed[i - 1]
                && (finding.duplicates_in_print.empty() || finding.duplicates_in_print.back() != printed[i]))
            finding.duplicates_in_print.push_back(printed[i]);

    finding.classification = classify(made.set);
    auto [sums, diffs] = naive_sumset_and_diffset(made.set);
    finding.oracle_agrees = make_classification(sums.size(), diffs.size()) == finding.classification;
    return finding;
}

auto validate_corpus() -> std::vector<CorpusFinding>
{
    std::vector<CorpusFinding> findings;
    for (const auto & entry : corpus_entries())
        findings.push_back(validate_entry(entry));
    return findings;
}

} // namespace mstd
