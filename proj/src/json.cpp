#include "mstd/json.hpp"

#include <charconv>

namespace mstd {

using nlohmann::ordered_json;

namespace {
    auto elements_json(const IntegerSet & set) -> ordered_json
    {
        auto out = ordered_json::array();
        for (auto a : set.elements())
            out.push_back(a);
        return out;
    }
}

auto format_double(double value) -> std::string
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

auto to_json(const VerificationReport & report) -> ordered_json
{
    return {
        { "elements", elements_json(report.set) },
        { "n", report.set.size() },
        { "sum_cardinality", report.classification.sum_cardinality },
        { "diff_cardinality", report.classification.diff_cardinality },
        { "label", to_string(report.classification.label) },
        { "additions", report.op_counts.additions },
        { "subtractions", report.op_counts.subtractions },
        { "comparisons", report.op_counts.comparisons },
        { "bit_cost_paper", report.bit_cost.paper_model },
        { "bit_cost_practical", report.bit_cost.practical_model },
    };
}

auto to_json(const EnumerationReport & report) -> ordered_json
{
    auto by_card = ordered_json::object();
    for (auto [c, count] : report.mstd_count_by_cardinality)
        by_card[std::to_string(c)] = count;
    return {
        { "N", report.n },
        { "total_subsets", report.total_subsets },
        { "mstd_count", report.mstd_count },
        { "mstd_count_by_cardinality", by_card },
        { "probability_exact", std::to_string(report.probability_numerator) + "/"
            + std::to_string(report.probability_denominator) },
        { "probability", report.probability() },
    };
}

auto to_json(const LargestResult & result) -> ordered_json
{
    return {
        { "N", result.n },
        { "max_cardinality", result.max_cardinality ? ordered_json(*result.max_cardinality) : ordered_json(nullptr) },
        { "witness", result.witness ? elements_json(*result.witness) : ordered_json(nullptr) },
        { "candidates_scheduled", result.candidates_scheduled },
    };
}

auto to_json(const MonteCarloReport & report) -> ordered_json
{
    return {
        { "N", report.n },
        { "trials", report.trials },
        { "seed", report.seed },
        { "generator", report.generator },
        { "hits", report.hits },
        { "estimate", report.estimate },
        { "std_error", report.std_error },
    };
}

auto to_json(const SeriesRow & row) -> ordered_json
{
    return {
        { "N", row.n },
        { "method", row.method },
        { "estimate", row.estimate },
        { "std_error", row.std_error },
        { "seed", row.seed },
    };
}

auto to_json(const CorpusFinding & finding) -> ordered_json
{
    return {
        { "id", finding.id },
        { "claimed_cardinality", finding.claimed_cardinality },
        { "actual_cardinality", finding.actual_cardinality },
        { "cardinality_matches", finding.cardinality_matches },
        { "duplicates_in_print", finding.duplicates_in_print },
        { "sum_cardinality", finding.classification.sum_cardinality },
        { "diff_cardinality", finding.classification.diff_cardinality },
        { "label", to_string(finding.classification.label) },
        { "oracle_agrees", finding.oracle_agrees },
    };
}

} // namespace mstd
