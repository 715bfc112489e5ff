#ifndef MSTD_JSON_HPP
#define MSTD_JSON_HPP

#include "mstd/corpus.hpp"
#include "mstd/search.hpp"
#include "mstd/verifier.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace mstd {

// Flat object: elements, n, sum_cardinality, diff_cardinality, label,
// additions, subtractions, comparisons, bit_cost_paper, bit_cost_practical.
auto to_json(const VerificationReport & report) -> nlohmann::ordered_json;

auto to_json(const EnumerationReport & report) -> nlohmann::ordered_json;
auto to_json(const LargestResult & result) -> nlohmann::ordered_json;
auto to_json(const MonteCarloReport & report) -> nlohmann::ordered_json;
auto to_json(const SeriesRow & row) -> nlohmann::ordered_json;
auto to_json(const CorpusFinding & finding) -> nlohmann::ordered_json;

/// Shortest decimal text that reads back as the same double.
auto format_double(double value) -> std::string;

} // namespace mstd

#endif
