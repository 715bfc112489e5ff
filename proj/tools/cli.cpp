#include "cli.hpp"

#include "mstd/corpus.hpp"
#include "mstd/error.hpp"
#include "mstd/json.hpp"
#include "mstd/search.hpp"
#include "mstd/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

namespace mstd::cli {

namespace {
    enum class Format { text, json, csv };

    struct Config
    {
        Format format = Format::text;
        std::uint64_t trials = 1'000'000;
        std::uint64_t seed = 0;
        unsigned exact_cap = exact_enumeration_hard_cap;
        std::uint64_t node_budget = default_node_budget;
        // Deliberately never echoed: output must not depend on it.
        unsigned workers = 0;
    };

    /// Ordered key/value pairs for the text and csv renderings.
    using Record = std::vector<std::pair<std::string, std::string>>;

    auto csv_field(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    auto write_comment_lines(std::ostream & out, const Record & config) -> void
    {
        for (const auto & [k, v] : config)
            out << "# " << k << "=" << v << "\n";
    }

    auto write_csv_rows(std::ostream & out, const Record & config, const std::vector<Record> & rows) -> void
    {
        write_comment_lines(out, config);
        if (rows.empty())
            return;
        for (std::size_t i = 0 ; i < rows.front().size() ; ++i)
            out << (i ? "," : "") << csv_field(rows.front()[i].first);
        out << "\n";
        for (const auto & row : rows) {
            for (std::size_t i = 0 ; i < row.size() ; ++i)
                out << (i ? "," : "") << csv_field(row[i].second);
            out << "\n";
        }
    }

    auto write_text(std::ostream & out, const Record & record) -> void
    {
        for (const auto & [k, v] : record)
            out << k << ": " << v << "\n";
    }

    /// Renders a single flat result. JSON merges config keys in front.
    auto emit(std::ostream & out, Format format, const Record & config, const nlohmann::ordered_json & json,
            const Record & record) -> void
    {
        switch (format) {
            case Format::json: {
                nlohmann::ordered_json merged = nlohmann::ordered_json::object();
                for (const auto & [k, v] : config)
                    merged[k] = nlohmann::ordered_json::parse(v);
                for (const auto & [k, v] : json.items())
                    merged[k] = v;
                out << merged.dump(2) << "\n";
                break;
            }
            case Format::csv:
                write_csv_rows(out, config, { record });
                break;
            case Format::text:
                write_text(out, config);
                write_text(out, record);
                break;
        }
    }

    auto optional_text(const std::optional<unsigned> & v) -> std::string
    {
        return v ? std::to_string(*v) : std::string{ "NA" };
    }

    auto read_set_argument(const std::string & arg) -> std::vector<Element>
    {
        try {
            return parse_set_text(arg);
        }
        catch (const ParseError &) {
            std::error_code ec;
            if (! std::filesystem::is_regular_file(arg, ec))
                throw;
        }
        std::ifstream file{ arg };
        if (! file)
            throw Error{ "verify: cannot read " + arg };
        std::ostringstream contents;
        contents << file.rdbuf();
        return parse_set_text(contents.str());
    }

    auto cmd_verify(const Config & config, const std::string & input, std::ostream & out, std::ostream & err) -> int
    {
        auto raw = read_set_argument(input);
        auto made = make_set(raw);
        if (made.duplicates_dropped != 0)
            err << "warning: dropped " << made.duplicates_dropped << " duplicate value(s)\n";

        auto report = verify(made.set);
        auto json = to_json(report);
        Record record;
        record.emplace_back("elements", format_set(made.set));
        for (const auto & [k, v] : json.items())
            if (k != "elements")
                record.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
        emit(out, config.format, {}, json, record);
        return report.classification.label == Label::mstd ? exit_mstd : exit_not_mstd;
    }

    auto cmd_enumerate(const Config & config, unsigned n, std::ostream & out) -> int
    {
        auto report = enumerate_interval(n, { config.exact_cap, config.workers });
        Record cfg{ { "exact_cap", std::to_string(config.exact_cap) } };

        if (config.format == Format::csv) {
            cfg.emplace_back("N", std::to_string(report.n));
            cfg.emplace_back("total_subsets", std::to_string(report.total_subsets));
            cfg.emplace_back("mstd_count", std::to_string(report.mstd_count));
            std::vector<Record> rows;
            for (auto [c, count] : report.mstd_count_by_cardinality)
                rows.push_back({ { "cardinality", std::to_string(c) }, { "mstd_count", std::to_string(count) } });
            write_csv_rows(out, cfg, rows);
            return exit_ok;
        }

        std::string by_card;
        for (auto [c, count] : report.mstd_count_by_cardinality)
            by_card += (by_card.empty() ? "" : " ") + std::to_string(c) + ":" + std::to_string(count);
        Record record{
            { "N", std::to_string(report.n) },
            { "total_subsets", std::to_string(report.total_subsets) },
            { "mstd_count", std::to_string(report.mstd_count) },
            { "mstd_count_by_cardinality", by_card.empty() ? "none" : by_card },
            { "probability_exact", std::to_string(report.probability_numerator) + "/"
                + std::to_string(report.probability_denominator) },
            { "probability", format_double(report.probability()) },
        };
        emit(out, config.format, cfg, to_json(report), record);
        return exit_ok;
    }

    auto cmd_largest(const Config & config, unsigned n, bool no_pruning, std::ostream & out) -> int
    {
        SearchOptions options{ config.node_budget, ! no_pruning, config.workers };
        auto result = largest_mstd_cardinality(n, options);
        Record cfg{
            { "node_budget", std::to_string(config.node_budget) },
            { "reflection_pruning", options.reflection_pruning ? "true" : "false" },
        };
        Record record{
            { "N", std::to_string(result.n) },
            { "max_cardinality", optional_text(result.max_cardinality) },
            { "witness", result.witness ? format_set(*result.witness) : std::string{ "NA" } },
            { "candidates_scheduled", std::to_string(result.candidates_scheduled) },
        };
        emit(out, config.format, cfg, to_json(result), record);
        return exit_ok;
    }

    auto monte_carlo_record(const MonteCarloReport & report) -> Record
    {
        return {
            { "N", std::to_string(report.n) },
            { "trials", std::to_string(report.trials) },
            { "seed", std::to_string(report.seed) },
            { "generator", report.generator },
            { "hits", std::to_string(report.hits) },
            { "estimate", format_double(report.estimate) },
            { "std_error", format_double(report.std_error) },
        };
    }

    auto cmd_prob(const Config & config, unsigned n, std::ostream & out) -> int
    {
        auto report = mstd_probability_monte_carlo(n, config.trials, config.seed, config.workers);
        emit(out, config.format, {}, to_json(report), monte_carlo_record(report));
        return exit_ok;
    }

    auto cmd_series(const Config & config, unsigned n_min, unsigned n_max, std::ostream & out) -> int
    {
        auto rows = probability_series(n_min, n_max, { config.trials, config.seed, config.exact_cap, config.workers });
        Record cfg{
            { "N_min", std::to_string(n_min) },
            { "N_max", std::to_string(n_max) },
            { "trials", std::to_string(config.trials) },
            { "seed", std::to_string(config.seed) },
            { "exact_cap", std::to_string(config.exact_cap) },
            { "generator", std::string{ "\"" } + monte_carlo_generator + "\"" },
        };

        if (config.format == Format::json) {
            nlohmann::ordered_json doc = nlohmann::ordered_json::object();
            for (const auto & [k, v] : cfg)
                doc[k] = nlohmann::ordered_json::parse(v);
            doc["rows"] = nlohmann::ordered_json::array();
            for (const auto & row : rows)
                doc["rows"].push_back(to_json(row));
            out << doc.dump(2) << "\n";
            return exit_ok;
        }

        // Same table for csv and text; the header is what plotting tools expect.
        cfg.back().second = monte_carlo_generator;
        std::vector<Record> table;
        for (const auto & row : rows)
            table.push_back({
                { "N", std::to_string(row.n) },
                { "method", row.method },
                { "estimate", format_double(row.estimate) },
                { "std_error", format_double(row.std_error) },
            });
        write_csv_rows(out, cfg, table);
        return exit_ok;
    }

    auto cmd_corpus(const Config & config, std::ostream & out) -> int
    {
        auto findings = validate_corpus();
        switch (config.format) {
            case Format::json: {
                auto doc = nlohmann::ordered_json::array();
                for (const auto & f : findings)
                    doc.push_back(to_json(f));
                out << doc.dump(2) << "\n";
                break;
            }
            case Format::csv:
            case Format::text: {
                std::vector<Record> rows;
                for (const auto & f : findings) {
                    std::string dups;
                    for (auto d : f.duplicates_in_print)
                        dups += (dups.empty() ? "" : " ") + std::to_string(d);
                    rows.push_back({
                        { "id", f.id },
                        { "claimed", std::to_string(f.claimed_cardinality) },
                        { "actual", std::to_string(f.actual_cardinality) },
                        { "matches", f.cardinality_matches ? "yes" : "no" },
                        { "duplicates_in_print", dups },
                        { "sum_cardinality", std::to_string(f.classification.sum_cardinality) },
                        { "diff_cardinality", std::to_string(f.classification.diff_cardinality) },
                        { "label", std::string{ to_string(f.classification.label) } },
                        { "oracle_agrees", f.oracle_agrees ? "yes" : "no" },
                    });
                }
                write_csv_rows(out, {}, rows);
                break;
            }
        }
        return exit_ok;
    }
}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Verify, count and search MSTD (more sums than differences) sets", "mstd" };
    app.require_subcommand(1);

    Config config;
    std::map<std::string, Format> formats{ { "text", Format::text }, { "json", Format::json }, { "csv", Format::csv } };
    app.add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    app.add_option("--trials", config.trials, "Monte Carlo trials per N")->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Monte Carlo seed");
    app.add_option("--exact-cap", config.exact_cap, "Largest N enumerated exactly (at most 30)");
    app.add_option("--node-budget", config.node_budget, "Candidate budget for the largest-subset search");
    app.add_option("--workers", config.workers, "Worker threads (0 = one per hardware thread)");

    std::string set_input;
    auto verify_cmd = app.add_subcommand("verify", "Classify one set and count the verifier's operations");
    verify_cmd->add_option("set", set_input, "Set literal such as \"{0,2,3,4,7,11,12,14}\", or a file holding one")
        ->required();

    unsigned n = 0;
    auto enumerate_cmd = app.add_subcommand("enumerate", "Count MSTD subsets of {0..N-1} exactly");
    enumerate_cmd->add_option("N", n, "Interval length")->required();

    bool no_pruning = false;
    auto largest_cmd = app.add_subcommand("largest", "Largest MSTD subset of {0..N-1}");
    largest_cmd->add_option("N", n, "Interval length")->required();
    largest_cmd->add_flag("--no-pruning", no_pruning, "Disable reflection-symmetry pruning");

    auto prob_cmd = app.add_subcommand("prob", "Monte Carlo estimate of the MSTD probability on {0..N-1}");
    prob_cmd->add_option("N", n, "Interval length")->required();

    unsigned n_min = 0, n_max = 0;
    auto series_cmd = app.add_subcommand("series", "MSTD probability for each N in a range");
    series_cmd->add_option("N_min", n_min, "First interval length")->required();
    series_cmd->add_option("N_max", n_max, "Last interval length")->required();

    auto corpus_cmd = app.add_subcommand("corpus", "Validate the embedded explicit MSTD sets");

    for (auto * sub : app.get_subcommands([] (CLI::App *) { return true; }))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (verify_cmd->parsed())
            return cmd_verify(config, set_input, out, err);
        if (enumerate_cmd->parsed())
            return cmd_enumerate(config, n, out);
        if (largest_cmd->parsed())
            return cmd_largest(config, n, no_pruning, out);
        if (prob_cmd->parsed())
            return cmd_prob(config, n, out);
        if (series_cmd->parsed())
            return cmd_series(config, n_min, n_max, out);
        if (corpus_cmd->parsed())
            return cmd_corpus(config, out);
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

} // namespace mstd::cli
