#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "commkit/benchgen.hpp"
#include "commkit/pipelines.hpp"

namespace commkit {

/// One (framework, method, parameters, clustering) combination.
struct MethodSpec {
    std::string framework;  // node | spectral | repr | baseline
    std::string method;     // measure, embedding method, or baseline name
    MeasureParams measure_params;
    TrainConfig train_config;
    std::string clustering;  // single|complete|average|ward|genie; empty for baselines
    double gini_threshold = 0.1;

    std::string params_string() const;
    std::string display_name() const;
};

struct ExperimentRecord {
    std::string graph_id;
    std::string framework;
    std::string method;
    std::string params;
    std::string clustering;
    double gini_threshold = 0.0;
    int k = 0;
    std::optional<double> ari;
    std::optional<double> modularity_value;
    double time_s = 0.0;
    std::uint64_t seed = 0;
    std::string status;  // "ok" or an error tag
};

/// Runs one method on one graph. K is ignored by baselines (they pick their
/// own community count).
Partition run_method(const Graph& g, const MethodSpec& spec, std::size_t k, std::uint64_t seed);

/// The nine featured pipeline combinations.
std::vector<MethodSpec> selected_methods();
/// selected_methods() plus the three reference baselines.
std::vector<MethodSpec> default_roster();

/// Methods file: one combination per line,
///   framework method clustering [g=V] [key=V ...]
/// '#' starts a comment.
std::vector<MethodSpec> parse_methods_file(std::istream& in);

/// Runs every method on every SBM spec with `jobs` worker threads. Output
/// order (and content) is independent of the thread count.
std::vector<ExperimentRecord> run_benchmark(const std::vector<SbmSpec>& specs,
                                            const std::vector<MethodSpec>& methods, int jobs,
                                            std::uint64_t base_seed);

extern const char* const kCsvHeader;
void write_csv(const std::vector<ExperimentRecord>& records, std::ostream& out);
std::vector<ExperimentRecord> read_csv(std::istream& in);

/// Aggregates mean +- sd Rand score and time per method combination.
void write_report(const std::vector<ExperimentRecord>& records, std::ostream& out);

struct RealWorldRow {
    std::string method;
    std::optional<double> karate_ari;
    double karate_time_s = 0.0;
    std::optional<double> dolphins_modularity;
    int dolphins_k = 0;
    double dolphins_time_s = 0.0;
    std::string status;
};

/// Karate scored by ARI against the known split (K=2); Dolphins by the best
/// modularity over K in 2..8 (baselines pick their own K).
std::vector<RealWorldRow> run_realworld(std::uint64_t seed);
void write_realworld(const std::vector<RealWorldRow>& rows, std::ostream& out);

}  // namespace commkit
