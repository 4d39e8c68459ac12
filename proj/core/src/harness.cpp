#include "commkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "commkit/baselines.hpp"
#include "commkit/errors.hpp"
#include "commkit/metrics.hpp"
#include "commkit/rng.hpp"

namespace commkit {

namespace {

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string MethodSpec::params_string() const {
    std::ostringstream out;
    if (framework == "baseline") return "";
    if (method == "k_step") out << "k=" << measure_params.k_steps;
    if (method == "katz") out << "beta=" << measure_params.beta;
    if (method == "rooted_pagerank") out << "alpha=" << measure_params.alpha_rpr;
    if (method == "ppmi")
        out << "alpha=" << measure_params.ppmi_alpha << ";len=" << measure_params.ppmi_len;
    if (method == "blondel_gajardo") out << "iters=" << measure_params.bg_iters;
    if (framework == "repr") out << "dim=" << train_config.dim;
    return out.str();
}

std::string MethodSpec::display_name() const {
    if (framework == "baseline") return method;
    std::string name = framework + " " + clustering;
    if (clustering == "genie") name += "(" + format_double(gini_threshold) + ")";
    name += " " + method;
    const std::string params = params_string();
    if (!params.empty()) name += " [" + params + "]";
    return name;
}

Partition run_method(const Graph& g, const MethodSpec& spec, std::size_t k, std::uint64_t seed) {
    if (spec.framework == "baseline") {
        if (spec.method == "louvain") return louvain(g, seed);
        if (spec.method == "label_propagation") return label_propagation(g, seed);
        if (spec.method == "greedy_modularity") return greedy_modularity(g);
        throw ArgumentError("unknown baseline '" + spec.method + "'");
    }
    const ClusteringSpec clustering =
        ClusteringSpec::from_name(spec.clustering, spec.gini_threshold);
    if (spec.framework == "node")
        return detect_node(g, k, spec.method, spec.measure_params, clustering);
    if (spec.framework == "spectral")
        return detect_spectral(g, k, spec.method, spec.measure_params, clustering);
    if (spec.framework == "repr") {
        TrainConfig config = spec.train_config;
        config.seed = seed;
        return detect_representation(g, k, spec.method, config, clustering);
    }
    throw ArgumentError("unknown framework '" + spec.framework + "'");
}

std::vector<MethodSpec> selected_methods() {
    std::vector<MethodSpec> methods;
    auto add = [&](const std::string& fw, const std::string& method,
                   const std::string& clustering, double g) -> MethodSpec& {
        MethodSpec spec;
        spec.framework = fw;
        spec.method = method;
        spec.clustering = clustering;
        spec.gini_threshold = g;
        methods.push_back(spec);
        return methods.back();
    };
    add("node", "ppmi", "genie", 0.1).measure_params.ppmi_alpha = 1.0;
    add("node", "wasserman_faust", "genie", 0.1);
    add("node", "ppmi", "average", 0.1).measure_params.ppmi_alpha = 1.0;
    add("node", "rooted_pagerank", "average", 0.1).measure_params.alpha_rpr = 0.3;
    add("spectral", "k_step", "genie", 0.1).measure_params.k_steps = 5;
    add("spectral", "katz", "ward", 0.1).measure_params.beta = 0.3;
    add("repr", "dngr", "genie", 0.1).train_config.dim = 6;
    add("repr", "dngr", "ward", 0.1).train_config.dim = 6;
    add("repr", "node2vec", "ward", 0.1).train_config.dim = 6;
    return methods;
}

std::vector<MethodSpec> default_roster() {
    std::vector<MethodSpec> methods = selected_methods();
    for (const char* baseline : {"louvain", "label_propagation", "greedy_modularity"}) {
        MethodSpec spec;
        spec.framework = "baseline";
        spec.method = baseline;
        methods.push_back(spec);
    }
    return methods;
}

std::vector<MethodSpec> parse_methods_file(std::istream& in) {
    std::vector<MethodSpec> methods;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        MethodSpec spec;
        if (!(ls >> spec.framework)) continue;  // blank line
        if (spec.framework == "baseline") {
            if (!(ls >> spec.method))
                throw ParseError("methods file line " + std::to_string(lineno) +
                                 ": baseline needs a name");
        } else {
            if (!(ls >> spec.method >> spec.clustering))
                throw ParseError("methods file line " + std::to_string(lineno) +
                                 ": expected framework method clustering");
        }
        std::string kv;
        while (ls >> kv) {
            if (kv == "-") continue;  // placeholder for "no parameters"
            const std::size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw ParseError("methods file line " + std::to_string(lineno) +
                                 ": expected key=value, got '" + kv + "'");
            const std::string key = kv.substr(0, eq);
            const double value = std::stod(kv.substr(eq + 1));
            if (key == "g")
                spec.gini_threshold = value;
            else if (key == "ksteps")
                spec.measure_params.k_steps = static_cast<std::size_t>(value);
            else if (key == "beta")
                spec.measure_params.beta = value;
            else if (key == "alpha")
                spec.measure_params.alpha_rpr = value;
            else if (key == "ppmi_alpha")
                spec.measure_params.ppmi_alpha = value;
            else if (key == "ppmi_len")
                spec.measure_params.ppmi_len = static_cast<std::size_t>(value);
            else if (key == "bg_iters")
                spec.measure_params.bg_iters = static_cast<std::size_t>(value);
            else if (key == "dim")
                spec.train_config.dim = static_cast<std::size_t>(value);
            else
                throw ParseError("methods file line " + std::to_string(lineno) +
                                 ": unknown key '" + key + "'");
        }
        methods.push_back(spec);
    }
    return methods;
}

std::vector<ExperimentRecord> run_benchmark(const std::vector<SbmSpec>& specs,
                                            const std::vector<MethodSpec>& methods, int jobs,
                                            std::uint64_t base_seed) {
    const std::size_t total = specs.size() * methods.size();
    std::vector<ExperimentRecord> records(total);
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            const SbmSpec& sbm = specs[idx / methods.size()];
            const MethodSpec& method = methods[idx % methods.size()];
            const std::uint64_t run_seed = derive_seed(base_seed, idx);

            const LabeledGraph lg = generate_sbm(sbm);
            ExperimentRecord rec;
            rec.graph_id = sbm.id();
            rec.framework = method.framework;
            rec.method = method.method;
            rec.params = method.params_string();
            rec.clustering = method.clustering;
            rec.gini_threshold = (method.clustering == "genie") ? method.gini_threshold : 0.0;
            rec.seed = run_seed;
            const std::size_t truth_k = static_cast<std::size_t>(lg.ground_truth.k);
            const auto start = std::chrono::steady_clock::now();
            try {
                const Partition found = run_method(lg.graph, method, truth_k, run_seed);
                rec.time_s = elapsed_seconds(start);
                rec.k = found.k;
                rec.ari = adjusted_rand(lg.ground_truth, found);
                rec.modularity_value = modularity(lg.graph, found);
                rec.status = "ok";
            } catch (const MethodUndefinedError&) {
                rec.time_s = elapsed_seconds(start);
                rec.status = "method_undefined";
            } catch (const std::exception& e) {
                rec.time_s = elapsed_seconds(start);
                rec.status = "error";
            }
            records[idx] = std::move(rec);
        }
    };

    const int n_threads = std::max(1, jobs);
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return records;
}

const char* const kCsvHeader =
    "graph_id,framework,method,params,clustering,g,k,ari,modularity,time_s,seed,status";

void write_csv(const std::vector<ExperimentRecord>& records, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const ExperimentRecord& r : records) {
        out << r.graph_id << ',' << r.framework << ',' << r.method << ',' << r.params << ','
            << r.clustering << ',' << format_double(r.gini_threshold) << ',' << r.k << ',';
        if (r.ari) out << format_double(*r.ari);
        out << ',';
        if (r.modularity_value) out << format_double(*r.modularity_value);
        out << ',' << format_double(r.time_s) << ',' << r.seed << ',' << r.status << '\n';
    }
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
    std::vector<ExperimentRecord> records;
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw ParseError("read_csv: missing or unexpected header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        while (fields.size() < 12) fields.emplace_back();
        ExperimentRecord r;
        r.graph_id = fields[0];
        r.framework = fields[1];
        r.method = fields[2];
        r.params = fields[3];
        r.clustering = fields[4];
        r.gini_threshold = fields[5].empty() ? 0.0 : std::stod(fields[5]);
        r.k = fields[6].empty() ? 0 : std::stoi(fields[6]);
        if (!fields[7].empty()) r.ari = std::stod(fields[7]);
        if (!fields[8].empty()) r.modularity_value = std::stod(fields[8]);
        r.time_s = fields[9].empty() ? 0.0 : std::stod(fields[9]);
        r.seed = fields[10].empty() ? 0 : std::stoull(fields[10]);
        r.status = fields[11];
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

struct Aggregate {
    std::vector<double> aris;
    std::vector<double> times;
    std::size_t failures = 0;
};

std::pair<double, double> mean_sd(const std::vector<double>& xs) {
    if (xs.empty()) return {0.0, 0.0};
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size());
    return {mean, std::sqrt(var)};
}

}  // namespace

void write_report(const std::vector<ExperimentRecord>& records, std::ostream& out) {
    std::map<std::string, Aggregate> groups;
    for (const ExperimentRecord& r : records) {
        std::string key = r.framework + " | " + r.method;
        if (!r.params.empty()) key += " [" + r.params + "]";
        if (!r.clustering.empty()) {
            key += " | " + r.clustering;
            if (r.clustering == "genie") key += "(" + format_double(r.gini_threshold) + ")";
        }
        Aggregate& agg = groups[key];
        if (r.status == "ok") {
            if (r.ari) agg.aris.push_back(*r.ari);
            agg.times.push_back(r.time_s);
        } else {
            ++agg.failures;
        }
    }
    out << "method,rand_mean,rand_sd,time_mean_s,time_sd_s,runs,failures\n";
    for (const auto& [key, agg] : groups) {
        const auto [am, asd] = mean_sd(agg.aris);
        const auto [tm, tsd] = mean_sd(agg.times);
        out << '"' << key << "\"," << format_double(am) << ',' << format_double(asd) << ','
            << format_double(tm) << ',' << format_double(tsd) << ',' << agg.aris.size() << ','
            << agg.failures << '\n';
    }
}

std::vector<RealWorldRow> run_realworld(std::uint64_t seed) {
    const Graph karate = load_builtin("karate");
    const Partition karate_truth = *builtin_ground_truth("karate");
    const Graph dolphins = load_builtin("dolphins");

    std::vector<RealWorldRow> rows;
    std::uint64_t run = 0;
    for (const MethodSpec& method : default_roster()) {
        RealWorldRow row;
        row.method = method.display_name();
        row.status = "ok";
        try {
            auto start = std::chrono::steady_clock::now();
            const Partition found = run_method(karate, method, 2, derive_seed(seed, run++));
            row.karate_time_s = elapsed_seconds(start);
            row.karate_ari = adjusted_rand(karate_truth, found);

            start = std::chrono::steady_clock::now();
            if (method.framework == "baseline") {
                const Partition p = run_method(dolphins, method, 0, derive_seed(seed, run++));
                row.dolphins_modularity = modularity(dolphins, p);
                row.dolphins_k = p.k;
            } else {
                // no agreed ground truth: report the best-modularity cut over K=2..8
                double best = -2.0;
                const std::uint64_t dolphin_seed = derive_seed(seed, run++);
                for (std::size_t k = 2; k <= 8; ++k) {
                    const Partition p = run_method(dolphins, method, k, dolphin_seed);
                    const double q = modularity(dolphins, p);
                    if (q > best) {
                        best = q;
                        row.dolphins_k = static_cast<int>(k);
                    }
                }
                row.dolphins_modularity = best;
            }
            row.dolphins_time_s = elapsed_seconds(start);
        } catch (const std::exception& e) {
            row.status = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_realworld(const std::vector<RealWorldRow>& rows, std::ostream& out) {
    out << "method,karate_ari,karate_time_s,dolphins_modularity,dolphins_k,dolphins_time_s,"
           "status\n";
    for (const RealWorldRow& r : rows) {
        out << '"' << r.method << "\",";
        if (r.karate_ari) out << format_double(*r.karate_ari);
        out << ',' << format_double(r.karate_time_s) << ',';
        if (r.dolphins_modularity) out << format_double(*r.dolphins_modularity);
        out << ',' << r.dolphins_k << ',' << format_double(r.dolphins_time_s) << ','
            << (r.status == "ok" ? "ok" : "\"" + r.status + "\"") << '\n';
    }
}

}  // namespace commkit
