// commkit command-line front end: single-run community detection, SBM
// benchmark sweeps, CSV reporting, and graph/matrix/embedding dumps.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commkit/baselines.hpp"
#include "commkit/benchgen.hpp"
#include "commkit/errors.hpp"
#include "commkit/harness.hpp"
#include "commkit/metrics.hpp"
#include "commkit/pipelines.hpp"

namespace {

using namespace commkit;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("COMMKIT_SEED")) return std::stoull(env);
    return 0;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open graph file '" + path + "'");
    return load_edge_list(in);
}

Partition load_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open truth file '" + path + "'");
    std::vector<std::pair<int, int>> pairs;
    int v, c;
    while (in >> v >> c) pairs.emplace_back(v, c);
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> labels;
    labels.reserve(pairs.size());
    for (auto& [vertex, label] : pairs) labels.push_back(label);
    return canonicalize(labels);
}

struct DetectOptions {
    std::string graph_path;
    std::string framework;
    std::string measure;
    std::string clustering = "average";
    std::size_t k = 0;
    std::string truth_path;
    std::string out_path = "partition.txt";
    MeasureParams measure_params;
    TrainConfig train_config;
    double gini_threshold = 0.1;
    std::string eig_pick = "largest";
    std::uint64_t seed = default_seed();
};

void add_method_flags(CLI::App* cmd, DetectOptions& opt) {
    cmd->add_option("--beta", opt.measure_params.beta, "Katz decay parameter");
    cmd->add_option("--alpha", opt.measure_params.alpha_rpr, "Rooted PageRank return probability");
    cmd->add_option("--ksteps", opt.measure_params.k_steps, "K-step walk length");
    cmd->add_option("--ppmi-alpha", opt.measure_params.ppmi_alpha,
                    "PPMI continuation probability");
    cmd->add_option("--ppmi-len", opt.measure_params.ppmi_len, "PPMI surf length");
    cmd->add_option("--bg-iters", opt.measure_params.bg_iters,
                    "Blondel-Gajardo iteration limit");
    cmd->add_option("--g", opt.gini_threshold, "Genie gini threshold");
    cmd->add_option("--dim", opt.train_config.dim, "embedding dimension");
    cmd->add_option("--epochs", opt.train_config.epochs, "training epochs (GF, DNGR)");
    cmd->add_option("--lr", opt.train_config.learning_rate, "learning rate (GF, DNGR)");
    cmd->add_option("--sgns-epochs", opt.train_config.sgns_epochs, "skip-gram corpus passes");
    cmd->add_option("--sgns-lr", opt.train_config.sgns_learning_rate,
                    "skip-gram initial learning rate");
    cmd->add_option("--walks", opt.train_config.walks_per_vertex, "walks per vertex");
    cmd->add_option("--walk-length", opt.train_config.walk_length, "walk length");
    cmd->add_option("--window", opt.train_config.window, "skip-gram window");
    cmd->add_option("--negatives", opt.train_config.negatives, "negative samples");
    cmd->add_option("--p", opt.train_config.p, "node2vec return bias");
    cmd->add_option("--q", opt.train_config.q, "node2vec in-out bias");
    cmd->add_option("--hidden", opt.train_config.hidden, "DNGR hidden layer size");
    cmd->add_option("--noise", opt.train_config.noise_prob, "DNGR corruption probability");
    cmd->add_option("--lambda", opt.train_config.lambda_reg, "GF regularisation");
    cmd->add_option("--grarep-order", opt.train_config.grarep_order, "GraRep order");
    cmd->add_option("--seed", opt.seed, "random seed");
}

int cmd_detect(const DetectOptions& opt) {
    const Graph g = load_graph(opt.graph_path);
    const ClusteringSpec clustering = ClusteringSpec::from_name(opt.clustering, opt.gini_threshold);

    Partition partition;
    if (opt.framework == "node") {
        partition = detect_node(g, opt.k, opt.measure, opt.measure_params, clustering);
    } else if (opt.framework == "spectral") {
        const EigPick pick = (opt.eig_pick == "smallest") ? EigPick::smallest : EigPick::largest;
        partition = detect_spectral(g, opt.k, opt.measure, opt.measure_params, clustering, pick);
    } else if (opt.framework == "repr") {
        TrainConfig config = opt.train_config;
        config.seed = opt.seed;
        partition = detect_representation(g, opt.k, opt.measure, config, clustering);
    } else {
        throw ArgumentError("unknown framework '" + opt.framework + "'");
    }

    std::ofstream out(opt.out_path);
    partition.dump(out);
    if (!opt.truth_path.empty()) {
        const Partition truth = load_truth(opt.truth_path);
        std::cout << "ari=" << adjusted_rand(truth, partition) << '\n';
    }
    std::cout << "modularity=" << modularity(g, partition) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"community detection via node similarity, spectral embedding, "
                 "representation learning, and hierarchical clustering"};
    app.require_subcommand(1);

    DetectOptions det;
    CLI::App* detect = app.add_subcommand("detect", "run one detection pipeline on one graph");
    detect->add_option("--graph", det.graph_path, "edge-list file")->required();
    detect->add_option("--framework", det.framework, "node|spectral|repr")->required();
    detect->add_option("--measure", det.measure, "measure or embedding method")->required();
    detect->add_option("--clustering", det.clustering, "single|complete|average|ward|genie");
    detect->add_option("--k", det.k, "number of communities")->required();
    detect->add_option("--truth", det.truth_path, "ground-truth partition file");
    detect->add_option("--out", det.out_path, "partition output path");
    detect->add_option("--eig", det.eig_pick, "spectral eigenvector choice: largest|smallest");
    add_method_flags(detect, det);

    std::string bench_grid = "small", bench_methods = "all", bench_out = "benchmark.csv";
    int bench_jobs = 1;
    std::uint64_t bench_seed = default_seed();
    CLI::App* bench = app.add_subcommand("benchmark", "run the SBM benchmark sweep");
    bench->add_option("--grid", bench_grid, "full|small");
    bench->add_option("--methods", bench_methods, "methods file path or 'all'");
    bench->add_option("--out", bench_out, "CSV output path")->required();
    bench->add_option("--jobs", bench_jobs, "worker threads");
    bench->add_option("--seed", bench_seed, "base seed");

    std::string report_in;
    CLI::App* report = app.add_subcommand("report", "aggregate a benchmark CSV");
    report->add_option("csv", report_in, "benchmark CSV path")->required();

    SbmSpec sbm{3, 10, 0.7, 0.1, default_seed()};
    std::string sbm_out = "sbm.txt";
    CLI::App* gen = app.add_subcommand("generate-sbm", "write an SBM graph + .truth labels");
    gen->add_option("--clusters", sbm.n_clusters, "number of blocks");
    gen->add_option("--size", sbm.vertices_per_cluster, "vertices per block");
    gen->add_option("--pin", sbm.p_in, "in-block edge probability");
    gen->add_option("--pout", sbm.p_out, "cross-block edge probability");
    gen->add_option("--seed", sbm.seed, "seed");
    gen->add_option("--out", sbm_out, "edge-list output path");

    std::uint64_t rw_seed = default_seed();
    CLI::App* realworld = app.add_subcommand("realworld", "selected methods on Karate/Dolphins");
    realworld->add_option("--seed", rw_seed, "seed");

    DetectOptions emb;
    std::string emb_out = "embedding.txt";
    CLI::App* embed = app.add_subcommand("embed", "dump an embedding only");
    embed->add_option("--graph", emb.graph_path, "edge-list file")->required();
    embed->add_option("--method", emb.measure, "embedding method")->required();
    embed->add_option("--out", emb_out, "output path");
    add_method_flags(embed, emb);

    DetectOptions prox;
    std::string prox_out = "matrix.csv";
    CLI::App* proximity = app.add_subcommand("proximity", "dump a proximity matrix only");
    proximity->add_option("--graph", prox.graph_path, "edge-list file")->required();
    proximity->add_option("--measure", prox.measure, "proximity measure")->required();
    proximity->add_option("--out", prox_out, "output path");
    add_method_flags(proximity, prox);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*detect) return cmd_detect(det);
        if (*bench) {
            const std::vector<SbmSpec> specs =
                (bench_grid == "full") ? benchmark_grid() : benchmark_grid_small();
            std::vector<MethodSpec> methods;
            if (bench_methods == "all") {
                methods = default_roster();
            } else {
                std::ifstream in(bench_methods);
                if (!in) throw ArgumentError("cannot open methods file '" + bench_methods + "'");
                methods = parse_methods_file(in);
            }
            const auto records = run_benchmark(specs, methods, bench_jobs, bench_seed);
            std::ofstream out(bench_out);
            write_csv(records, out);
            std::cout << "wrote " << records.size() << " records to " << bench_out << '\n';
            return 0;
        }
        if (*report) {
            std::ifstream in(report_in);
            if (!in) throw ArgumentError("cannot open CSV '" + report_in + "'");
            write_report(read_csv(in), std::cout);
            return 0;
        }
        if (*gen) {
            const LabeledGraph lg = generate_sbm(sbm);
            std::ofstream out(sbm_out);
            lg.graph.serialize(out);
            std::ofstream truth(sbm_out + ".truth");
            lg.ground_truth.dump(truth);
            std::cout << "wrote " << sbm_out << " and " << sbm_out << ".truth\n";
            return 0;
        }
        if (*realworld) {
            write_realworld(run_realworld(rw_seed), std::cout);
            return 0;
        }
        if (*embed) {
            const Graph g = load_graph(emb.graph_path);
            TrainConfig config = emb.train_config;
            config.seed = emb.seed;
            Embedding e;
            if (emb.measure == "laplacian_eigenmaps")
                e = laplacian_eigenmaps(g, config.dim);
            else if (emb.measure == "graph_factorisation" || emb.measure == "gf")
                e = graph_factorisation(g, config);
            else if (emb.measure == "grarep")
                e = grarep(g, config.dim, config.grarep_order);
            else if (emb.measure.rfind("hope", 0) == 0)
                e = hope(g, config.dim,
                         emb.measure == "hope" ? "katz" : emb.measure.substr(5),
                         emb.measure_params.beta, emb.measure_params.alpha_rpr);
            else if (emb.measure == "deepwalk")
                e = deepwalk(g, config);
            else if (emb.measure == "node2vec")
                e = node2vec(g, config);
            else if (emb.measure == "dngr")
                e = dngr(g, config);
            else
                throw ArgumentError("unknown embedding method '" + emb.measure + "'");
            std::ofstream out(emb_out);
            dump_embedding(e, out);
            return 0;
        }
        if (*proximity) {
            const Graph g = load_graph(prox.graph_path);
            const ProximityMatrix m = compute_measure(g, prox.measure, prox.measure_params);
            std::ofstream out(prox_out);
            lin::dump_csv(m.matrix, out);
            return 0;
        }
    } catch (const MethodUndefinedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
