// evoland: command-line front end.
//
//   evoland generate --n 16 --m 69 --k 3 --seed 1 --out inst/
//   evoland measure  --config configs/paper_n16.cfg [--seed S] [--out DIR]
//   evoland networks --dimacs tiny.cnf --out net/
//   evoland plot     --csv results/summary.csv --out results/
//
// Exit status: 0 success, 1 runtime failure, 2 usage error. Failures print
// a single line "error: <kind>: <message>" on stderr.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "evoland/config.hpp"
#include "evoland/experiment.hpp"
#include "evoland/maxsat.hpp"
#include "evoland/plot.hpp"
#include "evoland/stats.hpp"

namespace fs = std::filesystem;
using namespace evoland;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string one_line(std::string text) {
    for (char& c : text) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return text;
}

int fail(const std::string& kind, const std::string& message, int code) {
    std::cerr << "error: " << kind << ": " << one_line(message) << '\n';
    return code;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw OutputError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out.flush()) {
        throw OutputError("failed writing '" + path.string() + "'");
    }
}

// Options shared by every subcommand.
struct Common {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out;

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "flat key = value configuration file");
        app->add_option("--seed", seed, "master seed");
        app->add_option("--out", out, "output directory");
    }

    KeyValueConfig load() const {
        if (config_path.empty()) {
            return {};
        }
        if (!fs::exists(config_path)) {
            throw UsageError("config file '" + config_path + "' not found");
        }
        return KeyValueConfig::load(config_path);
    }
};

struct GenerateArgs {
    Common common;
    std::optional<std::size_t> n, m, k, count;
};

int run_generate(const GenerateArgs& args) {
    const auto kv = args.common.load();
    kv.require_known({"n", "m", "k", "seed", "master_seed", "count", "output_dir"});
    maxsat::InstanceSpec spec;
    spec.num_vars = args.n.value_or(kv.get_u64("n").value_or(0));
    spec.num_clauses = args.m.value_or(kv.get_u64("m").value_or(0));
    spec.literals_per_clause = args.k.value_or(kv.get_u64("k").value_or(3));
    const std::uint64_t seed =
        args.common.seed.value_or(kv.get_u64("seed").value_or(kv.get_u64("master_seed").value_or(1)));
    const std::size_t count = args.count.value_or(kv.get_u64("count").value_or(1));
    const fs::path out = !args.common.out.empty() ? fs::path(args.common.out)
                                                  : fs::path(kv.get("output_dir").value_or("."));
    if (spec.num_vars == 0) {
        throw UsageError("generate requires --n (number of variables) >= 1");
    }
    if (count == 0) {
        throw UsageError("--count must be at least 1");
    }

    ensure_writable_directory(out);
    for (std::size_t i = 0; i < count; ++i) {
        spec.seed = seed + i;
        const auto formula = maxsat::generate(spec);
        const fs::path file = out / ("maxsat_n" + std::to_string(spec.num_vars) + "_m" +
                                     std::to_string(spec.num_clauses) + "_k" +
                                     std::to_string(spec.literals_per_clause) + "_s" +
                                     std::to_string(spec.seed) + ".cnf");
        write_file(file, "c random " + std::to_string(spec.literals_per_clause) +
                             "-SAT, evoland seed " + std::to_string(spec.seed) + "\n" +
                             maxsat::write_dimacs(formula));
        std::cout << file.string() << '\n';
    }
    return 0;
}

struct MeasureArgs {
    Common common;
    std::optional<unsigned> threads;
    std::optional<std::size_t> instances, walks;
    bool no_timestamp = false;
};

int run_measure(const MeasureArgs& args) {
    const auto kv = args.common.load();
    ExperimentConfig config = experiment_config_from(kv);
    if (args.common.seed) config.master_seed = *args.common.seed;
    if (!args.common.out.empty()) config.output_dir = args.common.out;
    if (args.threads) config.threads = *args.threads;
    if (args.instances) config.instances_per_point = *args.instances;
    if (args.walks) config.walk.num_walks = *args.walks;
    if (args.no_timestamp) config.timestamp = false;

    const auto result = run_experiment(config);
    for (const std::string& w : result.warnings) {
        std::cerr << "warning: " << one_line(w) << '\n';
    }
    std::cout << "N,m,alpha,mean_neutral_degree,rho_1,tau\n";
    for (const PointSummary& p : result.points) {
        std::cout << p.point.num_vars << ',' << p.point.num_clauses << ',' << format_number(p.alpha)
                  << ',' << format_number(p.mean_neutral_degree) << ','
                  << format_number(p.rho.size() > 1 ? std::optional<double>(p.rho[1])
                                                    : std::nullopt)
                  << ',' << format_number(p.tau) << '\n';
    }
    std::cout << "wrote " << (config.output_dir / "summary.csv").string() << '\n';
    return 0;
}

struct NetworksArgs {
    Common common;
    std::string dimacs;
    std::string problem;
    std::optional<std::size_t> n, m, k, limit;
    bool cross_check = false;
};

int run_networks(const NetworksArgs& args) {
    const auto kv = args.common.load();
    kv.require_known({"problem", "dimacs", "n", "m", "k", "seed", "master_seed", "limit",
                      "output_dir"});
    std::string problem = !args.problem.empty() ? args.problem : kv.get("problem").value_or("");
    std::string dimacs = !args.dimacs.empty() ? args.dimacs : kv.get("dimacs").value_or("");
    if (problem.empty()) {
        problem = dimacs.empty() ? "maxsat" : "dimacs";
    }
    const std::size_t n = args.n.value_or(kv.get_u64("n").value_or(0));
    const std::size_t limit =
        args.limit.value_or(kv.get_u64("limit").value_or(stats::kDefaultExhaustiveLimit));
    const fs::path out = !args.common.out.empty()
                             ? fs::path(args.common.out)
                             : fs::path(kv.get("output_dir").value_or("networks"));

    std::unique_ptr<Landscape> landscape;
    if (problem == "dimacs") {
        if (dimacs.empty()) {
            throw UsageError("networks: problem dimacs needs --dimacs <file>");
        }
        landscape = std::make_unique<maxsat::MaxSatLandscape>(maxsat::parse_dimacs(read_file(dimacs)));
    } else if (n == 0) {
        throw UsageError("networks: --n is required unless --dimacs is given");
    } else if (problem == "maxsat") {
        maxsat::InstanceSpec spec{n, args.m.value_or(kv.get_u64("m").value_or(0)),
                                  args.k.value_or(kv.get_u64("k").value_or(3)),
                                  args.common.seed.value_or(kv.get_u64("seed").value_or(1))};
        landscape = std::make_unique<maxsat::MaxSatLandscape>(maxsat::generate(spec));
    } else if (problem == "constant") {
        landscape = std::make_unique<ConstantLandscape>(n);
    } else if (problem == "popcount") {
        landscape = std::make_unique<PopcountLandscape>(n);
    } else {
        throw UsageError("networks: unknown problem '" + problem + "'");
    }

    ensure_writable_directory(out);
    const auto partition = stats::enumerate_networks(*landscape, limit);
    if (args.cross_check && !(stats::enumerate_networks_union_find(*landscape, limit) == partition)) {
        throw std::runtime_error("breadth-first and union-find partitions differ");
    }

    std::string csv = std::string("# ") + kCsvSchemaVersion + " table=networks landscape=" +
                      landscape->name() + "\nid,fitness,size\n";
    std::size_t total = 0;
    std::size_t largest = 0;
    for (std::size_t id = 0; id < partition.networks.size(); ++id) {
        const auto& net = partition.networks[id];
        csv += std::to_string(id) + "," + format_number(net.fitness) + "," +
               std::to_string(net.size) + "\n";
        total += net.size;
        largest = std::max(largest, net.size);
    }
    write_file(out / "networks.csv", csv);
    std::cout << "landscape=" << landscape->name() << " N=" << partition.dimension
              << " networks=" << partition.num_networks() << " solutions=" << total
              << " largest=" << largest << '\n';
    return 0;
}

struct PlotArgs {
    Common common;
    std::string csv;
};

int run_plot(const PlotArgs& args) {
    const auto kv = args.common.load();
    const fs::path out = !args.common.out.empty()
                             ? fs::path(args.common.out)
                             : fs::path(kv.get("output_dir").value_or("results"));
    const fs::path csv = !args.csv.empty() ? fs::path(args.csv) : out / "summary.csv";
    const std::string script = emit_plot_script(read_file(csv));
    ensure_writable_directory(out);
    const fs::path file = out / "tau_vs_m.gp";
    write_file(file, script);
    std::cout << file.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fitness landscape neutrality and evolvability measurements"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "write random MAX-k-SAT instances as DIMACS");
    gen.common.attach(generate);
    generate->add_option("--n", gen.n, "number of variables");
    generate->add_option("--m", gen.m, "number of clauses");
    generate->add_option("--k", gen.k, "literals per clause (default 3)");
    generate->add_option("--count", gen.count, "instances to write (seeds seed..seed+count-1)");

    MeasureArgs meas;
    auto* measure = app.add_subcommand("measure", "run an evolvability autocorrelation sweep");
    meas.common.attach(measure);
    measure->add_option("--threads", meas.threads, "worker threads for walks (0 = all cores)");
    measure->add_option("--instances", meas.instances, "instances per sweep point");
    measure->add_option("--walks", meas.walks, "neutral walks per instance");
    measure->add_flag("--no-timestamp", meas.no_timestamp, "omit the generated-at CSV line");

    NetworksArgs net;
    auto* networks = app.add_subcommand("networks", "enumerate neutral networks exhaustively");
    net.common.attach(networks);
    networks->add_option("--dimacs", net.dimacs, "DIMACS CNF instance");
    networks->add_option("--problem", net.problem, "maxsat | dimacs | constant | popcount");
    networks->add_option("--n", net.n, "number of variables");
    networks->add_option("--m", net.m, "number of clauses (maxsat)");
    networks->add_option("--k", net.k, "literals per clause (maxsat)");
    networks->add_option("--limit", net.limit, "largest N to enumerate (default 20)");
    networks->add_flag("--cross-check", net.cross_check, "also run union-find and compare");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "emit a gnuplot script of tau vs m");
    plot.common.attach(plot_cmd);
    plot_cmd->add_option("--csv", plot.csv, "result CSV (default <out>/summary.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), kExitUsage);
    }

    try {
        if (generate->parsed()) return run_generate(gen);
        if (measure->parsed()) return run_measure(meas);
        if (networks->parsed()) return run_networks(net);
        if (plot_cmd->parsed()) return run_plot(plot);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), kExitUsage);
    } catch (const ConfigError& e) {
        return fail("config", e.what(), kExitRuntime);
    } catch (const OutputError& e) {
        return fail("io", e.what(), kExitRuntime);
    } catch (const maxsat::DimacsError& e) {
        return fail("dimacs", e.what(), kExitRuntime);
    } catch (const SchemaError& e) {
        return fail("schema", e.what(), kExitRuntime);
    } catch (const stats::EnumerationLimitError& e) {
        return fail("limit", e.what(), kExitRuntime);
    } catch (const std::exception& e) {
        return fail("runtime", e.what(), kExitRuntime);
    }
    return fail("usage", "no subcommand", kExitUsage);
}
