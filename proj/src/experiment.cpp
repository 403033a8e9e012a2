#include "evoland/experiment.hpp"

#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include "evoland/maxsat.hpp"
#include "evoland/rng.hpp"
#include "evoland/stats.hpp"

namespace evoland {

namespace fs = std::filesystem;

namespace {

std::size_t to_size(const std::string& text, const std::string& what) {
    std::size_t value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ConfigError(0, what + ": expected a non-negative integer, got '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, sep)) {
        const auto first = current.find_first_not_of(" \t");
        const auto last = current.find_last_not_of(" \t");
        parts.push_back(first == std::string::npos ? std::string()
                                                   : current.substr(first, last - first + 1));
    }
    return parts;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::vector<SweepPoint> parse_sweep(const std::string& text) {
    std::vector<SweepPoint> points;
    for (const std::string& group : split(text, ';')) {
        if (group.empty()) {
            continue;
        }
        const auto colon = group.find(':');
        if (colon == std::string::npos) {
            throw ConfigError(0, "sweep group '" + group + "' must look like N:m1,m2,...");
        }
        const std::size_t n = to_size(split(group.substr(0, colon), ',').at(0), "sweep N");
        for (const std::string& m : split(group.substr(colon + 1), ',')) {
            points.push_back({n, to_size(m, "sweep m")});
        }
    }
    return points;
}

void ExperimentConfig::validate() const {
    if (sweep.empty() && problem != ProblemKind::Dimacs) {
        throw ConfigError(0, "sweep is empty");
    }
    if (problem == ProblemKind::Dimacs && dimacs_path.empty()) {
        throw ConfigError(0, "problem = dimacs requires 'dimacs = <path>'");
    }
    if (instances_per_point == 0) {
        throw ConfigError(0, "instances must be positive");
    }
    if (neutral_degree_samples == 0) {
        throw ConfigError(0, "neutral_degree_samples must be positive");
    }
    for (const SweepPoint& p : sweep) {
        if (p.num_vars == 0) {
            throw ConfigError(0, "sweep point with N = 0");
        }
        if (problem == ProblemKind::MaxSat && literals_per_clause > p.num_vars) {
            throw ConfigError(0, "k exceeds N at sweep point N=" + std::to_string(p.num_vars));
        }
    }
    if (max_lag == 0) {
        throw ConfigError(0, "max_lag must be positive");
    }
    if (max_lag >= walk.walk_length + 1) {
        throw ConfigError(0, "max_lag must be smaller than walk_length + 1");
    }
    try {
        walk.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(0, e.what());
    }
}

ExperimentConfig experiment_config_from(const KeyValueConfig& kv) {
    kv.require_known({"problem", "sweep", "n", "m", "k", "dimacs", "instances", "walk_length",
                      "num_walks", "min_usable_length", "max_lag", "neutral_degree_samples",
                      "output_dir", "master_seed", "seed", "threads", "timestamp"});
    ExperimentConfig config;

    const std::string problem = kv.get("problem").value_or("maxsat");
    if (problem == "maxsat") {
        config.problem = ProblemKind::MaxSat;
    } else if (problem == "dimacs") {
        config.problem = ProblemKind::Dimacs;
    } else if (problem == "constant") {
        config.problem = ProblemKind::Constant;
    } else if (problem == "popcount") {
        config.problem = ProblemKind::Popcount;
    } else {
        throw ConfigError(0, "unknown problem '" + problem + "'");
    }

    for (const std::string& s : kv.all("sweep")) {
        const auto points = parse_sweep(s);
        config.sweep.insert(config.sweep.end(), points.begin(), points.end());
    }
    if (const auto n = kv.get_u64("n")) {
        std::vector<std::string> ms = {"0"};
        if (const auto m = kv.get("m")) {
            ms = split(*m, ',');
        }
        for (const std::string& m : ms) {
            config.sweep.push_back({static_cast<std::size_t>(*n), to_size(m, "m")});
        }
    }
    if (config.problem == ProblemKind::Constant || config.problem == ProblemKind::Popcount) {
        for (SweepPoint& p : config.sweep) {
            p.num_clauses = 0;
        }
    }

    if (const auto v = kv.get_u64("k")) config.literals_per_clause = *v;
    if (const auto v = kv.get("dimacs")) config.dimacs_path = *v;
    if (const auto v = kv.get_u64("instances")) config.instances_per_point = *v;
    if (const auto v = kv.get_u64("walk_length")) config.walk.walk_length = *v;
    if (const auto v = kv.get_u64("num_walks")) config.walk.num_walks = *v;
    if (const auto v = kv.get_u64("min_usable_length")) config.walk.min_usable_length = *v;
    if (const auto v = kv.get_u64("max_lag")) config.max_lag = *v;
    if (const auto v = kv.get_u64("neutral_degree_samples")) config.neutral_degree_samples = *v;
    if (const auto v = kv.get("output_dir")) config.output_dir = *v;
    if (const auto v = kv.get_u64("seed")) config.master_seed = *v;
    if (const auto v = kv.get_u64("master_seed")) config.master_seed = *v;
    if (const auto v = kv.get_u64("threads")) config.threads = static_cast<unsigned>(*v);
    if (const auto v = kv.get_bool("timestamp")) config.timestamp = *v;
    return config;
}

std::uint64_t instance_seed(std::uint64_t master_seed, const SweepPoint& point,
                            std::size_t instance) {
    return mix_seed(master_seed, point.num_vars, point.num_clauses, instance);
}

std::uint64_t walk_batch_seed(std::uint64_t instance_seed) { return mix_seed(instance_seed, 1); }

std::uint64_t degree_seed(std::uint64_t instance_seed) { return mix_seed(instance_seed, 2); }

std::unique_ptr<Landscape> make_instance(const ExperimentConfig& config, const SweepPoint& point,
                                         std::uint64_t seed) {
    switch (config.problem) {
    case ProblemKind::MaxSat:
        return std::make_unique<maxsat::MaxSatLandscape>(maxsat::generate(
            {point.num_vars, point.num_clauses, config.literals_per_clause, seed}));
    case ProblemKind::Dimacs:
        return std::make_unique<maxsat::MaxSatLandscape>(
            maxsat::parse_dimacs(read_file(config.dimacs_path)));
    case ProblemKind::Constant:
        return std::make_unique<ConstantLandscape>(point.num_vars, 0.0);
    case ProblemKind::Popcount:
        return std::make_unique<PopcountLandscape>(point.num_vars);
    }
    throw std::invalid_argument("unknown problem kind");
}

ExperimentResult compute_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult result;

    std::vector<SweepPoint> sweep = config.sweep;
    std::shared_ptr<const Landscape> dimacs_landscape;
    if (config.problem == ProblemKind::Dimacs) {
        dimacs_landscape = make_instance(config, {}, 0);
        const auto& formula =
            static_cast<const maxsat::MaxSatLandscape&>(*dimacs_landscape).formula();
        sweep = {{formula.num_vars(), formula.num_clauses()}};
    }

    for (const SweepPoint& point : sweep) {
        PointSummary summary;
        summary.point = point;
        summary.alpha = static_cast<double>(point.num_clauses) / static_cast<double>(point.num_vars);
        summary.instances = config.instances_per_point;
        summary.rho.assign(config.max_lag + 1, 0.0);
        double tau_sum = 0.0;
        std::size_t tau_count = 0;

        for (std::size_t i = 0; i < config.instances_per_point; ++i) {
            const std::uint64_t seed = instance_seed(config.master_seed, point, i);
            std::shared_ptr<const Landscape> landscape = dimacs_landscape;
            if (!landscape) {
                landscape = make_instance(config, point, seed);
            }

            ResultRow row;
            row.num_vars = point.num_vars;
            row.num_clauses = point.num_clauses;
            row.alpha = summary.alpha;
            row.instance_seed = seed;

            Rng degree_rng(degree_seed(seed));
            row.mean_neutral_degree =
                stats::neutral_degree_stats(*landscape, config.neutral_degree_samples, degree_rng)
                    .mean;

            WalkConfig walk = config.walk;
            walk.seed = walk_batch_seed(seed);
            const auto traces = evolvability_walks(*landscape, walk, config.threads);
            try {
                const auto report =
                    stats::average_autocorrelation(traces, config.max_lag, walk.min_usable_length);
                row.rho = report.rho;
                row.rho_1 = report.rho[1];
                row.tau = report.tau;
                row.tau_per_walk_mean = report.tau_per_series_mean;
                row.num_walks_used = report.num_series_used;
                row.num_walks_discarded = report.num_series_discarded;
            } catch (const stats::NoUsableSeriesError& e) {
                row.num_walks_used = 0;
                row.num_walks_discarded = e.discarded();
                result.warnings.push_back("N=" + std::to_string(point.num_vars) +
                                          " m=" + std::to_string(point.num_clauses) +
                                          " instance " + std::to_string(i) + ": " + e.what());
            }

            summary.mean_neutral_degree += row.mean_neutral_degree;
            summary.num_walks_used += row.num_walks_used;
            summary.num_walks_discarded += row.num_walks_discarded;
            if (!row.rho.empty()) {
                ++summary.instances_used;
                for (std::size_t k = 0; k < row.rho.size(); ++k) {
                    summary.rho[k] += row.rho[k];
                }
            }
            if (row.tau) {
                tau_sum += *row.tau;
                ++tau_count;
            }
            result.rows.push_back(std::move(row));
        }

        summary.mean_neutral_degree /= static_cast<double>(summary.instances);
        if (summary.instances_used > 0) {
            for (double& r : summary.rho) {
                r /= static_cast<double>(summary.instances_used);
            }
            summary.rho[0] = 1.0;
            if (summary.rho[1] > 0.0 && summary.rho[1] < 1.0) {
                summary.tau = stats::correlation_length(summary.rho[1]);
            }
        } else {
            summary.rho.clear();
        }
        if (tau_count > 0) {
            summary.tau_instance_mean = tau_sum / static_cast<double>(tau_count);
        }
        result.points.push_back(std::move(summary));
    }
    return result;
}

void ensure_writable_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw OutputError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
    const fs::path probe = dir / ".evoland-write-probe";
    {
        std::ofstream out(probe);
        if (!out || !(out << "probe\n") || !out.flush()) {
            throw OutputError("output directory '" + dir.string() + "' is not writable");
        }
    }
    fs::remove(probe, ec);
}

namespace {

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out.flush()) {
        throw OutputError("failed writing '" + path.string() + "'");
    }
}

std::string csv_preamble(const ExperimentConfig& config, const char* table) {
    std::string out = "# ";
    out += kCsvSchemaVersion;
    out += " table=";
    out += table;
    out += " master_seed=" + std::to_string(config.master_seed) + "\n";
    if (config.timestamp) {
        out += "# generated " + utc_timestamp() + "\n";
    }
    return out;
}

}  // namespace

std::string format_number(std::optional<double> value) {
    if (!value || !std::isfinite(*value)) {
        return "NA";
    }
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, *value);
    return std::string(buf, ptr);
}

std::string instances_csv(const ExperimentResult& result, const ExperimentConfig& config) {
    std::string out = csv_preamble(config, "instances");
    out += "N,m,alpha,instance_seed,mean_neutral_degree,rho_1,tau,num_walks_used,"
           "num_walks_discarded,tau_per_walk_mean\n";
    for (const ResultRow& r : result.rows) {
        out += std::to_string(r.num_vars) + "," + std::to_string(r.num_clauses) + "," +
               format_number(r.alpha) + "," + std::to_string(r.instance_seed) + "," +
               format_number(r.mean_neutral_degree) + "," + format_number(r.rho_1) + "," +
               format_number(r.tau) + "," + std::to_string(r.num_walks_used) + "," +
               std::to_string(r.num_walks_discarded) + "," + format_number(r.tau_per_walk_mean) +
               "\n";
    }
    return out;
}

std::string summary_csv(const ExperimentResult& result, const ExperimentConfig& config) {
    std::string out = csv_preamble(config, "summary");
    out += "N,m,alpha,instances,instances_used,mean_neutral_degree,rho_1,tau,tau_instance_mean,"
           "num_walks_used,num_walks_discarded\n";
    for (const PointSummary& p : result.points) {
        const std::optional<double> rho1 =
            p.rho.size() > 1 ? std::optional<double>(p.rho[1]) : std::nullopt;
        out += std::to_string(p.point.num_vars) + "," + std::to_string(p.point.num_clauses) + "," +
               format_number(p.alpha) + "," + std::to_string(p.instances) + "," +
               std::to_string(p.instances_used) + "," + format_number(p.mean_neutral_degree) +
               "," + format_number(rho1) + "," + format_number(p.tau) + "," +
               format_number(p.tau_instance_mean) + "," + std::to_string(p.num_walks_used) + "," +
               std::to_string(p.num_walks_discarded) + "\n";
    }
    return out;
}

std::string lags_csv(const ExperimentResult& result, const ExperimentConfig& config) {
    std::string out = csv_preamble(config, "lags");
    out += "N,m,k,rho\n";
    for (const PointSummary& p : result.points) {
        for (std::size_t k = 0; k < p.rho.size(); ++k) {
            out += std::to_string(p.point.num_vars) + "," + std::to_string(p.point.num_clauses) +
                   "," + std::to_string(k) + "," + format_number(p.rho[k]) + "\n";
        }
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    ensure_writable_directory(config.output_dir);
    ExperimentResult result = compute_experiment(config);
    write_text(config.output_dir / "instances.csv", instances_csv(result, config));
    write_text(config.output_dir / "summary.csv", summary_csv(result, config));
    write_text(config.output_dir / "lags.csv", lags_csv(result, config));
    return result;
}

}  // namespace evoland
