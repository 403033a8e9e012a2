#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "evoland/experiment.hpp"
#include "evoland/maxsat.hpp"

using namespace evoland;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.sweep = {{16, 39}, {16, 69}};
    c.instances_per_point = 3;
    c.walk.num_walks = 40;
    c.walk.walk_length = 50;
    c.max_lag = 5;
    c.neutral_degree_samples = 200;
    c.master_seed = 7;
    c.timestamp = false;
    return c;
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("evoland-test-" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("seed derivation is documented mixing") {
    CHECK(instance_seed(7, {16, 39}, 2) == mix_seed(7, 16, 39, 2));
    CHECK(walk_batch_seed(5) == mix_seed(5, 1));
    CHECK(degree_seed(5) == mix_seed(5, 2));
    const auto config = small_config();
    const auto landscape = make_instance(config, {16, 39}, 1234);
    const auto& formula = dynamic_cast<const maxsat::MaxSatLandscape&>(*landscape).formula();
    CHECK(formula == maxsat::generate({16, 39, 3, 1234}));
}

TEST_CASE("rows satisfy the result invariants") {
    const auto config = small_config();
    const auto result = compute_experiment(config);
    REQUIRE(result.rows.size() == 6);
    REQUIRE(result.points.size() == 2);
    for (const auto& row : result.rows) {
        CHECK(row.alpha == static_cast<double>(row.num_clauses) / 16.0);
        CHECK(row.num_walks_used + row.num_walks_discarded == config.walk.num_walks);
        CHECK(row.tau.has_value() == (row.rho_1 && *row.rho_1 > 0.0 && *row.rho_1 < 1.0));
        CHECK(row.mean_neutral_degree >= 0.0);
        CHECK(row.mean_neutral_degree <= 16.0);
    }
    for (const auto& point : result.points) {
        CHECK(point.instances == 3);
        CHECK(point.rho.size() == config.max_lag + 1);
        CHECK(point.rho[0] == 1.0);
        CHECK(point.num_walks_used + point.num_walks_discarded == 3 * config.walk.num_walks);
    }
    CHECK(result.points[0].point == SweepPoint{16, 39});
    CHECK(result.rows[0].instance_seed == instance_seed(7, {16, 39}, 0));
}

TEST_CASE("thread count does not change results") {
    auto config = small_config();
    const auto serial = compute_experiment(config);
    config.threads = 3;
    const auto parallel = compute_experiment(config);
    CHECK(instances_csv(serial, config) == instances_csv(parallel, config));
    CHECK(lags_csv(serial, config) == lags_csv(parallel, config));
}

TEST_CASE("constant problem: every walk degenerate, NA rows and warnings") {
    ExperimentConfig config = small_config();
    config.problem = ProblemKind::Constant;
    config.sweep = {{8, 0}};
    const auto result = compute_experiment(config);
    REQUIRE(result.rows.size() == 3);
    for (const auto& row : result.rows) {
        CHECK_FALSE(row.tau.has_value());
        CHECK_FALSE(row.rho_1.has_value());
        CHECK(row.num_walks_used == 0);
        CHECK(row.num_walks_discarded == config.walk.num_walks);
        CHECK(row.mean_neutral_degree == 8.0);
    }
    CHECK(result.warnings.size() == 3);
    CHECK_FALSE(result.points[0].tau.has_value());
    const std::string csv = summary_csv(result, config);
    CHECK(csv.find(",NA,NA,NA,") != std::string::npos);
}

TEST_CASE("dimacs problem reads the instance from disk") {
    const fs::path dir = scratch_dir("dimacs");
    fs::create_directories(dir);
    const auto formula = maxsat::generate({16, 59, 3, 3});
    {
        std::ofstream out(dir / "inst.cnf");
        out << maxsat::write_dimacs(formula);
    }
    ExperimentConfig config = small_config();
    config.problem = ProblemKind::Dimacs;
    config.dimacs_path = (dir / "inst.cnf").string();
    config.sweep.clear();
    config.instances_per_point = 2;
    const auto result = compute_experiment(config);
    REQUIRE(result.points.size() == 1);
    CHECK(result.points[0].point == SweepPoint{16, 59});
    CHECK(result.rows.size() == 2);
    fs::remove_all(dir);
}

TEST_CASE("run_experiment writes versioned CSVs deterministically") {
    const fs::path a = scratch_dir("det-a");
    const fs::path b = scratch_dir("det-b");
    auto config = small_config();
    config.output_dir = a;
    run_experiment(config);
    config.output_dir = b;
    run_experiment(config);
    for (const char* name : {"instances.csv", "summary.csv", "lags.csv"}) {
        const auto text = slurp(a / name);
        CHECK(text.rfind("# evoland-csv v1", 0) == 0);
        CHECK(text == slurp(b / name));
    }
    CHECK(slurp(a / "summary.csv").find("\nN,m,alpha,instances,") != std::string::npos);

    config.timestamp = true;
    run_experiment(config);
    CHECK(slurp(b / "summary.csv").find("# generated ") != std::string::npos);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("unwritable output fails before computing") {
    const fs::path dir = scratch_dir("blocked");
    fs::create_directories(dir);
    { std::ofstream(dir / "file") << "x"; }
    auto config = small_config();
    config.output_dir = dir / "file" / "sub";
    // A huge sweep would take minutes; failing fast proves the check runs first.
    config.instances_per_point = 100000;
    CHECK_THROWS_AS(run_experiment(config), OutputError);
    fs::remove_all(dir);
}

TEST_CASE("format_number") {
    CHECK(format_number(std::nullopt) == "NA");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(69.0 / 16.0) == "4.3125");
    CHECK(format_number(std::nan("")) == "NA");
}
