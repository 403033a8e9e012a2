#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "evoland/maxsat.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path workdir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "evoland-cli-test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run cli(const std::string& args) {
    const fs::path out = workdir() / "stdout.txt";
    const fs::path err = workdir() / "stderr.txt";
    const std::string cmd = std::string("\"") + EVOLAND_CLI_PATH + "\" " + args + " >\"" +
                            out.string() + "\" 2>\"" + err.string() + "\"";
    const int raw = std::system(cmd.c_str());
    Run r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("generate writes one DIMACS file matching the library generator") {
    const fs::path dir = workdir() / "inst";
    const auto r = cli("generate --n 16 --m 69 --k 3 --seed 1 --out " + dir.string());
    REQUIRE(r.status == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++files;
        CHECK(entry.path().extension() == ".cnf");
        const auto formula = evoland::maxsat::parse_dimacs(slurp(entry.path()));
        CHECK(formula == evoland::maxsat::generate({16, 69, 3, 1}));
    }
    CHECK(files == 1);
}

TEST_CASE("usage errors exit with a distinct code and one line") {
    auto r = cli("measure --bogus-flag");
    CHECK(r.status == 2);
    CHECK(r.err.rfind("error: usage:", 0) == 0);
    CHECK(r.err.find('\n') == r.err.size() - 1);

    r = cli("measure --config " + (workdir() / "missing.cfg").string());
    CHECK(r.status == 2);
    CHECK(r.err.rfind("error: usage:", 0) == 0);

    r = cli("");
    CHECK(r.status == 2);

    r = cli("generate --out " + (workdir() / "x").string());
    CHECK(r.status == 2);
}

TEST_CASE("runtime errors exit 1 with a typed line") {
    write(workdir() / "bad.cnf", "p cnf 3 1\n1 5 0\n");
    auto r = cli("networks --dimacs " + (workdir() / "bad.cnf").string() + " --out " +
                 (workdir() / "net-bad").string());
    CHECK(r.status == 1);
    CHECK(r.err.rfind("error: dimacs: line 2", 0) == 0);

    write(workdir() / "blocker", "x");
    write(workdir() / "tiny.cfg", "sweep = 16:39\ninstances = 1\nnum_walks = 10\n");
    r = cli("measure --config " + (workdir() / "tiny.cfg").string() + " --out " +
            (workdir() / "blocker" / "sub").string());
    CHECK(r.status == 1);
    CHECK(r.err.rfind("error: io:", 0) == 0);

    write(workdir() / "badkey.cfg", "sweep = 16:39\nwalkers = 3\n");
    r = cli("measure --config " + (workdir() / "badkey.cfg").string());
    CHECK(r.status == 1);
    CHECK(r.err.rfind("error: config: config line 2", 0) == 0);

    write(workdir() / "empty.csv", "");
    r = cli("plot --csv " + (workdir() / "empty.csv").string() + " --out " +
            (workdir() / "plot-bad").string());
    CHECK(r.status == 1);
    CHECK(r.err.rfind("error: schema:", 0) == 0);
}

TEST_CASE("measure then plot") {
    const fs::path out = workdir() / "measure";
    write(workdir() / "small.cfg",
          "# small sweep\n"
          "sweep = 16:39,99\n"
          "instances = 2\n"
          "num_walks = 30\n"
          "neutral_degree_samples = 100\n"
          "timestamp = false\n");
    auto r = cli("measure --config " + (workdir() / "small.cfg").string() + " --seed 5 --out " +
                 out.string());
    REQUIRE(r.status == 0);
    CHECK(fs::exists(out / "instances.csv"));
    CHECK(fs::exists(out / "lags.csv"));
    const std::string summary = slurp(out / "summary.csv");
    CHECK(summary.find("master_seed=5") != std::string::npos);
    CHECK(summary.find("# generated") == std::string::npos);

    r = cli("plot --out " + out.string());
    REQUIRE(r.status == 0);
    const std::string script = slurp(out / "tau_vs_m.gp");
    CHECK(script.find("from 68.8,") != std::string::npos);
}

TEST_CASE("measure on the constant landscape succeeds with warnings") {
    const fs::path out = workdir() / "constant";
    write(workdir() / "constant.cfg",
          "problem = constant\nn = 8\ninstances = 2\nnum_walks = 20\n"
          "neutral_degree_samples = 50\n");
    const auto r = cli("measure --config " + (workdir() / "constant.cfg").string() + " --out " +
                       out.string());
    CHECK(r.status == 0);
    CHECK(r.err.find("warning:") != std::string::npos);
    const std::string rows = slurp(out / "instances.csv");
    CHECK(rows.find(",NA,NA,0,20,NA") != std::string::npos);
}

TEST_CASE("networks on a DIMACS instance with N=12 covers 4096 solutions") {
    write(workdir() / "tiny.cnf",
          evoland::maxsat::write_dimacs(evoland::maxsat::generate({12, 30, 3, 8})));
    const fs::path out = workdir() / "net";
    const auto r = cli("networks --dimacs " + (workdir() / "tiny.cnf").string() +
                       " --cross-check --out " + out.string());
    REQUIRE(r.status == 0);
    CHECK(r.out.find("solutions=4096") != std::string::npos);
    CHECK(fs::exists(out / "networks.csv"));

    const auto constant = cli("networks --problem constant --n 5 --out " + out.string());
    CHECK(constant.out.find("networks=1 solutions=32 largest=32") != std::string::npos);

    const auto too_big = cli("networks --problem popcount --n 22 --out " + out.string());
    CHECK(too_big.status == 1);
    CHECK(too_big.err.rfind("error: limit:", 0) == 0);
}
