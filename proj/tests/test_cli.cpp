#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cmc1/cli.hpp"
#include "cmc1/io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = cmc1::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path temp_dir(const std::string& tag) {
    const fs::path d = fs::temp_directory_path() / ("cmc1_cli_" + tag);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("surface subcommand emits OBJ and sidecar") {
    const fs::path dir = temp_dir("surface");
    const std::string base = (dir / "horo").string();
    const RunResult r =
        run_cli({"surface", "--example", "horosphere", "--grid", "16x16", "--out", base});
    REQUIRE(r.code == 0);

    const std::string obj = cmc1::read_file(base + ".obj");
    size_t nv = 0, nf = 0, nn = 0;
    std::istringstream is(obj);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("v ", 0) == 0) ++nv;
        if (line.rfind("vn ", 0) == 0) ++nn;
        if (line.rfind("f ", 0) == 0) ++nf;
    }
    CHECK(nv == 256);
    CHECK(nn == 256);
    CHECK(nf == 2 * 15 * 15);

    const json sidecar = json::parse(cmc1::read_file(base + ".ends.json"));
    CHECK(sidecar["grid"]["nu"] == 16);
    CHECK(sidecar.contains("config"));
}

TEST_CASE("index subcommand reports the catenoid interval") {
    const RunResult r = run_cli({"index", "--example", "catenoid-cousin", "--mu", "2.5"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["ind_u"] == 5);
    CHECK(j["interval"][0] == 4);
    CHECK(j["interval"][1] == 5);
    CHECK(j["config"]["mu"] == 2.5);
}

TEST_CASE("ends subcommand classifies the catalog example") {
    const RunResult r = run_cli({"ends", "--mu", "1", "--nu", "-2", "--q2", "2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["m"] == 3);
    CHECK(j["type"] == "catenoid-cousin");
    CHECK(j["embedded"] == false);
}

TEST_CASE("monodromy subcommand on entire data") {
    const RunResult r = run_cli({"monodromy", "--example", "horosphere", "--radius", "1.0"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["in_su2"] == true);
    CHECK(j["defect"].get<double>() < 1e-6);
}

TEST_CASE("error lines are machine parsable") {
    const RunResult usage = run_cli({"index", "--example"});
    CHECK(usage.code == 2);
    CHECK(usage.err.rfind("error: E_USAGE:", 0) == 0);

    const RunResult domain = run_cli({"ends", "--mu", "1", "--nu", "-3", "--q2", "1"});
    CHECK(domain.code == 3);
    CHECK(domain.err.rfind("error: E_DOMAIN:", 0) == 0);

    const RunResult missing = run_cli({"horizon", "--mesh", "/nonexistent/mesh.obj"});
    CHECK(missing.code == 5);
    CHECK(missing.err.rfind("error: E_IO:", 0) == 0);

    const RunResult badgrid =
        run_cli({"surface", "--example", "horosphere", "--grid", "banana"});
    CHECK(badgrid.code == 3);
    CHECK(badgrid.err.rfind("error: E_PRECONDITION:", 0) == 0);

    const RunResult badname = run_cli({"index", "--example", "moebius-dream"});
    CHECK(badname.code == 3);

    const RunResult tolerr = run_cli({"spectrum", "--mu", "1", "--tol", "0"});
    CHECK(tolerr.code == 4);
    CHECK(tolerr.err.rfind("error: E_TOLERANCE:", 0) == 0);

    const fs::path dir = temp_dir("badobj");
    const std::string bad = (dir / "bad.obj").string();
    cmc1::write_file(bad, "v 0 0 1\nf 1 2 3\n");
    const RunResult badobj = run_cli({"horizon", "--mesh", bad});
    CHECK(badobj.code == 5);
}

TEST_CASE("config file supplies defaults and flags override") {
    const fs::path dir = temp_dir("config");
    const std::string cfg = (dir / "run.json").string();
    cmc1::write_file(cfg, "{\"example\": \"catenoid-cousin\", \"mu\": 0.5}\n");

    const RunResult a = run_cli({"index", "--config", cfg});
    REQUIRE(a.code == 0);
    CHECK(json::parse(a.out)["ind_u"] == 1);

    const RunResult b = run_cli({"index", "--config", cfg, "--mu", "2.5"});
    REQUIRE(b.code == 0);
    CHECK(json::parse(b.out)["ind_u"] == 5);
}

TEST_CASE("horizon subcommand consumes surface output") {
    const fs::path dir = temp_dir("horizon");
    const std::string base = (dir / "cat").string();
    const RunResult s = run_cli({"surface", "--example", "catenoid-cousin", "--mu", "0.5",
                                 "--grid", "32x12", "--rmin", "0.05", "--rmax", "20", "--out",
                                 base});
    REQUIRE(s.code == 0);

    const std::string hz = (dir / "hz").string();
    const RunResult h = run_cli(
        {"horizon", "--mesh", base + ".obj", "--field", "dilation", "--out", hz});
    REQUIRE(h.code == 0);
    const json j = json::parse(cmc1::read_file(hz + ".json"));
    CHECK(j["v"] == 2);
    CHECK(j["v_adj"] == 2);
    CHECK(j["degenerate"] == false);

    const RunResult rot = run_cli(
        {"horizon", "--mesh", base + ".obj", "--field", "rotation", "--out", hz + "_rot"});
    REQUIRE(rot.code == 0);
    CHECK(json::parse(cmc1::read_file(hz + "_rot.json"))["degenerate"] == true);
}

TEST_CASE("repeated runs are byte identical") {
    const fs::path dir = temp_dir("determinism");
    const std::string base = (dir / "run").string();
    auto run_all = [&] {
        REQUIRE(run_cli({"surface", "--example", "enneper-cousin", "--grid", "8x8", "--out",
                         base + "_s"})
                    .code == 0);
        REQUIRE(run_cli({"spectrum", "--mu", "1", "--cutoff", "3", "--out", base + "_sp.csv"})
                    .code == 0);
        REQUIRE(run_cli({"index", "--example", "catenoid-cousin", "--mu", "1.5", "--out",
                         base + "_ix.json"})
                    .code == 0);
        REQUIRE(run_cli({"ends", "--mu", "1", "--nu", "-2", "--q2", "2", "--out",
                         base + "_en.json"})
                    .code == 0);
    };
    const std::vector<std::string> suffixes{"_s.obj",      "_s.ends.json", "_sp.csv",
                                            "_sp.csv.json", "_ix.json",    "_en.json"};
    run_all();
    std::vector<std::string> first;
    for (const auto& s : suffixes) first.push_back(cmc1::read_file(base + s));
    run_all();
    for (size_t i = 0; i < suffixes.size(); ++i)
        CHECK(first[i] == cmc1::read_file(base + suffixes[i]));
}

TEST_CASE("spectrum CSV has the mandated header and rows") {
    const fs::path dir = temp_dir("spectrum");
    const std::string csv = (dir / "sp.csv").string();
    const RunResult r = run_cli({"spectrum", "--mu", "1", "--cutoff", "3", "--out", csv});
    REQUIRE(r.code == 0);
    std::istringstream is(cmc1::read_file(csv));
    std::string header;
    std::getline(is, header);
    CHECK(header == "q,rank,lambda_numeric,lambda_analytic,abs_err,multiplicity");
    bool has_zero = false, has_two = false;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string q, rank, num, ana, err, mult;
        std::getline(ls, q, ',');
        std::getline(ls, rank, ',');
        std::getline(ls, num, ',');
        std::getline(ls, ana, ',');
        std::getline(ls, err, ',');
        std::getline(ls, mult, ',');
        const double lam = std::stod(num);
        const double abserr = std::stod(err);
        CHECK(abserr <= 1e-3 * std::max(1.0, std::stod(ana)));
        if (std::abs(lam) < 1e-3) has_zero = true;
        if (std::abs(lam - 2.0) < 1e-3) has_two = true;
    }
    CHECK(has_zero);
    CHECK(has_two);
}
