#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zafa/runner.hpp"

using namespace zafa;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() /
                     ("zafa-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("am task over a small catalog") {
    TempDir tmp;
    RunConfig cfg;
    cfg.catalog = {"Z6", "S3", "Q8"};
    cfg.task = "am";
    cfg.out_path = (tmp.path / "report.json").string();
    cfg.cache_dir = (tmp.path / "cache").string();
    CHECK(run(cfg) == 0);

    const json doc = json::parse(slurp(tmp.path / "report.json"));
    CHECK(doc.at("schema") == "zafa-report/1");
    const auto& rows = doc.at("rows");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].at("group") == "Z6");
    CHECK(std::abs(rows[0].at("am_za").get<double>() - 1.0) < 1e-9);
    CHECK(std::abs(rows[1].at("am_za").get<double>() - 7.0 / 3.0) < 1e-9);
    CHECK(std::abs(rows[2].at("am_za").get<double>() - 7.0 / 4.0) < 1e-9);
    for (const auto& row : rows) {
        CHECK(row.at("lower_bound_ok") == true);
        CHECK(row.at("diagonal_ok") == true);
        CHECK_FALSE(row.contains("wall_ms"));
    }
}

TEST_CASE("reports are byte-identical across runs and cache states") {
    TempDir tmp;
    RunConfig cfg;
    cfg.catalog = {"S3", "A5"};
    cfg.task = "table";
    cfg.cache_dir = (tmp.path / "cache").string();

    cfg.out_path = (tmp.path / "cold.json").string();
    CHECK(run(cfg) == 0);  // cold: computes and fills the cache
    cfg.out_path = (tmp.path / "warm.json").string();
    CHECK(run(cfg) == 0);  // warm: served from the cache
    CHECK(slurp(tmp.path / "cold.json") == slurp(tmp.path / "warm.json"));
    CHECK(fs::exists(tmp.path / "cache"));

    // csv projection is stable too
    cfg.format = "csv";
    cfg.task = "am";
    cfg.out_path = (tmp.path / "a.csv").string();
    CHECK(run(cfg) == 0);
    cfg.out_path = (tmp.path / "b.csv").string();
    CHECK(run(cfg) == 0);
    const std::string csv = slurp(tmp.path / "a.csv");
    CHECK(csv == slurp(tmp.path / "b.csv"));
    CHECK(csv.rfind("group,order,k,am_za", 0) == 0);
}

TEST_CASE("group specs drive the runner") {
    TempDir tmp;
    const auto spec = tmp.path / "v4.json";
    std::ofstream(spec) << R"({"permutation": {"degree": 4, "label": "V4",
        "generators": [[1,0,3,2],[2,3,0,1]]}})";
    const auto prod = tmp.path / "prod.json";
    std::ofstream(prod) << R"({"product": [{"catalog": "S3"}, {"catalog": "Z2"}]})";

    RunConfig cfg;
    cfg.catalog = {"none"};
    cfg.spec_files = {spec.string(), prod.string()};
    cfg.task = "am";
    cfg.out_path = (tmp.path / "out.json").string();
    cfg.cache_dir = (tmp.path / "cache").string();
    CHECK(run(cfg) == 0);

    const json doc = json::parse(slurp(tmp.path / "out.json"));
    REQUIRE(doc.at("rows").size() == 2);
    CHECK(doc.at("rows")[0].at("group") == "V4");
    CHECK(doc.at("rows")[0].at("abelian") == true);
    CHECK(doc.at("rows")[1].at("order") == 12);
    CHECK(std::abs(doc.at("rows")[1].at("am_za").get<double>() - 7.0 / 3.0) < 1e-6);
}

TEST_CASE("malformed inputs exit 2 with no partial report") {
    TempDir tmp;
    const auto bad = tmp.path / "bad.json";
    std::ofstream(bad) << "{ this is not json";

    RunConfig cfg;
    cfg.catalog = {"none"};
    cfg.spec_files = {bad.string()};
    cfg.task = "am";
    cfg.out_path = (tmp.path / "never.json").string();
    CHECK(run(cfg) == 2);
    CHECK_FALSE(fs::exists(tmp.path / "never.json"));

    std::ofstream(bad) << R"({"no-recognized-key": 1})";
    CHECK(run(cfg) == 2);
    CHECK_FALSE(fs::exists(tmp.path / "never.json"));

    RunConfig unknown_task;
    unknown_task.task = "frobnicate";
    CHECK(run(unknown_task) == 2);
    RunConfig unknown_fmt;
    unknown_fmt.format = "xml";
    CHECK(run(unknown_fmt) == 2);
    RunConfig bad_name;
    bad_name.catalog = {"E8"};
    bad_name.out_path = (tmp.path / "never2.json").string();
    CHECK(run(bad_name) == 2);
    CHECK_FALSE(fs::exists(tmp.path / "never2.json"));
}

TEST_CASE("per-input failures become rows and exit 1") {
    TempDir tmp;
    const auto big = tmp.path / "big.json";
    std::ofstream(big) << R"({"product": [{"catalog": "Z200"}, {"catalog": "Z200"}]})";

    RunConfig cfg;
    cfg.catalog = {"S3"};
    cfg.spec_files = {big.string()};
    cfg.task = "am";
    cfg.out_path = (tmp.path / "partial.json").string();
    cfg.cache_dir = (tmp.path / "cache").string();
    CHECK(run(cfg) == 1);

    const json doc = json::parse(slurp(tmp.path / "partial.json"));
    REQUIRE(doc.at("rows").size() == 2);
    CHECK_FALSE(doc.at("rows")[0].contains("error"));
    CHECK(doc.at("rows")[1].at("error") == "order cap exceeded");
}

TEST_CASE("fusion task lists multiplicities") {
    TempDir tmp;
    RunConfig cfg;
    cfg.catalog = {"S3"};
    cfg.task = "fusion";
    cfg.out_path = (tmp.path / "fusion.json").string();
    cfg.cache_dir = (tmp.path / "cache").string();
    CHECK(run(cfg) == 0);
    const json doc = json::parse(slurp(tmp.path / "fusion.json"));
    const auto& entries = doc.at("rows")[0].at("entries");
    // std (x) std decomposes into all three irreducibles
    int std_sq = 0;
    for (const auto& e : entries)
        if (e[0] == 2 && e[1] == 2) ++std_sq;
    CHECK(std_sq == 3);
}

TEST_CASE("su2-deriv task emits the sweep") {
    TempDir tmp;
    RunConfig cfg;
    cfg.task = "su2-deriv";
    cfg.su2_lmax = 10;
    cfg.su2_grid = 4;
    cfg.format = "csv";
    cfg.out_path = (tmp.path / "sweep.csv").string();
    CHECK(run(cfg) == 0);
    const std::string csv = slurp(tmp.path / "sweep.csv");
    CHECK(csv.rfind("l,z,magnitude,bound,slack,ok", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 11 * 4);
}

TEST_CASE("hypergroup-check task") {
    TempDir tmp;
    const auto spec = tmp.path / "orbit.json";
    std::ofstream(spec)
        << R"({"kind": "orbit", "dimension": 1, "matrices": [[[1]], [[-1]]]})";
    RunConfig cfg;
    cfg.catalog = {"S3"};
    cfg.spec_files = {spec.string()};
    cfg.task = "hypergroup-check";
    cfg.out_path = (tmp.path / "hg.json").string();
    cfg.cache_dir = (tmp.path / "cache").string();
    CHECK(run(cfg) == 0);
    const json doc = json::parse(slurp(tmp.path / "hg.json"));
    REQUIRE(doc.at("rows").size() == 2);
    for (const auto& row : doc.at("rows")) CHECK(row.at("ok") == true);
}

TEST_CASE("verify suite: default pass, vacuous pass, corrupted fail") {
    RunConfig cfg;
    cfg.catalog = {"Z4", "S3"};
    std::ostringstream out;
    const auto summary = verify_suite(cfg, out);
    CHECK(summary.failures == 0);
    CHECK(summary.checks > 10);
    CHECK(summary.max_residual < 1e-8);
    CHECK(out.str().find("[FAIL]") == std::string::npos);

    RunConfig vacuous;
    vacuous.catalog = {"none"};
    std::ostringstream vout;
    const auto vs = verify_suite(vacuous, vout);
    CHECK(vs.checks == 0);
    CHECK(vs.failures == 0);

    RunConfig corrupt;
    corrupt.catalog = {"S3"};
    corrupt.inject_corruption = true;
    std::ostringstream cout_;
    const auto cs = verify_suite(corrupt, cout_);
    CHECK(cs.failures > 0);
    CHECK(cout_.str().find("[FAIL] orthogonality") != std::string::npos);
}

#ifdef ZAFA_CLI_PATH
TEST_CASE("the installed binary wires the subcommands") {
    TempDir tmp;
    const std::string cache = (tmp.path / "cache").string();
    const std::string out = (tmp.path / "r.json").string();
    const std::string cmd = std::string(ZAFA_CLI_PATH) +
                            " run --task am --catalog S3 --out " + out +
                            " --cache-dir " + cache + " >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    const json doc = json::parse(slurp(out));
    CHECK(doc.at("rows")[0].at("group") == "S3");

    const std::string vcmd = std::string(ZAFA_CLI_PATH) +
                             " verify --catalog Z2 --cache-dir " + cache +
                             " >/dev/null 2>&1";
    CHECK(std::system(vcmd.c_str()) == 0);
}
#endif
