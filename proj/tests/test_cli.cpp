#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "pefet/cli.hpp"

namespace fs = std::filesystem;
using namespace pefet;

namespace {

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("pefet_cli_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string write_ini(const fs::path& dir, const std::string& text) {
    auto p = dir / "run.ini";
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(std::vector<std::string> args) {
    args.insert(args.begin(), "pefet");
    return run_cli(args);
}

std::size_t data_rows(const fs::path& csv) {
    std::string s = slurp(csv);
    return std::count(s.begin(), s.end(), '\n') - 1;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}) == kExitConfig);
    CHECK(run({"frobnicate"}) == kExitConfig);
    CHECK(run({"array", "--config", "/nonexistent.ini"}) == kExitConfig);
    auto dir = scratch("arch");
    CHECK(run({"array", "--config", fixtures::default_ini_path(), "--arch", "dram", "--out", dir.string()}) == kExitConfig);
}

TEST_CASE("over-driven V_DD is a disturb violation (exit 3)") {
    auto dir = scratch("disturb");
    auto ini = write_ini(dir, fixtures::with_value(fixtures::default_ini_text(), "fet", "v_dd", "1.3"));
    CHECK(run({"array", "--config", ini, "--op", "write", "--out", dir.string()}) == kExitDisturb);
}

TEST_CASE("unreachable FET anchor is a fit failure (exit 5)") {
    auto dir = scratch("fit");
    auto ini = write_ini(dir, fixtures::with_value(fixtures::default_ini_text(), "fet", "anchor_lrs_ratio", "23"));
    CHECK(run({"calibrate", "--config", ini, "--out", dir.string()}) == kExitFit);
}

TEST_CASE("empty sweep warns and exits 0") {
    auto dir = scratch("empty");
    auto ini = write_ini(dir, fixtures::with_value(fixtures::default_ini_text(), "sweep", "kappas", ""));
    CHECK(run({"sweep", "--config", ini, "--out", dir.string()}) == kExitOk);
}

TEST_CASE("calibrate writes a byte-identical model card on repeat runs") {
    auto a = scratch("card_a"), b = scratch("card_b");
    REQUIRE(run({"calibrate", "--config", fixtures::default_ini_path(), "--out", a.string()}) == kExitOk);
    REQUIRE(run({"calibrate", "--config", fixtures::default_ini_path(), "--out", b.string()}) == kExitOk);
    CHECK(slurp(a / "model_card.ini") == slurp(b / "model_card.ini"));
    CHECK_FALSE(slurp(a / "model_card.ini").empty());
}

TEST_CASE("device command emits one kappa row per requested kappa") {
    auto dir = scratch("device");
    REQUIRE(run({"device", "--config", fixtures::default_ini_path(), "--kappa", "0.03,0.07", "--out", dir.string()}) == kExitOk);
    CHECK(data_rows(dir / "kappa_device.csv") == 2);
    CHECK(fs::exists(dir / "iv_sweep.csv"));
    CHECK(fs::exists(dir / "pv_loop.csv"));
}

TEST_CASE("array roundtrip writes reports and the CC current table") {
    auto dir = scratch("roundtrip");
    REQUIRE(run({"array", "--config", fixtures::default_ini_path(), "--arch", "cc", "--op", "roundtrip", "--seed", "3",
                 "--out", dir.string()}) == kExitOk);
    for (auto f : {"energy.csv", "latency.csv", "events.csv", "cc_currents.csv", "state.txt"})
        CHECK(fs::exists(dir / f));
    std::string header = slurp(dir / "energy.csv").substr(0, slurp(dir / "energy.csv").find('\n'));
    CHECK(header == "arch,kappa,metric,component,value,unit,provenance");
}
