#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MYCUBIC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("eval command") {
    const RunResult closed = run_cli("eval 0.01 --method closed");
    CHECK(closed.exit_code == 0);
    CHECK(closed.out.find("0.1328694292") != std::string::npos);
    CHECK(closed.out.find("closed-trig") != std::string::npos);

    const RunResult fixed0 = run_cli("eval 0.01 --method fixed --iterations 0");
    CHECK(fixed0.exit_code == 0);
    CHECK(fixed0.out.find("0.1321129198") != std::string::npos);

    const RunResult hyper = run_cli("eval 0.07407407407407407 --method hyper");
    CHECK(hyper.exit_code == 0);
    CHECK(hyper.out.find("0.3333333333") != std::string::npos);

    const RunResult oracle = run_cli("eval 18 --method oracle --tol 1e-12");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.out.find("3.0000000000") != std::string::npos);

    CHECK(run_cli("eval -1 --method closed").exit_code == 2);
    CHECK(run_cli("eval 1 --method nope").exit_code == 2);
    CHECK(run_cli("eval").exit_code == 2);
}

TEST_CASE("solve command") {
    const RunResult one = run_cli("solve --depressed 1 1");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("-0.6823278038") != std::string::npos);

    const RunResult three = run_cli("solve --depressed -3 1");
    CHECK(three.exit_code == 0);
    CHECK(three.out.find("-1.8793852416") != std::string::npos);
    CHECK(three.out.find("0.3472963553") != std::string::npos);
    CHECK(three.out.find("1.5320888862") != std::string::npos);
    // ascending order in the text table
    CHECK(three.out.find("-1.8793852416") < three.out.find("0.3472963553"));

    const RunResult both = run_cli("solve --depressed -3 1 --method both");
    CHECK(both.exit_code == 0);
    CHECK(both.out.find("viete cross-check") != std::string::npos);

    const RunResult viete = run_cli("solve --depressed -3 1 --method viete");
    CHECK(viete.exit_code == 0);
    CHECK(viete.out.find("1.5320888862") != std::string::npos);

    const RunResult iter = run_cli("solve --depressed 1 1 --iterations 0");
    CHECK(iter.exit_code == 0);
    CHECK(iter.out.find("-0.6823458163") != std::string::npos);

    const RunResult general = run_cli("solve --general 2 0 -6 2");
    CHECK(general.exit_code == 0);
    CHECK(general.out.find("1.5320888862") != std::string::npos);

    CHECK(run_cli("solve --general 0 1 1 1").exit_code == 2);
    CHECK(run_cli("solve").exit_code == 2);
    CHECK(run_cli("solve --depressed 1 1 --method viete").exit_code == 2);
}

TEST_CASE("table golden files") {
    for (const char* name : {"my-ex1", "my-ex2", "cubic-ex1", "cubic-ex2"}) {
        const RunResult r = run_cli(std::string("table ") + name);
        CHECK(r.exit_code == 0);
        const std::string golden =
            read_file(std::string(MYCUBIC_GOLDEN_DIR) + "/table_" + name + ".txt");
        CHECK_MESSAGE(r.out == golden, name);
    }
    CHECK(run_cli("table nope").exit_code == 2);
    CHECK(run_cli("table").exit_code == 2);
}

TEST_CASE("table csv format") {
    const RunResult r = run_cli("table my-ex1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("n,value,abs_error,rel_error\n", 0) == 0);
    CHECK(r.out.find("0,0.1321129198,7.57e-04,5.69e-03\n") != std::string::npos);
    const RunResult c2 = run_cli("table cubic-ex2 --format csv");
    CHECK(c2.out.rfind("root,n,value,abs_error,rel_error\n", 0) == 0);
    CHECK(c2.out.find("gamma,5,-1.8793852416,") != std::string::npos);
}

TEST_CASE("json output round-trips") {
    const RunResult r = run_cli("eval 0.01 --method closed --format json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("meta").at("version").get<std::string>() == "0.1.0");
    CHECK(doc.at("inputs").at("x").get<double>() == 0.01);
    const double v = doc.at("results").at("value").get<double>();
    // bit-exact round-trip through the serialized form
    const json again = json::parse(doc.dump());
    CHECK(again.at("results").at("value").get<double>() == v);
    CHECK(std::fabs(v - 0.1328694292) <= 1e-10);

    const json solve = json::parse(run_cli("solve --depressed -3 1 --format json").out);
    CHECK(solve.at("results").at("roots").size() == 3);
    CHECK(solve.at("results").at("case").get<int>() == 4);

    const json table = json::parse(run_cli("table my-ex2 --format json").out);
    CHECK(table.at("results").at("blocks").at(0).at("rows").size() == 3);
}

TEST_CASE("verify command exit codes and determinism") {
    const RunResult bad = run_cli("verify --grid-points 5");
    CHECK(bad.exit_code == 2);

    const RunResult a = run_cli("verify --grid-points 12 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("checks passed") != std::string::npos);
    const RunResult b = run_cli("verify --grid-points 12 --seed 42");
    CHECK(a.out == b.out);
}

TEST_CASE("plot-data command") {
    const RunResult bounds = run_cli("plot-data --curve bounds --x-min 0 --x-max 2 --points 40");
    CHECK(bounds.exit_code == 0);
    std::istringstream lines(bounds.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "x,lower,my,upper");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        double x, lo, v, hi;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &x, &lo, &v, &hi) == 4);
        CHECK(lo <= v + 1e-9);
        CHECK(v <= hi + 1e-9);
    }
    CHECK(rows == 40);

    const RunResult m0 = run_cli("plot-data --curve m0-error --x-min 0 --x-max 10 --points 60");
    CHECK(m0.exit_code == 0);
    std::istringstream m0lines(m0.out);
    std::getline(m0lines, line);
    while (std::getline(m0lines, line)) {
        double x, err;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf", &x, &err) == 2);
        CHECK(err < 1.4408e-3);
    }

    const RunResult f = run_cli("plot-data --curve f --x-min -1.5 --x-max 1 --points 50");
    CHECK(f.exit_code == 0);

    CHECK(run_cli("plot-data --curve my --x-min -1 --x-max 1 --points 10").exit_code == 2);
    CHECK(run_cli("plot-data --curve bounds --x-min 0 --x-max 2 --points 1").exit_code == 2);
    CHECK(run_cli("plot-data --curve what --x-min 0 --x-max 1 --points 5").exit_code == 2);
}
