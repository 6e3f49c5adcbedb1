// End-to-end checks of the command-line tool: exit statuses, output
// formats, and byte-stable reruns.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

const std::string cli = DIVGRAPH_CLI_PATH;

int run(const std::string& args) {
    int status = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/divgraph_cli_test_") + name;
}

} // namespace

TEST_CASE("build writes the D(S_5) graph as json") {
    std::string out = tmp_path("s5.json");
    REQUIRE(run("build --group S --n 5 --kind D --format json --out " + out) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["schema"] == "divgraph/1");
    CHECK(j["group"] == "S");
    CHECK(j["vertices"].size() == 5);
    CHECK(j["edges"].size() == 3);
    CHECK(j["components"].size() == 2);
    CHECK(j["origins"]["20"].size() == 2);
}

TEST_CASE("build output is byte-identical across runs") {
    std::string a = tmp_path("det_a.json");
    std::string b = tmp_path("det_b.json");
    REQUIRE(run("build --group A --n 8 --kind D --format json --out " + a) == 0);
    REQUIRE(run("build --group A --n 8 --kind D --format json --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("null graph artifact for S_2") {
    std::string out = tmp_path("s2.json");
    REQUIRE(run("build --group S --n 2 --out " + out) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["null_graph"] == true);
    CHECK(j["vertices"].empty());
}

TEST_CASE("dot export of D(A_5) has three singleton clusters") {
    std::string out = tmp_path("a5.dot");
    REQUIRE(run("build --group A --n 5 --kind D --format dot --out " + out) == 0);
    std::string dot = slurp(out);
    CHECK(dot.find("subgraph cluster_2") != std::string::npos);
    CHECK(dot.find("subgraph cluster_3") == std::string::npos);
    CHECK(dot.find("[5^1]+") != std::string::npos);
}

TEST_CASE("exit statuses") {
    CHECK(run("build --n 5 --kind Q") == 2);          // bad flag value
    CHECK(run("nonsense") == 2);                      // unknown subcommand
    CHECK(run("build --group S --n 60") == 3);        // over build budget
    CHECK(run("verify figures") == 0);
    CHECK(run("verify oracle --max-n 5") == 0);
    CHECK(run("verify theorem9 --from 7 --to 10") == 0);
}

TEST_CASE("fromfile builds the requested graph") {
    std::string in = tmp_path("x.txt");
    {
        std::ofstream f(in);
        f << "10\n15\n1\n20\n24\n30\n15\n";
    }
    std::string out = tmp_path("x.json");
    REQUIRE(run("fromfile " + in + " --kind D --out " + out) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["group"] == "X");
    CHECK(j["vertices"].size() == 5);
    CHECK(j["edges"].size() == 3);

    // Delta on {4, 6, 9}: primes {2, 3}, one edge via 6
    std::string in2 = tmp_path("y.txt");
    {
        std::ofstream f(in2);
        f << "4\n6\n9\n";
    }
    std::string out2 = tmp_path("y.json");
    REQUIRE(run("fromfile " + in2 + " --kind Delta --out " + out2) == 0);
    auto j2 = nlohmann::json::parse(slurp(out2));
    CHECK(j2["vertices"] == nlohmann::json({"2", "3"}));
    CHECK(j2["edges"].size() == 1);
}

TEST_CASE("fromfile input errors") {
    std::string bad = tmp_path("bad.txt");
    {
        std::ofstream f(bad);
        f << "12\nxyz\n";
    }
    CHECK(run("fromfile " + bad) == 2);

    std::string big = tmp_path("bigprime.txt");
    {
        std::ofstream f(big);
        f << "1000003\n"; // prime above the 10^6 factoring bound
    }
    CHECK(run("fromfile " + big) == 2);
}

TEST_CASE("sweep emits one CSV row per degree") {
    std::string out = tmp_path("sweep.csv");
    REQUIRE(run("sweep --group S --from 3 --to 12 --out " + out) == 0);
    std::istringstream is(slurp(out));
    std::string line;
    std::getline(is, line);
    CHECK(line == "n,group,vertices,edges,components,component_sizes,diameter,wall_ms");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        // component count column must be <= 2 for S_n
        std::istringstream cols(line);
        std::string field;
        for (int i = 0; i < 5; ++i)
            std::getline(cols, field, ',');
        CHECK(std::stoi(field) <= 2);
    }
    CHECK(rows == 10);
}
