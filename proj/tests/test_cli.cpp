#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "domcount/graph.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(DOMCOUNT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<json> records(const std::string& out) {
    std::vector<json> recs;
    std::istringstream ss(out);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) recs.push_back(json::parse(line));
    return recs;
}

}  // namespace

TEST_CASE("count command") {
    CliResult r = run_cli("count --family cycle:4 --structure ds");
    CHECK(r.status == 0);
    auto recs = records(r.out);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["value"] == "11");
    CHECK(recs[0]["graph6"] == "Cl");
    CHECK(recs[0]["n"] == 4);

    r = run_cli("count --graph6 Cl --condition dominating --mode open");
    CHECK(records(r.out)[0]["value"] == "9");

    r = run_cli("count --family complete:2 --condition dominating --mode closed --weights 1,2");
    CHECK(records(r.out)[0]["value"] == "8");

    r = run_cli("count --family complete:3 --structure mis");
    CHECK(records(r.out)[0]["value"] == "3");
}

TEST_CASE("poly command") {
    CliResult r = run_cli("poly --family complete:3");
    CHECK(r.status == 0);
    auto rec = records(r.out)[0];
    CHECK(rec["coefficients"] == json::array({"0", "3", "3", "1"}));

    r = run_cli("poly --family complete_bipartite:2,2 --structure sds --mu 1");
    auto rec2 = records(r.out)[0];
    CHECK(rec2["value"] == "9");
    CHECK(rec2["coefficients"] == json::array({"0", "0", "4", "4", "1"}));
}

TEST_CASE("xhom command") {
    CliResult r = run_cli("xhom --family cycle:4 --image eq:2");
    CHECK(records(r.out)[0]["value"] == "6");

    r = run_cli("xhom --family complete:2 --image hind");
    CHECK(records(r.out)[0]["value"] == "3");

    r = run_cli("xhom --family complete:3 --image kq:2");
    CHECK(records(r.out)[0]["value"] == "6");
}

TEST_CASE("bound-check command") {
    CliResult r = run_cli("bound-check --family cycle:4 --check ds");
    CHECK(r.status == 0);
    auto rec = records(r.out)[0];
    CHECK(rec["verdict"] == "holds");
    CHECK(rec["lhs_value"] == "1331");
    CHECK(rec["rhs_value"] == "2401");

    r = run_cli("bound-check --family complete:3 --check prorain --colors 2");
    CHECK(r.status == 0);
    auto recs = records(r.out);
    CHECK(recs.size() == 4);

    r = run_cli("bound-check --family cycle:6 --check background --image kq:3");
    CHECK(r.status == 0);
    bool saw_gt = false;
    for (const auto& rec2 : records(r.out))
        if (rec2["check"] == "galvin-tetali") {
            saw_gt = true;
            CHECK(rec2["verdict"] == "holds");
        }
    CHECK(saw_gt);

    // non-regular input is a usage error
    r = run_cli("bound-check --family star:3 --check ds");
    CHECK(r.status == 2);
}

TEST_CASE("entropy command") {
    CliResult r = run_cli("entropy --family complete:3 --structure ds");
    CHECK(r.status == 0);
    auto rec = records(r.out)[0];
    CHECK(rec["family_size"] == "7");
    CHECK(rec["k"] == 3);
    double slack = rec["slack"].get<double>();
    CHECK(slack >= -1e-12);
    CHECK(slack <= 1e-12);
}

TEST_CASE("sweep command") {
    CliResult r = run_cli("sweep --trees 6 --check tree-extremal");
    CHECK(r.status == 0);
    auto rec = records(r.out)[0];
    CHECK(rec["instances"] == 1296);
    CHECK(rec["violations"] == 0);

    r = run_cli("sweep --check moon-moser --max-n 4");
    CHECK(r.status == 0);
    CHECK(records(r.out)[0]["violations"] == 0);
}

TEST_CASE("catalog input") {
    const char* path = "cli_catalog_test.g6";
    {
        std::ofstream out(path);
        out << "# a comment\n\nA_\nCl\n";
    }
    CliResult r = run_cli(std::string("count --catalog ") + path + " --structure ds");
    CHECK(r.status == 0);
    auto recs = records(r.out);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0]["value"] == "3");
    CHECK(recs[0]["line"] == 3);
    CHECK(recs[1]["value"] == "11");
    CHECK(recs[1]["line"] == 4);
    std::remove(path);
}

TEST_CASE("catalog error handling") {
    const char* path = "cli_catalog_bad.g6";
    {
        std::ofstream out(path);
        out << "A_\nnot graph6 at all?!\nCl\n";
    }
    // lenient: skip and keep going
    CliResult r = run_cli(std::string("count --catalog ") + path + " --structure ds");
    CHECK(r.status == 0);
    CHECK(records(r.out).size() == 2);
    // strict: abort with status 2
    r = run_cli(std::string("count --catalog ") + path + " --structure ds --strict");
    CHECK(r.status == 2);
    std::remove(path);
}

TEST_CASE("worker count does not change the byte stream") {
    const char* path = "cli_catalog_workers.g6";
    {
        std::ofstream out(path);
        for (int n = 3; n <= 10; ++n) out << domcount::write_graph6(domcount::make_cycle(n)) << "\n";
        for (int n = 2; n <= 6; ++n) out << domcount::write_graph6(domcount::make_complete(n)) << "\n";
    }
    std::string base = std::string("count --catalog ") + path + " --structure ds";
    CliResult one = run_cli(base + " --workers 1");
    CliResult four = run_cli(base + " --workers 4");
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    std::remove(path);
}

TEST_CASE("cap exceeded maps to status 3") {
    CliResult r = run_cli("count --family cycle:30 --structure ds");
    CHECK(r.status == 3);
    r = run_cli("count --family cycle:30 --structure ds --cap-bits 31");
    CHECK(r.status == 0);
}

TEST_CASE("usage errors map to status 2") {
    CHECK(run_cli("count --family cycle:4").status == 2);          // no structure
    CHECK(run_cli("count --structure ds").status == 2);            // no graph
    CHECK(run_cli("count --family nosuch:1 --structure ds").status == 2);
    CHECK(run_cli("count --family cycle:4 --graph6 Cl --structure ds").status == 2);
    CHECK(run_cli("nosuchcommand").status == 2);
}

TEST_CASE("config file mirrors flags") {
    const char* path = "cli_config_test.toml";
    {
        std::ofstream out(path);
        out << "family=\"cycle:4\"\nstructure=\"ds\"\n";
    }
    CliResult r = run_cli(std::string("count --config ") + path);
    CHECK(r.status == 0);
    CHECK(records(r.out)[0]["value"] == "11");
    std::remove(path);
}

TEST_CASE("output file flag") {
    const char* path = "cli_out_test.jsonl";
    CliResult r = run_cli(std::string("count --family cycle:4 --structure ds --out ") + path);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    CHECK(std::getline(in, line));
    CHECK(json::parse(line)["value"] == "11");
    std::remove(path);
}
