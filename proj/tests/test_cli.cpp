#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout only
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(SC_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::string mask_wall_time(std::string json) {
    return std::regex_replace(json, std::regex("\"wall_ms\": [0-9]+"), "\"wall_ms\": 0");
}

}  // namespace

TEST_CASE("cli: validate prints the predicate verdict") {
    auto r = run_cli("validate " + data("tri.txt") + " --set a,b --type sc --source a");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "false\n");

    auto t = run_cli("validate " + data("tri.txt") + " --set a --type sc --source a");
    CHECK(t.exit_code == 0);
    CHECK(t.output == "true\n");

    auto wc = run_cli("validate " + data("tri.txt") + " --set a,b,c --type wc");
    CHECK(wc.output == "true\n");
}

TEST_CASE("cli: hierarchy on the weighted path") {
    auto r = run_cli("hierarchy " + data("path2.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("levels 3") != std::string::npos);
    CHECK(r.output.find("cutc_calls 3") != std::string::npos);
    CHECK(r.output.find("breakpoints 2 1") != std::string::npos);
}

TEST_CASE("cli: binary mode finds both triangle levels with step 1/9") {
    auto r = run_cli("hierarchy " + data("tri.txt") + " --mode binary --step 1/9");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("levels 2") != std::string::npos);
}

TEST_CASE("cli: hierarchy JSON output is deterministic up to wall time") {
    auto r1 = run_cli("hierarchy " + data("path2.txt") + " --out cli_h1.json --best-modularity");
    auto r2 = run_cli("hierarchy " + data("path2.txt") + " --out cli_h2.json --best-modularity");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(mask_wall_time(slurp("cli_h1.json")) == mask_wall_time(slurp("cli_h2.json")));
}

TEST_CASE("cli: per-level DOT export") {
    auto r = run_cli("hierarchy " + data("path2.txt") + " --dot cli_lvl_");
    CHECK(r.exit_code == 0);
    for (int i = 0; i < 3; ++i) {
        std::string dot = slurp("cli_lvl_" + std::to_string(i) + ".dot");
        CHECK(dot.find("graph level") != std::string::npos);
    }
}

TEST_CASE("cli: tree build, serialization and query round trip") {
    auto r = run_cli("tree " + data("path2.txt") + " --out cli_tree.json --dot cli_tree.dot");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("flow_count") != std::string::npos);
    CHECK(r.output.find("root b") != std::string::npos);
    CHECK(slurp("cli_tree.dot").find("digraph") != std::string::npos);

    auto q = run_cli("query max-clustering cli_tree.json --anchor a --source a");
    CHECK(q.exit_code == 0);
    CHECK(q.output.find("clusters 2") != std::string::npos);
    CHECK(q.output.find("\"given_sc\"") != std::string::npos);

    // {a,c} is no SC on the weighted path (and no connected subtree)
    auto bad = run_cli("query max-clustering cli_tree.json --anchor a,c --source a");
    CHECK(bad.exit_code != 0);
}

TEST_CASE("cli: overlay query") {
    auto r = run_cli("query overlay " + data("tri.txt") +
                     " --anchor a --source a --anchor b --source b");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("clusters 3") != std::string::npos);
}

TEST_CASE("cli: anchor file syntax") {
    {
        std::ofstream f("cli_anchor.txt");
        f << "# anchor file\na\n";
    }
    auto r = run_cli("query max-clustering " + data("path2.txt") +
                     " --anchor @cli_anchor.txt --source a");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("clusters 2") != std::string::npos);
}

TEST_CASE("cli: bench emits the comparison CSV") {
    auto r = run_cli("bench " + data("tri.txt") + " " + data("path2.txt"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("instance,n,m,h,cutc_calls_param,cutc_calls_binary") !=
          std::string::npos);
    CHECK(r.output.find("tri.txt,3,3,2,1,") != std::string::npos);
    CHECK(r.output.find("path2.txt,3,2,3,3,") != std::string::npos);
}

TEST_CASE("cli: failures exit nonzero") {
    CHECK(run_cli("hierarchy /nonexistent/file").exit_code != 0);
    CHECK(run_cli("validate " + data("tri.txt") + " --set a,zzz --type wc").exit_code != 0);
    CHECK(run_cli("validate " + data("tri.txt") + " --set a,b --type sc").exit_code != 0);
}
