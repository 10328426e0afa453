#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string cli() {
    const char* p = std::getenv("STRATA_CLI");
    REQUIRE_MESSAGE(p != nullptr, "STRATA_CLI must point at the command-line binary");
    return p;
}

int run(const std::string& args) {
    std::string cmd = cli() + " " + args + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("well-formed inputs exit zero") {
    CHECK(run("homology --field q corpus:rp2") == 0);
    CHECK(run("validate corpus:delta2-standard") == 0);
    CHECK(run("strata-report corpus:cone-s1") == 0);
}

TEST_CASE("validation failures exit one") {
    write_file("/tmp/strata_cli_bad_poset.json",
               R"({"elements": ["0","1","2"], "leq": [["0","1"],["1","2"]]})");
    CHECK(run("validate /tmp/strata_cli_bad_poset.json") == 1);

    write_file("/tmp/strata_cli_bad_key.json", R"({"vertices": ["a"], "faces": []})");
    CHECK(run("validate /tmp/strata_cli_bad_key.json") == 1);

    write_file("/tmp/strata_cli_parse.json", "{ not json");
    CHECK(run("validate /tmp/strata_cli_parse.json") == 1);

    CHECK(run("homology corpus:nonsense") == 1);
}

TEST_CASE("argument errors are reported") {
    CHECK(run("unzip corpus:cone-s1 --deep '{0}'") == 1);  // not downward closed
    CHECK(run("restrict corpus:delta2-standard --strata 0 --strata 2") == 1);  // not consecutive
    CHECK(run("no-such-command") != 0);
}

TEST_CASE("well-formed complex loads and registers") {
    write_file("/tmp/strata_cli_ok.json",
               R"({"vertices": ["a","b","c"], "simplices": [["a","b"],["b","c"]]})");
    CHECK(run("validate /tmp/strata_cli_ok.json") == 0);
    CHECK(run("homology --field q /tmp/strata_cli_ok.json") == 0);
    CHECK(run("subdivide /tmp/strata_cli_ok.json") == 0);
}
