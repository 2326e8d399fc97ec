#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string cli() { return std::string(W22_CLI_PATH); }

int run(const std::string& args) {
    int status = std::system((cli() + " " + args + " >/dev/null 2>/dev/null").c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/w22-cli-test-") + name;
}

} // namespace

TEST_CASE("suite runs exit zero and write a report") {
    std::string out = tmp_path("det.json");
    CHECK(run("verify determinant --seed 3 --out " + out) == 0);
    std::string report = slurp(out);
    CHECK(report.find("\"suite\": \"determinant\"") != std::string::npos);
    CHECK(report.find("\"failed\": 0") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("identical seeds give byte-identical reports") {
    std::string a = tmp_path("rep-a.json"), b = tmp_path("rep-b.json");
    REQUIRE(run("verify hom --seed 11 --jobs 4 --out " + a) == 0);
    REQUIRE(run("verify hom --seed 11 --jobs 2 --out " + b) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("configuration problems exit with status 2") {
    CHECK(run("verify bogus-suite") == 2);
    CHECK(run("verify axioms --config /nonexistent/path.json") == 2);

    std::string cfg = tmp_path("alpha0.json");
    {
        std::ofstream out(cfg);
        out << R"({"omega_params": [{"lambda": "2", "alpha": "0", "h": ["0", "0", "1"]}]})";
    }
    CHECK(run("verify q-identity --config " + cfg) == 2);
    // the same config is fine for a suite without the alpha constraint
    CHECK(run("verify hom --config " + cfg) == 0);

    std::string broken = tmp_path("broken.json");
    {
        std::ofstream out(broken);
        out << "{ not json";
    }
    CHECK(run("verify axioms --config " + broken) == 2);
    std::remove(cfg.c_str());
    std::remove(broken.c_str());
}

TEST_CASE("help exits zero") {
    CHECK(run("--help") == 0);
    CHECK(run("verify --help") == 0);
}
