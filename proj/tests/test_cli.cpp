// End-to-end checks of the command-line tool (spawned as a subprocess).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(YBER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t nl = s.find('\n', pos);
        if (nl == std::string::npos) nl = s.size();
        out.push_back(s.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("check reports predicates and exit codes") {
    RunResult r = run_cli("check ex15");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "ybe=true\nrnd=true\nlnd=true\ninvolutive=false\ninvertible=true\npower=6,0\n");

    r = run_cli("check ex14");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("involutive=true") != std::string::npos);

    auto bad = temp_file("yber_bad_solution.txt", "yber-solution v1\nn=2\nlambda=\n1 5\n");
    r = run_cli("check " + bad.string());
    CHECK(r.exit_code == 1);

    // a YBE failure is a predicate failure, exit 2
    auto nonsol = temp_file("yber_nonsol.txt",
                            "yber-solution v1\nn=2\nlambda=\n2 1\n1 2\nrho=\n1 2\n1 2\n");
    r = run_cli("check " + nonsol.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("ybe=false") != std::string::npos);
}

TEST_CASE("reflections listing") {
    RunResult r = run_cli("reflections ex15");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 11);
    CHECK(lines.front() == "1 1 1 1");
    CHECK(lines.back() == "4 4 4 4");

    r = run_cli("reflections flip2");
    CHECK(lines_of(r.out).size() == 4);

    r = run_cli("reflections ex14 --classes");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "1 1 3\n2 2 3\n"
          "\n"
          "1 2 3\n2 1 3\n"
          "\n"
          "3 3 3\n");

    // inapplicable criterion: exit 3
    r = run_cli("reflections ex15 --criterion left");
    CHECK(r.exit_code == 3);
}

TEST_CASE("derive writes canonical solution files") {
    RunResult r = run_cli("derive ex14 k=333");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "yber-solution v1\n"
          "n=3\n"
          "lambda=\n"
          "2 1 3\n"
          "2 1 3\n"
          "1 2 3\n"
          "rho=\n"
          "2 1 3\n"
          "2 1 3\n"
          "1 2 3\n");

    // the same reflection via a file
    auto kfile = temp_file("yber_k333.txt", "yber-reflection v1\nn=3\nk=\n3 3 3\n");
    RunResult r2 = run_cli("derive ex14 " + kfile.string());
    CHECK(r2.out == r.out);

    // a non-reflection is a precondition failure
    r = run_cli("derive ex14 k=311");
    CHECK(r.exit_code == 3);

    r = run_cli("derive ex15 --all --classify");
    CHECK(r.exit_code == 0);
    int classes = 0;
    for (const auto& line : lines_of(r.out))
        if (line.rfind("class=", 0) == 0) classes++;
    CHECK(classes == 5);
    CHECK(r.out.find("reflections=1 1 1 1; 2 2 2 2; 3 3 3 3\n") != std::string::npos);
}

TEST_CASE("iterated derivation stabilizes") {
    // with k = id the derivation can always be repeated; ex15 stabilizes
    // after one step
    RunResult once = run_cli("derive ex15 k=1234");
    RunResult thrice = run_cli("derive ex15 k=1234 --iterate 3");
    CHECK(once.exit_code == 0);
    CHECK(thrice.exit_code == 0);
    CHECK(once.out == thrice.out);

    RunResult flip = run_cli("derive flip3 k=231 --iterate 4");
    CHECK(flip.exit_code == 0);
    CHECK(flip.out == run_cli("derive flip3 k=123").out);
}

TEST_CASE("verify prints one verdict per identity") {
    RunResult r = run_cli("verify ex15 k=1114 --degree 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "entwining_guitar=pass\n"
          "entwining_garside=pass\n"
          "product_guitar=pass\n"
          "product_garside=pass\n"
          "graded_bijection=pass\n"
          "monoid_action=pass\n"
          "shelf_coincidence=pass\n"
          "shelf_second_identity=skip\n");

    r = run_cli("verify ex14 k=333 --degree 4");
    CHECK(r.exit_code == 0);

    r = run_cli("verify flip3 k=123 --degree 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("shelf_second_identity=pass") != std::string::npos);

    r = run_cli("verify ex14 k=311");
    CHECK(r.exit_code == 3);
}

TEST_CASE("strange counting and listing") {
    RunResult r = run_cli("strange 3 --count");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "44\n");

    r = run_cli("strange 2 --list");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "1 1\n1 1\n"
          "\n"
          "1 1\n1 2\n"
          "\n"
          "1 2\n1 2\n"
          "\n"
          "2 1\n2 1\n");

    r = run_cli("strange 4 --list");
    CHECK(r.exit_code == 4);

    r = run_cli("strange 9 --count");
    CHECK(r.exit_code == 4);

    r = run_cli("strange 4 --count --threads 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4055\n");
}

TEST_CASE("YBER_THREADS sets the default worker count") {
    std::string cmd = "YBER_THREADS=2 " + std::string(YBER_CLI_PATH) + " strange 4 --count 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[256];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out == "4055\n");
}
