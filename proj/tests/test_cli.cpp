#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "zsum/cli.hpp"

using namespace zsum;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    TempFile(const std::string& name, const std::string& content) : path_("/tmp/" + name) {
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace

TEST_CASE("eval") {
    Run r = run({"eval", "5", "1", "x1^2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sqrt(5)") != std::string::npos);

    r = run({"--json", "eval", "5", "1", "x1^2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"radicand\":\"5\"") != std::string::npos);

    r = run({"--json", "eval", "3", "1", "x1"});
    CHECK(r.out.find("\"kind\":\"zero\"") != std::string::npos);
}

TEST_CASE("brute") {
    Run r = run({"brute", "2", "2", "x1*x2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("counts: 3 1") != std::string::npos);

    r = run({"--json", "brute", "2", "2", "x1*x2"});
    CHECK(r.out.find("[\"3\",\"1\"]") != std::string::npos);
}

TEST_CASE("verify") {
    Run r = run({"verify", "12", "2", "x1^2+3*x1*x2+x2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("AGREE") != std::string::npos);

    // an absurd tolerance forces a mismatch exit
    r = run({"--tol", "1e-30", "verify", "7", "1", "x1^2"});
    CHECK(r.code == 5);
    CHECK(r.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("gauss") {
    Run r = run({"gauss", "2", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sqrt(5)") != std::string::npos);
    CHECK(r.out.find("1/2") != std::string::npos); // phase of -sqrt(5)

    r = run({"gauss", "2", "4"});
    CHECK(r.code == 2); // not coprime
}

TEST_CASE("classify") {
    Run r = run({"--json", "classify", "8", "x1*x2 + x1^2*x2^2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"outcome\":\"Hard\"") != std::string::npos);
    CHECK(r.out.find("Group Condition fails") != std::string::npos);

    r = run({"--json", "classify", "2", "x1*x2"});
    CHECK(r.out.find("\"outcome\":\"TractableInClassC\"") != std::string::npos);
    CHECK(r.out.find("\"decomposition\"") != std::string::npos);

    r = run({"classify", "6", "x1*x2"});
    CHECK(r.code == 2); // not a prime power
}

TEST_CASE("matrix-test") {
    TempFile h("zsum_test_h.json", "{\"m\":2,\"M\":2,\"exponents\":[[0,0],[0,1]]}");
    Run r = run({"matrix-test", h.path(), "unitary"});
    CHECK(r.code == 0);
    CHECK(r.out.find("discrete unitary") != std::string::npos);

    r = run({"matrix-test", h.path(), "group"});
    CHECK(r.out.find("holds") != std::string::npos);

    r = run({"--json", "matrix-test", h.path(), "ortho"});
    CHECK(r.out.find("\"violation\":null") != std::string::npos);

    r = run({"--json", "matrix-test", h.path(), "ggc"});
    CHECK(r.out.find("TractableInClassC") != std::string::npos);

    r = run({"matrix-test", h.path(), "rank1"});
    CHECK(r.out.find("no violation") != std::string::npos);

    TempFile bad("zsum_test_bad.json", "{\"m\":2");
    r = run({"matrix-test", bad.path(), "unitary"});
    CHECK(r.code == 3);

    r = run({"matrix-test", "/nonexistent/x.json", "unitary"});
    CHECK(r.code == 2);

    r = run({"matrix-test", h.path(), "bogus"});
    CHECK(r.code == 2);
}

TEST_CASE("gadget") {
    Run r = run({"gadget", "hp", "1", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 2) == "6\n");

    r = run({"gadget", "star", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 2) == "4\n");

    r = run({"--json", "gadget", "star", "3"});
    CHECK(r.out.find("\"u\":1") != std::string::npos);
    CHECK(r.out.find("\"v\":2") != std::string::npos);
}

TEST_CASE("bp") {
    TempFile f("zsum_test_f.json", "{\"m\":2,\"M\":2,\"exponents\":[[0,0],[0,1]]}");
    Run r = run({"--json", "bp", f.path(), "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("8.0") != std::string::npos); // m^{2p+1} = 8
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"eval", "5", "1"}).code == 2);           // missing argument
    CHECK(run({"eval", "5", "1", "x1+**"}).code == 3);  // parse error
    CHECK(run({"eval", "abc", "1", "x1"}).code == 2);   // bad modulus
    CHECK(run({"--budget", "10", "brute", "7", "3", "x1*x2"}).code == 4);
    CHECK(run({"eval", "7", "1", "@/nonexistent/poly.txt"}).code == 2);
    CHECK(run({"eval", "7", "1", "x1^3"}).code == 2);   // degree error
}

TEST_CASE("poly via @file") {
    TempFile p("zsum_test_poly.txt", "x1^2 + 1");
    Run r = run({"eval", "5", "1", "@" + p.path()});
    CHECK(r.code == 0);
    CHECK(r.out.find("sqrt(5)") != std::string::npos);
}

TEST_CASE("help") {
    Run r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eval") != std::string::npos);
}
