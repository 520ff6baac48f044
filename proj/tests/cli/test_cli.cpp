#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(POWERSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string& fixture_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/powersum-cli-XXXXXX";
        char* made = mkdtemp(tmpl);
        REQUIRE(made != nullptr);
        auto write = [&](const char* name, const std::string& text) {
            std::ofstream out(std::string(made) + "/" + name);
            out << text;
        };
        write("fib.json", R"({
  "order": 2,
  "coeffs": ["x", "1"],
  "initial": ["0", "1"]
})");
        write("bnd2.json", R"({
  "order": 2,
  "coeffs": ["x", "1"],
  "initial": ["1", "x"]
})");
        write("worked.json", R"({
  "order": 3,
  "coeffs": ["x^2", "1", "x"],
  "initial": ["1", "1", "1"]
})");
        write("tuned.json", R"({
  "order": 2,
  "coeffs": ["2*x^2 + x + 2", "-2*x^2 - x - 1"],
  "initial": ["x^2 - 3/2*x + 1", "2*x^4 - 2*x^3 - 1/2*x^2 - 3/2*x + 1"],
  "power_sum": [
    {"a": "x^2 - 3/2*x", "alpha": "2*x^2 + x + 1"},
    {"a": "1", "alpha": "1"}
  ]
})");
        write("pair.json", R"({
  "kind": "third",
  "params": {"m": 3, "n": 2, "a": 2},
  "witness": {"f": "x^3 - 12*x", "g": "x^2 - 16", "phi": "x", "lambda": "x", "mu": "x"}
})");
        write("pair_bad.json", R"({
  "kind": "third",
  "params": {"m": 3, "n": 2, "a": 2},
  "witness": {"f": "x^3 - 12*x", "g": "x^2 - 15", "phi": "x", "lambda": "x", "mu": "x"}
})");
        return std::string(made);
    }();
    return dir;
}

std::string fx(const char* name) { return fixture_dir() + "/" + name; }

}  // namespace

TEST_CASE("reruns are byte identical") {
    const std::vector<std::string> commands = {
        "terms --spec " + fx("fib.json"),
        "terms --spec " + fx("tuned.json"),
        "check-structure --spec " + fx("tuned.json"),
        "verify-roots --spec " + fx("worked.json"),
        "decompose --poly 'x^6-3*x^3+2'",
        "classify --poly '2*(3*x+1)^4 - 7'",
        "find-outer-q --outer 'x^2' --target '(x^2+1)^2'",
        "identities --family chebyshev --max-n 8",
        "height --poly '(x^2+1)/x'",
        "valuation --poly '(x^2+1)/x' --target x",
        "standard-pair --spec " + fx("pair.json"),
        "bounds --theorem 2 --spec " + fx("worked.json"),
        "bounds --theorem 3 --spec " + fx("bnd2.json"),
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd);
        const auto first = run_cli(cmd);
        const auto second = run_cli(cmd);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
        CHECK(contains(first.out, "powersum-lab/1"));
    }
}

TEST_CASE("terms") {
    const auto r = run_cli("terms --spec " + fx("fib.json"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"x^3 + 2*x\""));
    const auto rc = run_cli("terms --spec " + fx("tuned.json"));
    CHECK(rc.code == 0);
    CHECK(contains(rc.out, "\"power_sum_consistent\": true"));
}

TEST_CASE("check-structure") {
    const auto r = run_cli("check-structure --spec " + fx("tuned.json"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"all_ok\": true"));
    CHECK(contains(r.out, "\"ell\": 8"));
    const auto bad = run_cli("check-structure --spec " + fx("fib.json"));
    CHECK(bad.code == 2);
}

TEST_CASE("verify-roots") {
    const auto r = run_cli("verify-roots --spec " + fx("worked.json"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"printed_matches\": false"));
    CHECK(contains(r.out, "\"ok\": true"));
    const auto r2 = run_cli("verify-roots --spec " + fx("fib.json"));
    CHECK(r2.code == 0);
    CHECK(contains(r2.out, "order-2"));
}

TEST_CASE("decompose and classify") {
    const auto r = run_cli("decompose --poly 'x^6-3*x^3+2'");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"x^2 - 3*x + 2\""));
    CHECK(contains(r.out, "\"x^3\""));
    CHECK(contains(r.out, "\"indecomposable\": false"));

    const auto c = run_cli("classify --poly '2*(3*x+1)^4 - 7'");
    CHECK(c.code == 0);
    CHECK(contains(c.out, "\"kind\": \"cyclic\""));
}

TEST_CASE("find-outer-q") {
    const auto hit = run_cli("find-outer-q --outer 'x^2' --target '(x^2+1)^2'");
    CHECK(hit.code == 0);
    CHECK(contains(hit.out, "\"q\": \"x^2 + 1\""));
    const auto miss = run_cli("find-outer-q --outer 'x^2' --target 'x^2+1'");
    CHECK(miss.code == 1);
    CHECK(contains(miss.out, "\"q\": null"));
    CHECK(contains(miss.out, "none over ℚ"));
}

TEST_CASE("identities") {
    const auto r = run_cli("identities --family chebyshev --max-n 8");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"all_ok\": true"));
    CHECK(contains(r.out, "\"failures\": []"));
    const auto bad = run_cli("identities --family chebyshev --max-n 100");
    CHECK(bad.code == 2);
}

TEST_CASE("height and valuation") {
    const auto h = run_cli("height --poly '(x^2+1)/x'");
    CHECK(h.code == 0);
    CHECK(contains(h.out, "\"height\": 2"));
    CHECK(contains(h.out, "\"sum_formula_holds\": true"));

    const auto hz = run_cli("height --poly '0'");
    CHECK(hz.code == 0);
    CHECK(contains(hz.out, "\"height\": \"infinity\""));

    const auto v = run_cli("valuation --poly '(x^2+1)/x' --target x");
    CHECK(v.code == 0);
    CHECK(contains(v.out, "\"valuation\": -1"));
}

TEST_CASE("standard-pair witnesses") {
    const auto good = run_cli("standard-pair --spec " + fx("pair.json"));
    CHECK(good.code == 0);
    CHECK(contains(good.out, "\"witness_verified\": true"));
    const auto bad = run_cli("standard-pair --spec " + fx("pair_bad.json"));
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "\"witness_verified\": false"));
}

TEST_CASE("bounds") {
    const auto t3 = run_cli("bounds --theorem 3 --spec " + fx("bnd2.json"));
    CHECK(t3.code == 0);
    CHECK(contains(t3.out, "\"c\": \"8736\""));
    const auto t2 = run_cli("bounds --theorem 2 --spec " + fx("worked.json"));
    CHECK(t2.code == 0);
    CHECK(contains(t2.out, "\"c2\": \"314931\""));
    CHECK(contains(t2.out, "\"c11\": \"17/3\""));
    CHECK(contains(t2.out, "\"valid\": true"));
}

TEST_CASE("text format") {
    const auto r = run_cli("height --poly '(x^2+1)/x' --format text");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "schema = powersum-lab/1"));
    CHECK(contains(r.out, "results.height = 2"));
}

TEST_CASE("input errors exit with 2") {
    CHECK(run_cli("decompose --poly '1/2/3'").code == 2);
    CHECK(run_cli("terms --spec /nonexistent/spec.json").code == 2);
    CHECK(run_cli("decompose --nope 1").code == 2);
    CHECK(run_cli("bounds --theorem 4 --spec " + fx("fib.json")).code == 2);
    CHECK(run_cli("height --poly 'x +'").code == 2);
}
