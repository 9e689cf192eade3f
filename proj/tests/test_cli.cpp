#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(COMMENERGY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("group summary and json dump") {
    RunResult r = run("group suzuki2");
    CHECK(r.code == 0);
    CHECK(r.out.find("order:              20") != std::string::npos);
    CHECK(r.out.find("|Z(G)|:             1") != std::string::npos);
    CHECK(r.out.find("Pr(G):              1/4") != std::string::npos);  // 100/400 commuting pairs

    RunResult j = run("group dihedral:m=3 --format json");
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["order"] == 6);
    CHECK(parsed["table"].size() == 6);

    RunResult gl = run("group gl2:p=3,n=1");
    CHECK(gl.out.find("order:              48") != std::string::npos);
}

TEST_CASE("energy command") {
    RunResult r = run("energy suzuki2 --format json");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"E\":{\"exact\":\"26\"},\"LE\":{\"exact\":\"504/19\"},\"LEplus\":{\"exact\":\"484/19\"},"
          "\"meanDegree\":\"42/19\",\"vertices\":19,\"edges\":21}\n");

    RunResult sl = run("energy sl23");
    CHECK(sl.out.find("E:            30") != std::string::npos);
    CHECK(sl.out.find("LE:           408/11") != std::string::npos);
    CHECK(sl.out.find("LE+:          312/11") != std::string::npos);

    RunResult s4 = run("energy s4 --tolerance 1e-12");
    CHECK(s4.code == 0);
    CHECK(s4.out.find("30.0673775356") != std::string::npos);   // 17 + 4 sqrt5 + sqrt17
    CHECK(s4.out.find("37.29177") != std::string::npos);          // (526 + 92 sqrt13)/23
    CHECK(s4.out.find("34.50948") != std::string::npos);          // (588 + 92 sqrt5)/23
}

TEST_CASE("graph export") {
    RunResult r = run("graph dicyclic:m=2 --format dot");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("graph commuting {", 0) == 0);
    RunResult j = run("graph dicyclic:m=2 --format json");
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["vertices"] == 6);
    CHECK(parsed["edges"].size() == 3);
}

TEST_CASE("exit codes") {
    CHECK(run("group nosuchfamily").code == 2);
    CHECK(run("group dihedral:m=bogus").code == 2);
    CHECK(run("group psl2:k=4").code == 3);  // order 4080 over the default cap
    CHECK(run("group psl2:k=4 --max-order 5000").code == 0);
    CHECK(run("energy suzuki2").code == 0);
}

TEST_CASE("formulas list and eval") {
    RunResult l = run("formulas list");
    CHECK(l.code == 0);
    CHECK(l.out.find("F12a") != std::string::npos);
    CHECK(l.out.find("F20") != std::string::npos);

    RunResult e = run("formulas eval F4 m=5 z=2 --format json");
    CHECK(e.code == 0);
    auto parsed = nlohmann::json::parse(e.out);
    CHECK(parsed["E"]["value"] == "24");  // (4m-2)z - 2(m+1) at m=5, z=2
    RunResult bad = run("formulas eval F4 m=5");
    CHECK(bad.code == 2);  // missing binding
}

TEST_CASE("verify with explicit witnesses and filters") {
    RunResult r = run("verify --formula F2 --family elementary:p=2 --z 2,4,6 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("ExactMatch") != std::string::npos);
    CHECK(r.out.find("Mismatch") == std::string::npos);
    RunResult again = run("verify --formula F2 --family elementary:p=2 --z 2,4,6 --format csv");
    CHECK(again.out == r.out);  // byte-identical

    RunResult q = run("verify --formula F11 --q 3,4 --format csv");
    CHECK(q.code == 0);
    CHECK(q.out.find("E,") != std::string::npos);
    CHECK(q.out.find("Mismatch") != std::string::npos);
    CHECK(q.out.find("21/2") != std::string::npos);
    CHECK(q.out.find("66") != std::string::npos);
}

TEST_CASE("tables") {
    RunResult t = run("table order16 --format csv");
    CHECK(t.code == 0);
    int rows = 0;
    for (char c : t.out)
        if (c == '\n') ++rows;
    CHECK(rows == 7);  // header + six groups
    CHECK(t.out.find("SG(16,3)") != std::string::npos);
    CHECK(t.out.find("ExactMatch") != std::string::npos);
    CHECK(t.out.find("Mismatch") == std::string::npos);  // all six compute (18,18,18)

    RunResult p = run("table planar --format csv");
    int prow = 0;
    for (char c : p.out)
        if (c == '\n') ++prow;
    CHECK(prow == 18);  // header + 17 groups

    RunResult tor = run("table toroidal --format csv");
    int trow = 0;
    for (char c : tor.out)
        if (c == '\n') ++trow;
    CHECK(trow == 8);  // header + 7 groups
}
