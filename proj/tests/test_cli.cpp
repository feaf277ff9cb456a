#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SUQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<nlohmann::ordered_json> records(const std::string& out) {
    std::vector<nlohmann::ordered_json> r;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) r.push_back(nlohmann::ordered_json::parse(line));
    return r;
}

std::vector<std::string> lines(const std::string& out) {
    std::vector<std::string> r;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) r.push_back(line);
    return r;
}

}  // namespace

TEST_CASE("cg pos lists the admissible mu1") {
    Run r = run("--format json cg pos --k1 0 --k2 0 --k 1 --mu 3 --q 0.5");
    REQUIRE(r.code == 0);
    auto recs = records(r.out);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0]["labels"]["mu1"] == 2);
    CHECK(recs[1]["labels"]["mu1"] == 4);
    for (const auto& j : recs) {
        CHECK(j["kind"] == "pos");
        CHECK(j["q"] == "0.5");
        CHECK(j["digits"] == 50);
        CHECK(j["provenance"] == "closed_form");
        CHECK(j["value"].is_string());
    }
    std::vector<std::string> keys;
    for (auto it = recs[0].begin(); it != recs[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"kind", "labels", "method", "q", "digits", "value", "provenance"});
}

TEST_CASE("cg mixed lists the coupled kappa'") {
    Run r = run("--format json cg mixed --k 1 --j 1 --q 0.5 --mu 2 --m -1");
    REQUIRE(r.code == 0);
    auto recs = records(r.out);
    // mu' = 1 leaves only kappa' = 0
    REQUIRE(recs.size() == 1);
    CHECK(recs[0]["labels"]["kappa_p"] == 0);
    CHECK(recs[0]["kind"] == "mixed");
    Run all = run("--format json cg mixed --k 1 --j 1 --q 0.5 --mu 3 --m 0");
    CHECK(records(all.out).size() == 3);
}

TEST_CASE("method selects provenance") {
    auto a = records(run("--format json cg pos --k1 0 --k2 0 --k 1 --mu 3 --method projection").out);
    auto b = records(run("--format json cg pos --k1 0 --k2 0 --k 1 --mu 3 --method hahn").out);
    REQUIRE(a.size() == 2);
    REQUIRE(b.size() == 2);
    CHECK(a[0]["provenance"] == "oracle");
    CHECK(b[0]["provenance"] == "polynomial");
    CHECK(a[0]["value"].get<std::string>().substr(0, 30) == b[0]["value"].get<std::string>().substr(0, 30));
}

TEST_CASE("zeros only on request") {
    Run r = run("--format json cg pos --k1 0 --k2 0 --k 0:2 --mu 3");
    Run z = run("--format json --include-zeros cg pos --k1 0 --k2 0 --k 0:2 --mu 3");
    auto recs = records(r.out), zr = records(z.out);
    CHECK(recs.size() == 4);
    CHECK(zr.size() > recs.size());
    bool noted = false;
    for (const auto& j : zr)
        if (j["value"] == "0" && j.contains("note")) noted = true;
    CHECK(noted);
}

TEST_CASE("empty range is an empty stream") {
    Run r = run("--format json cg pos --k1 2 --k2 2 --mu 3");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("exit codes") {
    CHECK(run("cg pos --k1 1.5 --k2 0 --mu 3").code == 1);
    CHECK(run("--q 1 cg pos --k1 0 --k2 0 --mu 3").code == 1);
    CHECK(run("--digits 5 cg pos --k1 0 --k2 0 --mu 3").code == 1);
    CHECK(run("--format xml cg pos --k1 0 --k2 0 --mu 3").code == 1);
    CHECK(run("bogus").code == 1);
    CHECK(run("cg pos --k1 -1 --k2 0 --mu 3").code == 2);
    CHECK(run("cg mixed --k 1 --j 1 --mu 2 --m 3/2").code == 2);
    CHECK(run("cg pos --k1 1/2 --k2 0 --mu 3").code == 2);
    CHECK(run("cg pos --k1 0 --k2 0 --mu 3 --k 0:1/2").code == 1);
    CHECK(run("--format json verify symmetry --q 0.7 --trials 5").code == 0);
    CHECK(run("--format json verify symmetry --trials 5 --tolerance 1e-200").code == 3);
}

TEST_CASE("csv output") {
    Run r = run("--format csv cg pos --k1 0 --k2 0 --k 1 --mu 3");
    REQUIRE(r.code == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].rfind("kind,", 0) == 0);
    CHECK(ls[0].find("value") != std::string::npos);
    CHECK(ls[0].find("provenance") != std::string::npos);

    Run q = run("--format csv qhahn hahn --n 2 --N 5 --alpha 1 --beta 1");
    REQUIRE(q.code == 0);
    CHECK(lines(q.out).size() == 1 + 5);
}

TEST_CASE("qhahn tables") {
    auto z = records(run("--format json qhahn hahn --n 0 --N 4 --alpha 1 --beta 2").out);
    REQUIRE(z.size() == 4);
    for (const auto& j : z) CHECK(j["value"].get<std::string>().rfind("1", 0) == 0);
    auto neg = records(run("--format json qhahn hahn --n 1 --N 3 --alpha 4 --beta -2").out);
    REQUIRE(!neg.empty());
    for (const auto& j : neg) CHECK(j["orthogonal"] == false);
    auto d = records(run("--format json qhahn dual --n 1 --a 0 --b 4 --c 0").out);
    CHECK(d.size() == 4);
    for (const auto& j : d) CHECK(j["orthogonal"] == true);
}

TEST_CASE("verify reports per-check rows") {
    Run r = run("--format json verify orthogonality --max-mu 6");
    CHECK(r.code == 0);
    bool finding = false;
    for (const auto& j : records(r.out)) {
        CHECK(j.contains("max_residual"));
        if (j["status"] == "finding" || j["status"] == "confirmed") finding = true;
    }
    CHECK(finding);
}

TEST_CASE("output is deterministic") {
    for (const char* args : {"--format json cg mixed --k 1:2 --j 0:1 --mu 3 --m 0", "--format csv verify symmetry --trials 4 --seed 9",
                             "--format text qhahn dual --n 2 --a 1/2 --b 11/2 --c 0"}) {
        Run a = run(args), b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
