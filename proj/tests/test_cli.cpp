#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "spec_gen.hpp"
#include "sweep.hpp"

using namespace hamc;
using namespace hamc::cli;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("hamc_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = dir / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("cmd_compute") {
    TempDir tmp;
    std::ostringstream out, err;
    SUBCASE("regular1") {
        const auto spec = tmp.file("spec.json", "{\"leaves\":[1,1,1,1]}");
        CHECK(cmd_compute(spec, out, err) == kExitOk);
        CHECK(out.str().find("class: Regular1") != std::string::npos);
        CHECK(out.str().find("lambda: 2") != std::string::npos);
        CHECK(out.str().find("delta: 1") != std::string::npos);
    }
    SUBCASE("unsupported still exits 0") {
        const auto spec = tmp.file("spec.json", "{\"leaves\":[1,2,3]}");
        CHECK(cmd_compute(spec, out, err) == kExitOk);
        CHECK(out.str().find("lambda: Unsupported") != std::string::npos);
    }
    SUBCASE("malformed JSON") {
        const auto spec = tmp.file("spec.json", "{\"leaves\":");
        CHECK(cmd_compute(spec, out, err) == kExitParse);
    }
    SUBCASE("missing file") {
        CHECK(cmd_compute(tmp.path("absent.json"), out, err) == kExitParse);
    }
    SUBCASE("too small") {
        const auto spec = tmp.file("spec.json", "{\"leaves\":[1]}");
        CHECK(cmd_compute(spec, out, err) == kExitOk);
        CHECK(out.str().find("lambda: TooSmallForCycle") != std::string::npos);
    }
}

TEST_CASE("cmd_construct and cmd_verify round trip") {
    TempDir tmp;
    std::ostringstream out, err;
    const auto spec = tmp.file("spec.json", "{\"leaves\":[2,2]}");
    const auto plan_path = tmp.path("plan.json");
    REQUIRE(cmd_construct(spec, plan_path, out, err) == kExitOk);
    CHECK(slurp(plan_path) ==
          "{\"added_edges\":[[2,5],[3,4]],\"witness_cycle\":[2,0,3,4,1,5]}\n");

    const auto graph = tmp.file("graph.txt", "6 5\n0 1\n0 2\n0 3\n1 4\n1 5\n");
    std::ostringstream vout, verr;
    CHECK(cmd_verify(graph, plan_path, vout, verr) == kExitOk);
    CHECK(vout.str() == "VALID, 2 edges added\n");

    // reusing an existing edge must be flagged
    const auto bad = tmp.file(
        "bad.json", "{\"added_edges\":[[0,1],[3,4]],\"witness_cycle\":[2,0,3,4,1,5]}");
    std::ostringstream bout, berr;
    CHECK(cmd_verify(graph, bad, bout, berr) == kExitInvalidPlan);
    CHECK(bout.str().find("INVALID") != std::string::npos);

    // witness that skips a vertex
    const auto skip = tmp.file(
        "skip.json", "{\"added_edges\":[[2,5],[3,4]],\"witness_cycle\":[2,0,3,4,1]}");
    std::ostringstream sout, serr;
    CHECK(cmd_verify(graph, skip, sout, serr) == kExitInvalidPlan);

    std::ostringstream uout, uerr;
    const auto unsupported = tmp.file("u.json", "{\"leaves\":[1,2,3]}");
    CHECK(cmd_construct(unsupported, "", uout, uerr) == kExitUnsupported);
}

TEST_CASE("cmd_oracle") {
    TempDir tmp;
    SUBCASE("spec input") {
        std::ostringstream out, err;
        const auto spec = tmp.file("spec.json", "{\"leaves\":[1,1,1]}");
        OracleCmdOptions opts;
        opts.spec_path = spec;
        CHECK(cmd_oracle(opts, out, err) == kExitOk);
        CHECK(out.str().find("minimum: 2") != std::string::npos);
    }
    SUBCASE("graph input") {
        std::ostringstream out, err;
        OracleCmdOptions opts;
        opts.graph_path = tmp.file("p6.txt", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
        CHECK(cmd_oracle(opts, out, err) == kExitOk);
        CHECK(out.str().find("minimum: 1") != std::string::npos);
        CHECK(out.str().find("added_edges: [[0,5]]") != std::string::npos);
    }
    SUBCASE("budget exceeded") {
        std::ostringstream out, err;
        OracleCmdOptions opts;
        opts.spec_path = tmp.file("s.json", "{\"leaves\":[6]}");
        opts.budget = 2;
        CHECK(cmd_oracle(opts, out, err) == kExitBudget);
    }
    SUBCASE("path target") {
        std::ostringstream out, err;
        OracleCmdOptions opts;
        opts.spec_path = tmp.file("s.json", "{\"leaves\":[3]}");
        opts.path_target = true;
        CHECK(cmd_oracle(opts, out, err) == kExitOk);
        CHECK(out.str().find("minimum: 1") != std::string::npos);
    }
}

TEST_CASE("sweep rows and CSV") {
    SweepOptions opts;
    opts.family = "regular1";
    opts.n_min = 2;
    opts.n_max = 6;
    auto rows = run_family_sweep(opts);
    REQUIRE(rows.size() == 5);
    const int expected[] = {1, 2, 2, 3, 3};
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].formula == expected[i]);
        CHECK(rows[i].oracle == expected[i]);
        CHECK(rows[i].construction == expected[i]);
        CHECK(rows[i].agree);
    }
    const std::string csv = sweep_to_csv(rows);
    CHECK(csv.substr(0, 45) == "spec;class;formula;oracle;construction;agree\n");
    CHECK(csv.find("[1,1];Regular1;1;1;1;true\n") != std::string::npos);
}

TEST_CASE("sweep oracle capping and random family") {
    SweepOptions opts;
    opts.family = "regularK";
    opts.k = 4;
    opts.n_min = 1;
    opts.n_max = 3;
    auto rows = run_family_sweep(opts);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].oracle == 3);           // [4], 5 vertices
    CHECK(rows[1].oracle == 6);           // [4,4], 10 vertices
    CHECK_FALSE(rows[2].oracle.has_value());  // [4,4,4], 15 vertices
    CHECK(rows[2].oracle_marker == "SKIPPED");
    CHECK(rows[2].formula == 9);
    CHECK(rows[2].construction == 9);
    CHECK(rows[2].agree);

    SweepOptions rnd;
    rnd.family = "random";
    rnd.count = 20;
    rnd.seed = 5;
    rnd.with_oracle = false;
    rnd.n_min = 1;
    rnd.n_max = 6;
    auto rrows = run_family_sweep(rnd);
    REQUIRE(rrows.size() == 20);
    for (const auto& row : rrows) {
        CHECK(row.oracle_marker == "SKIPPED");
        if (row.formula) CHECK(row.construction == row.formula);
        CHECK(row.agree);
    }
}

TEST_CASE("sweep is byte-stable across runs and thread counts") {
    SweepOptions opts;
    opts.family = "deserted";
    opts.count = 4;
    opts.seed = 9;
    opts.n_min = 4;
    opts.n_max = 7;
    opts.l_max = 3;
    const std::string a = sweep_to_csv(run_family_sweep(opts));
    const std::string b = sweep_to_csv(run_family_sweep(opts));
    opts.threads = 4;
    const std::string c = sweep_to_csv(run_family_sweep(opts));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("cmd_gen determinism and unsatisfiable ranges") {
    std::ostringstream out1, out2, err;
    GenCmdOptions opts;
    opts.seed = 1;
    opts.constraint = "regular2";
    opts.ranges = GenRanges{2, 4, 0, 4};
    CHECK(cmd_gen(opts, out1, err) == kExitOk);
    CHECK(cmd_gen(opts, out2, err) == kExitOk);
    CHECK(out1.str() == out2.str());
    CHECK(out1.str().find("\"leaves\":[2,2") != std::string::npos);

    GenCmdOptions bad;
    bad.constraint = "regularK";
    bad.ranges = GenRanges{1, 8, 1, 2};
    std::ostringstream bout, berr;
    CHECK(cmd_gen(bad, bout, berr) == kExitUnsatisfiable);
}

TEST_CASE("spec generator respects constraints") {
    Lcg rng(17);
    const GenRanges ranges{1, 8, 0, 5};
    const std::pair<SpecConstraint, CaterpillarClass> cases[] = {
        {SpecConstraint::Regular1, CaterpillarClass::Regular1},
        {SpecConstraint::Regular2, CaterpillarClass::Regular2},
        {SpecConstraint::RegularK, CaterpillarClass::RegularK},
        {SpecConstraint::Zero2, CaterpillarClass::ZeroOrAtLeastTwo},
        {SpecConstraint::Deserted, CaterpillarClass::DesertedSegments},
    };
    for (const auto& [constraint, expected] : cases) {
        for (int i = 0; i < 10; ++i) {
            auto spec = generate_spec(rng, constraint, ranges);
            REQUIRE(spec.has_value());
            CHECK(classify(*spec).kind == expected);
        }
    }
    for (int i = 0; i < 10; ++i) {
        auto spec = generate_spec(rng, SpecConstraint::AtLeast3, ranges);
        REQUIRE(spec.has_value());
        for (int l : spec->leaf_counts()) CHECK(l >= 3);
    }
}

#ifdef HAMC_CLI_BIN
TEST_CASE("hamc binary exit codes") {
    TempDir tmp;
    const std::string bin = HAMC_CLI_BIN;
    const std::string null_out = " > " + tmp.path("out.txt") + " 2> " + tmp.path("err.txt");
    auto run = [&](const std::string& args) {
        const int status = std::system((bin + " " + args + null_out).c_str());
        return WEXITSTATUS(status);
    };
    const auto spec = tmp.file("spec.json", "{\"leaves\":[2,2]}");
    const auto bad = tmp.file("bad.json", "nope");
    CHECK(run("compute --spec " + spec) == 0);
    CHECK(run("compute --spec " + bad) == 2);
    CHECK(run("construct --spec " + spec + " --out " + tmp.path("plan.json")) == 0);
    CHECK(run("oracle --spec " + spec + " --budget 1") == 6);
    CHECK(run("gen --constraint regularK --l-min 1 --l-max 2") == 7);
    CHECK(run("nonsense") == 2);
    CHECK(run("--help") == 0);
    const auto u = tmp.file("u.json", "{\"leaves\":[1,2,3]}");
    CHECK(run("construct --spec " + u) == 3);
    const auto graph = tmp.file("graph.txt", "6 5\n0 1\n0 2\n0 3\n1 4\n1 5\n");
    CHECK(run("verify --graph " + graph + " --plan " + tmp.path("plan.json")) == 0);
    const auto badplan = tmp.file(
        "badplan.json", "{\"added_edges\":[[0,1]],\"witness_cycle\":[0,1,2,3,4,5]}");
    CHECK(run("verify --graph " + graph + " --plan " + badplan) == 5);
}
#endif
