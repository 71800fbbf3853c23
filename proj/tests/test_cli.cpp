// End-to-end tests driving the installed binary through a shell, pinning
// the exit-code contract: 0 verified, 1 refuted, 2 usage/parse error.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const std::string kCli = SEQCOMP_CLI_PATH;

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "seqcomp_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args, const std::string& env = "") {
    const fs::path out = scratch_dir() / "stdout.txt";
    const fs::path err = scratch_dir() / "stderr.txt";
    const std::string cmd = env + (env.empty() ? "" : " ") + kCli + " " + args +
                            " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

} // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("demo no-such-demo").exit_code == 2);
    CHECK(run("verify /no/such/file.json").exit_code == 2);
    CHECK(run("generate theorem2 --q 4 --m 3 --v 1 --alpha 2 --pi 1,2").exit_code == 2);
}

TEST_CASE("demos reproduce the built-in golden data") {
    for (const std::string name :
         {"example1", "example2", "table1", "remark-2-4-11", "table3"}) {
        const RunResult r = run("demo " + name);
        INFO("demo ", name, ": ", r.out, r.err);
        CHECK(r.exit_code == 0);
    }
    CHECK(run("demo table1").out.find("0 mismatches") != std::string::npos);
}

TEST_CASE("generate then verify round-trips with exit 0") {
    const fs::path doc = scratch_dir() / "table1.json";
    const std::string gen_args =
        "generate theorem2 --q 3 --m 3 --v 1 --alpha 2 --beta 1 --pi 1,2 "
        "--c1 1,2,1 --c2 0,1,2 --c0 0 --seed-metadata off -o " + doc.string();
    REQUIRE(run(gen_args).exit_code == 0);

    const RunResult v = run("verify " + doc.string() + " --claim zccs --Z 9");
    INFO(v.out, v.err);
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("zcz width (Z):   9") != std::string::npos);
    CHECK(v.out.find("verified") != std::string::npos);

    SUBCASE("documents are byte-stable across runs") {
        const fs::path again = scratch_dir() / "table1_again.json";
        const std::string gen2 =
            "generate theorem2 --q 3 --m 3 --v 1 --alpha 2 --beta 1 --pi 1,2 "
            "--c1 1,2,1 --c2 0,1,2 --c0 0 --seed-metadata off -o " + again.string();
        REQUIRE(run(gen2).exit_code == 0);
        CHECK(slurp(doc) == slurp(again));
    }

    SUBCASE("a corrupted symbol refutes the claim with exit 1") {
        std::string text = slurp(doc);
        auto pos = text.find("\"sets\"");
        REQUIRE(pos != std::string::npos);
        pos = text.find_first_of("012", text.find('[', pos));
        REQUIRE(pos != std::string::npos);
        text[pos] = text[pos] == '0' ? '1' : '0';
        const fs::path bad = scratch_dir() / "corrupt.json";
        std::ofstream(bad) << text;
        const RunResult r = run("verify " + bad.string() + " --claim zccs --Z 9");
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("tau") != std::string::npos);
    }

    SUBCASE("a wrong dimension claim refutes with exit 1") {
        CHECK(run("verify " + doc.string() + " --claim zccs --M 8").exit_code == 1);
    }
}

TEST_CASE("theorem 5 with seed references") {
    const fs::path doc = scratch_dir() / "mocss.json";
    REQUIRE(run("generate theorem5 --a seeds:ccc-2x1 --b seeds:ccc-2x10 -o " +
                doc.string())
                .exit_code == 0);
    CHECK(run("verify " + doc.string() + " --claim mocss").exit_code == 0);
    CHECK(run("verify " + doc.string() + " --claim ccc").exit_code == 1);
}

TEST_CASE("classify prints a report without needing a claim") {
    const fs::path doc = scratch_dir() / "seed10.json";
    REQUIRE(run("generate seed-ccc --m 10 -o " + doc.string()).exit_code == 0);
    const RunResult r = run("classify " + doc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ccc:             yes") != std::string::npos);
    CHECK(r.out.find("sets (M):        2") != std::string::npos);
}

TEST_CASE("engine selection via flag and environment") {
    const fs::path doc = scratch_dir() / "engine.json";
    REQUIRE(run("generate seed-ccc --m 4 -o " + doc.string()).exit_code == 0);
    CHECK(run("verify " + doc.string() + " --claim ccc --engine float").exit_code == 0);
    CHECK(run("verify " + doc.string() + " --claim ccc --engine both").exit_code == 0);
    CHECK(run("verify " + doc.string() + " --claim ccc",
              "SEQCOMP_ENGINE=float").exit_code == 0);
    CHECK(run("verify " + doc.string() + " --claim ccc --engine warp").exit_code == 2);
}

TEST_CASE("csv export") {
    const RunResult r = run("generate seed-ccc --m 2 --format csv -o -");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "0,0,0,0\n"
          "0,1,0,1\n"
          "1,0,0,1\n"
          "1,1,0,0\n");
}
