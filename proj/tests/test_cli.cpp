#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

const std::string kCli = PFCA_CLI_PATH;
const std::string kData = PFCA_DATA_DIR;

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
        auto d = fs::temp_directory_path() / ("pfca_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd =
        env + (env.empty() ? "" : " ") + kCli + " " + args + " >" + out.string() + " 2>" +
        err.string();
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, slurp(out), slurp(err)};
}

int count_lines_with(const std::string& text, const std::string& needle) {
    int n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.find(needle) != std::string::npos) ++n;
    return n;
}

} // namespace

TEST_CASE("validate accepts the bundled system") {
    const RunResult r = run("validate --system " + kData + "/conflict_system.csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("6 agents, 5 issues") != std::string::npos);
    CHECK(r.out.find("uniform weights assumed") != std::string::npos);
    CHECK(r.out.find("valid") != std::string::npos);
}

TEST_CASE("validate reports defective cells with coordinates and exits 2") {
    const fs::path bad = scratch_dir() / "bad.csv";
    std::ofstream(bad) << "agent,c1,c2\nx1,\"1.1,0.0\",\"0.5,0.5\"\nx2,\"0.9,0.9\",\"0.5,0.5\"\n";
    const RunResult r = run("validate --system " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("agent 'x1', issue 'c1'") != std::string::npos);
    CHECK(r.out.find("agent 'x2', issue 'c1'") != std::string::npos);
    CHECK(count_lines_with(r.out, "invalid") == 2);
}

TEST_CASE("validate exits 2 on a missing file") {
    CHECK(run("validate --system " + kData + "/no_such_file.csv").exit_code == 2);
}

TEST_CASE("analyze with closeness thresholds prints the demo partition") {
    const RunResult r = run("analyze --system " + kData +
                            "/conflict_system.csv --regime closeness --alpha 0.75 --beta 0.3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("| positive | x1 |") != std::string::npos);
    CHECK(r.out.find("| central | x2 x4 x5 x6 |") != std::string::npos);
    CHECK(r.out.find("| negative | x3 |") != std::string::npos);
}

TEST_CASE("analyze ingests both formats identically") {
    const std::string tail = " --regime score --alpha 0.5 --beta -0.5";
    const RunResult csv = run("analyze --system " + kData + "/conflict_system.csv" + tail);
    const RunResult json = run("analyze --system " + kData + "/conflict_system.json" + tail);
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == json.out);
}

TEST_CASE("analyze output is byte-deterministic") {
    const std::string args = "analyze --system " + kData +
                             "/conflict_system.csv --panel " + kData +
                             "/loss_panel.json --rule closeness --out json";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("analyze emits well-formed JSON with the partition") {
    const RunResult r = run("analyze --system " + kData +
                            "/conflict_system.csv --loss " + kData +
                            "/loss_function.json --rule score --out json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"regime\": \"score\"") != std::string::npos);
    CHECK(r.out.find("\"positive\": [") != std::string::npos);
    CHECK(r.out.find("\"matrix\"") != std::string::npos);
    CHECK(r.out.find("-0.1633") != std::string::npos);
}

TEST_CASE("precision flag controls rendering") {
    const std::string base = "analyze --system " + kData +
                             "/conflict_system.csv --regime score --alpha 0.5 --beta -0.5";
    const RunResult p4 = run(base);
    const RunResult p2 = run(base + " --precision 2");
    CHECK(p2.exit_code == 0);
    CHECK(p4.out != p2.out);
    CHECK(p2.out.find("0.78") != std::string::npos);  // x1 score at two digits
    CHECK(p4.out.find("0.7844") != std::string::npos);
}

TEST_CASE("configuration errors exit with code 3") {
    const std::string sys = " --system " + kData + "/conflict_system.csv";
    CHECK(run("analyze" + sys + " --regime score --alpha 0.2 --beta 0.5").exit_code == 3);
    CHECK(run("analyze" + sys + " --regime closeness --alpha 2.0 --beta 0.5").exit_code == 3);
    CHECK(run("analyze" + sys).exit_code == 3); // no driver
    CHECK(run("analyze" + sys + " --regime pfn --gamma-upper 0.7,0.4").exit_code == 3);
    CHECK(run("analyze" + sys + " --regime pfn --gamma-upper 0.2,0.8 --gamma-lower 0.3,0.7")
              .exit_code == 3);
    // a loss file that parses but is not monotone in any mode
    const fs::path broken = scratch_dir() / "broken_loss.json";
    std::ofstream(broken) << R"({"pp":{"mu":0.9,"nu":0.1},"bp":{"mu":0.1,"nu":0.9},
        "np":{"mu":0.5,"nu":0.5},"pn":{"mu":0.5,"nu":0.5},
        "bn":{"mu":0.5,"nu":0.5},"nn":{"mu":0.5,"nu":0.5}})";
    const RunResult r = run("analyze" + sys + " --loss " + broken.string() + " --rule pfn");
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("monotone") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
    const fs::path garbage = scratch_dir() / "garbage.json";
    std::ofstream(garbage) << "{ not json";
    CHECK(run("analyze --system " + garbage.string() + " --regime score --alpha 0.5 --beta 0")
              .exit_code == 2);

    const fs::path bad_loss = scratch_dir() / "bad_loss.json";
    std::ofstream(bad_loss) << R"({"pp":{"mu":1.4,"nu":0.0}})";
    CHECK(run("analyze --system " + kData + "/conflict_system.csv --loss " +
              bad_loss.string())
              .exit_code == 2);
}

TEST_CASE("comparison tolerance can be widened through the environment") {
    const std::string args = "analyze --system " + kData +
                             "/conflict_system.csv --regime score --alpha 0.5 --beta -0.5";
    // at eps = 0.2 the score boundaries move to 0.3 and -0.3
    const RunResult wide = run(args, "PFCONFLICT_EPS=0.2");
    REQUIRE(wide.exit_code == 0);
    CHECK(wide.out.find("| positive | x1 |") != std::string::npos);
    CHECK(wide.out.find("| negative | x3 x4 x5 |") != std::string::npos);
    CHECK(run(args, "PFCONFLICT_EPS=abc").exit_code == 3);
    CHECK(run(args, "PFCONFLICT_EPS=-1").exit_code == 3);
}

TEST_CASE("reproduce passes on the bundled fixtures") {
    const RunResult r = run("reproduce --data " + kData);
    CHECK(r.exit_code == 0);
    CHECK(count_lines_with(r.out, "[PASS]") == 18);
    CHECK(count_lines_with(r.out, "[FAIL]") == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("reproduce fails loudly on a perturbed fixture") {
    const fs::path dir = scratch_dir() / "perturbed";
    fs::create_directories(dir);
    std::string csv = slurp(fs::path(kData) / "conflict_system.csv");
    const auto pos = csv.find("1.0,0.0");
    REQUIRE(pos != std::string::npos);
    csv.replace(pos, 7, "0.5,0.5");
    std::ofstream(dir / "conflict_system.csv") << csv;
    fs::copy_file(fs::path(kData) / "loss_function.json", dir / "loss_function.json",
                  fs::copy_options::overwrite_existing);
    fs::copy_file(fs::path(kData) / "loss_panel.json", dir / "loss_panel.json",
                  fs::copy_options::overwrite_existing);

    const RunResult r = run("reproduce --data " + dir.string());
    CHECK(r.exit_code == 4);
    CHECK(count_lines_with(r.out, "[FAIL]") > 0);
    // the expected-loss checks react to the first agent's shifted attitude
    CHECK(r.out.find("[FAIL] expected-loss matrix") != std::string::npos);
    CHECK(r.out.find("some checks failed") != std::string::npos);
}
