#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "denum/trace.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(DENUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string temp_path(const char* name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir && *dir ? dir : "/tmp") + "/" + name;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char ch : text)
        if (ch == '\n')
            ++lines;
    return lines;
}

} // namespace

TEST_CASE("count prints a bare integer") {
    const RunResult r = run("count 25 3 7 11");
    CHECK(r.status == 0);
    CHECK(r.out == "3\n");
    CHECK(run("count 0 3 7 11").out == "1\n");
    CHECK(run("count 51 6 14 22").out == "0\n");
}

TEST_CASE("count handles huge inputs") {
    const RunResult r =
        run("count 1000000000000000000 999999999989 999999999961 999999999999");
    CHECK(r.status == 0);
    CHECK(!r.out.empty());
}

TEST_CASE("count --verify cross-checks the oracle") {
    const RunResult ok = run("count 100 6 10 15 --verify");
    CHECK(ok.status == 0);
    CHECK(ok.out == "10\n");
    // Beyond the DP guard the verification itself is refused.
    const RunResult guarded = run("count 100000000000 3 7 11 --verify");
    CHECK(guarded.status == 2);
}

TEST_CASE("count exit codes for invalid input") {
    CHECK(run("count 5 0 7 11").status == 2);
    CHECK(run("count -4 3 7 11").status == 2);
    CHECK(run("count 5 3 3 7").status == 2);
    CHECK(run("count x 3 7 11").status == 2);
    CHECK(run("count 5 3 7").status == 2);         // missing positional
    CHECK(run("count 5 3 7 11 --bogus").status == 2);
}

TEST_CASE("count --mu forces and validates the direction") {
    const RunResult forced = run("count 25 3 7 11 --mu 0,1,1");
    CHECK(forced.status == 0);
    CHECK(forced.out == "3\n");
    CHECK(run("count 25 3 7 11 --mu 0,0,0").status == 2);
    CHECK(run("count 25 3 7 11 --mu 1,2").status == 2);
}

TEST_CASE("count --trace writes replayable records") {
    const std::string path = temp_path("denum_cli_trace.txt");
    const RunResult r = run("count 25 3 7 11 --trace " + path);
    REQUIRE(r.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    int records = 0;
    bool saw_sum = false;
    while (std::getline(in, line)) {
        const denum::TraceRecord rec = denum::parse_record(line);
        if (rec.stage == denum::Stage::sum) {
            saw_sum = true;
            CHECK(rec.get("count") == "3");
        }
        ++records;
    }
    CHECK(records >= 10);
    CHECK(saw_sum);
    std::remove(path.c_str());
}

TEST_CASE("batch processes a CSV with header and bad lines") {
    const std::string in_path = temp_path("denum_batch_in.csv");
    const std::string out_path = temp_path("denum_batch_out.csv");
    {
        std::ofstream out(in_path);
        out << "n,a,b,c\n";
        out << "25,3,7,11\n";
        out << "51,6,14,22\n";
        out << "100, 6, 10, 15\n";
        out << "5,0,7,11\n";
        out << "not,enough\n";
        out << "0,2,9,11\n";
    }
    const RunResult r = run("batch " + in_path + " -o " + out_path);
    CHECK(r.status == 0);
    std::ifstream in(out_path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    const std::string text = content.str();
    CHECK(count_lines(text) == 6); // one output line per data line
    CHECK(text.find("25,3,7,11,3\n") != std::string::npos);
    CHECK(text.find("51,6,14,22,0\n") != std::string::npos);
    CHECK(text.find("100,6,10,15,10\n") != std::string::npos);
    CHECK(text.find("5,0,7,11,error:2\n") != std::string::npos);
    CHECK(text.find("not,enough,error:2\n") != std::string::npos);
    CHECK(text.find("0,2,9,11,1\n") != std::string::npos);

    // Parallel mode produces byte-identical output in input order.
    const std::string out_jobs = temp_path("denum_batch_out4.csv");
    CHECK(run("batch " + in_path + " -o " + out_jobs + " --jobs 4").status == 0);
    std::ifstream in4(out_jobs);
    std::stringstream content4;
    content4 << in4.rdbuf();
    CHECK(content4.str() == text);

    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    std::remove(out_jobs.c_str());
}

TEST_CASE("batch on an empty file writes nothing and succeeds") {
    const std::string in_path = temp_path("denum_batch_empty.csv");
    std::ofstream(in_path).close();
    const RunResult r = run("batch " + in_path);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::remove(in_path.c_str());
}

TEST_CASE("batch with an unreadable file fails with exit 2") {
    CHECK(run("batch /nonexistent/nowhere.csv").status == 2);
}

TEST_CASE("oracle subcommand") {
    const RunResult r = run("oracle 25 3 7 11");
    CHECK(r.status == 0);
    CHECK(r.out == "3\n");
    CHECK(run("oracle 14 3 7 11").out == "2\n");
    CHECK(run("oracle 100000000000 3 7 11").status == 2); // guard
    CHECK(run("oracle 1000 3 7 11 --limit 999").status == 2);
}

TEST_CASE("bench subcommand") {
    const RunResult r = run("bench --bits 8 --samples 5 --seed 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("samples=5") != std::string::npos);
    CHECK(r.out.find("bounds_ok=1") != std::string::npos);
    CHECK(r.out.find("mismatches=0") != std::string::npos);

    const RunResult empty = run("bench --samples 0");
    CHECK(empty.status == 0);
    CHECK(empty.out.find("samples=0") != std::string::npos);

    CHECK(run("bench --bits 99").status == 2);
}

TEST_CASE("DENUM_SEED is honored as a default seed") {
    const RunResult ok = run("count 25 3 7 11");
    CHECK(ok.status == 0);
    RunResult env;
    {
        const std::string cmd = std::string("DENUM_SEED=42 ") + DENUM_CLI_PATH +
                                " count 25 3 7 11 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[256];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
            env.out.append(buf, got);
        const int rc = pclose(pipe);
        env.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    }
    CHECK(env.status == 0);
    CHECK(env.out == "3\n");
    {
        const std::string cmd = std::string("DENUM_SEED=junk ") + DENUM_CLI_PATH +
                                " count 25 3 7 11 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        char buf[256];
        while (fread(buf, 1, sizeof buf, pipe) > 0) {
        }
        const int rc = pclose(pipe);
        CHECK((WIFEXITED(rc) ? WEXITSTATUS(rc) : -1) == 2);
    }
}
