#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli_path;
std::string g_data_dir = BALLOTLAB_TEST_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("help lists every identity") {
    RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    for (const char* name : {"bdn", "spiro", "e17", "e21", "relpkdes", "relpkdesmh", "zhuang",
                             "formdespk", "gfbpk", "fomofbxt", "gfdep", "recofpnd", "ode",
                             "multinomial", "eulerian-catalan", "deslaw", "phi-roundtrip", "rem1"})
        CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("verify emits json lines and exit code 0") {
    RunResult r = run_cli("verify --identity=bdn --n-max=6");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output.substr(0, r.output.find('\n')));
    CHECK(j["identity"] == "bdn");
    CHECK(j["status"] == "pass");
    CHECK(j["parameters"]["counts"][5] == "45");

    CHECK(run_cli("verify --identity=e17 --n-max=0").exit_code == 0);
    CHECK(run_cli("verify --identity=spiro --n-max=5").exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("verify --identity=wat").exit_code == 2);
    CHECK(run_cli("table nope 4").exit_code == 2);
    CHECK(run_cli("series nope").exit_code == 2);
    CHECK(run_cli("table ballot-des 4 --format=yaml").exit_code == 2);
    CHECK(run_cli("table ballot-des 11").exit_code == 2);  // beyond the enumeration limit
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("verify --n-max=99").exit_code == 2);
}

TEST_CASE("enumeration guard override via environment") {
    std::string saved = g_cli_path;
    g_cli_path = "BALLOTLAB_ENUM_LIMIT=4 " + saved;
    CHECK(run_cli("table ballot-des 5").exit_code == 2);
    CHECK(run_cli("table ballot-des 4").exit_code == 0);
    g_cli_path = saved;
}

TEST_CASE("table output") {
    RunResult csv = run_cli("table ballot-des 5");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("n,des,count\n") == 0);
    CHECK(csv.output.find("5,1,22\n") != std::string::npos);

    RunResult json = run_cli("table perm-depth 4 --format=json");
    CHECK(json.exit_code == 0);
    auto rows = nlohmann::json::parse(json.output);
    bool found = false;
    for (const auto& row : rows)
        if (row["n"] == 4 && row["depth"] == 2) {
            CHECK(row["count"] == "3");
            found = true;
        }
    CHECK(found);

    CHECK(run_cli("table odd-M 3").output.find("3,1,2") != std::string::npos);
}

TEST_CASE("series dumps") {
    RunResult r = run_cli("series B_des --nx=7 --nt=7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# box x<=7") == 0);
    // x^7 t^3 entry is 604/7!
    CHECK(r.output.find("7 0 3 0 151/1260\n") != std::string::npos);

    RunResult ballot = run_cli("series ballot_count --nx=5");
    CHECK(ballot.output.find("0 0 0 0 1/1\n") != std::string::npos);
    CHECK(ballot.output.find("4 0 0 0 3/8\n") != std::string::npos);
    CHECK(ballot.output.find("5 0 0 0 3/8\n") != std::string::npos);

    RunResult o0 = run_cli("series O --nx=0");
    CHECK(o0.exit_code == 0);
    CHECK(o0.output.find("0 0 0 0 1/1\n") != std::string::npos);

    // the box flags also have long spellings
    RunResult alias = run_cli("series B_des --box-nx=7 --box-nt=7");
    CHECK(alias.exit_code == 0);
    CHECK(alias.output.find("7 0 3 0 151/1260\n") != std::string::npos);

    // determinism: identical invocations, identical bytes
    RunResult again = run_cli("series B_des --nx=7 --nt=7");
    CHECK(again.output == r.output);
}

TEST_CASE("conjecture run is consistent and labeled as evidence") {
    RunResult r = run_cli("conjecture --n-max=5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"status\":\"consistent\"") != std::string::npos);
    CHECK(r.output.find("verified") == std::string::npos);
    CHECK(r.output.find("proved") == std::string::npos);
}

TEST_CASE("oeis subcommand") {
    CHECK(run_cli("oeis A000246 " + g_data_dir + "/b000246.txt").exit_code == 0);
    CHECK(run_cli("oeis A008292 " + g_data_dir + "/b008292.txt").exit_code == 0);
    CHECK(run_cli("oeis A321280 " + g_data_dir + "/b321280.txt").exit_code == 0);
    // wrong pairing: triangle values disagree -> identity failure, exit 1
    CHECK(run_cli("oeis A008292 " + g_data_dir + "/b321280.txt").exit_code == 1);
    // unreadable file is a usage-class error
    CHECK(run_cli("oeis A000246 /no/such/file").exit_code == 2);
}

TEST_SUITE_END();

int main(int argc, char** argv) {
    doctest::Context context;
    std::vector<char*> doctest_args;
    doctest_args.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        if (argv[i][0] == '-') {
            doctest_args.push_back(argv[i]);
        } else {
            g_cli_path = argv[i];
        }
    }
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: cli_tests <path-to-ballotlab-binary> [doctest args]\n");
        return 1;
    }
    context.applyCommandLine(static_cast<int>(doctest_args.size()), doctest_args.data());
    return context.run();
}
