// End-to-end checks of the command-line tool: exit codes, format parity,
// byte determinism, JSON round-tripping.  The binary path is injected by
// the build as ECHCAP_CLI_PATH.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("'") + ECHCAP_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return RunResult{WEXITSTATUS(status), std::move(out)};
}

// Split a CSV document into cell rows, preserving empty trailing cells.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                row.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        row.push_back(cur);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

TEST_CASE("capacities emits the classical twelve entries") {
    auto r = run_cli("capacities --a 2 --b 3 --count 12 --format csv");
    REQUIRE(r.exit_code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 13);
    REQUIRE(rows[0] == std::vector<std::string>{"index", "value"});
    const char* expect[] = {"0", "2", "3", "4", "5", "6", "6", "7", "8", "8", "9", "9"};
    for (int i = 0; i < 12; ++i) {
        CHECK(rows[i + 1][0] == std::to_string(i));
        CHECK(rows[i + 1][1] == expect[i]);
    }
}

TEST_CASE("decide exit codes distinguish the verdicts") {
    CHECK(run_cli("decide --src 1,4 --dst 2,2").exit_code == 0);
    CHECK(run_cli("decide --src 1,1 --dst 1,1").exit_code == 0);
    CHECK(run_cli("decide --src 2,3 --dst 1,6").exit_code == 1);
}

TEST_CASE("decide reports the minimal witness in the scaled frame") {
    auto r = run_cli("decide --src 2,3 --dst 1,6");
    REQUIRE(r.exit_code == 1);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["command"] == "decide");
    REQUIRE(j["rows"].size() == 1);
    auto row = j["rows"][0];
    CHECK(row["verdict"] == "Obstructed");
    CHECK(row["witness_index"] == "1");
    CHECK(row["witness_lhs"] == "1");
    CHECK(row["witness_rhs"] == "2");
    CHECK(row["scale"] == "1");
}

TEST_CASE("usage and domain errors exit 2") {
    CHECK(run_cli("capacities --a xx --b 3 --count 2").exit_code == 2);
    CHECK(run_cli("capacities --a 1.5 --b 3 --count 2").exit_code == 2);
    CHECK(run_cli("capacities --a 0 --b 3 --count 2").exit_code == 2);
    CHECK(run_cli("decide --src 1,4").exit_code == 2);
    CHECK(run_cli("decide --src 1 --dst 2,2").exit_code == 2);
    CHECK(run_cli("counts --a 2 --b 3 --n -4").exit_code == 2);
    CHECK(run_cli("gf --a 2 --b 3 --c 2 --count 4").exit_code == 2);
    CHECK(run_cli("capacity-fn --tol 1/1000").exit_code == 2);
    CHECK(run_cli("capacity-fn --a 2 --sweep 1:2:1").exit_code == 2);
    CHECK(run_cli("capacity-fn --a 1/2").exit_code == 2);
    CHECK(run_cli("verify-lemma --a 1 --b 3 --c 2 --d 2").exit_code == 2);
    CHECK(run_cli("fill-check --n 0").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("capacities --a 2 --b 3 --count 2 --format yaml").exit_code == 2);
}

TEST_CASE("counts matches the oracle value") {
    auto r = run_cli("counts --a 2 --b 3 --n 12 --format csv");
    REQUIRE(r.exit_code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == std::vector<std::string>{"12", "19"});
}

TEST_CASE("gf difference emits the alternating obstruction pattern") {
    auto r = run_cli("gf --a 1 --b 4 --c 2 --d 2 --count 8 --format csv");
    REQUIRE(r.exit_code == 0);
    auto rows = csv_rows(r.out);
    const char* expect[] = {"0", "1", "0", "1", "0", "2", "0", "2"};
    REQUIRE(rows.size() == 9);
    for (int i = 0; i < 8; ++i) CHECK(rows[i + 1][1] == expect[i]);
}

TEST_CASE("capacity-fn single point and sweep") {
    auto r = run_cli("capacity-fn --a 8 --tol 1/1000 --format csv");
    REQUIRE(r.exit_code == 0);
    auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "lower", "upper", "exact"});
    CHECK(rows[1] == std::vector<std::string>{"8", "609/215", "17/6", "17/6"});

    auto sweep = run_cli("capacity-fn --sweep 2:3:1/2 --tol 1/100 --format csv");
    REQUIRE(sweep.exit_code == 0);
    auto srows = csv_rows(sweep.out);
    REQUIRE(srows.size() == 4);
    CHECK(srows[1][0] == "2");
    CHECK(srows[2][0] == "5/2");
    CHECK(srows[3][0] == "3");
    for (int i = 1; i <= 3; ++i) CHECK(srows[i][3] == "2"); // c = 2 across [2,3]
}

TEST_CASE("verify-lemma completes with exit 0 even when violated") {
    auto ok = run_cli("verify-lemma --a 3 --b 1 --c 2 --d 2 --grid 8 --format csv");
    CHECK(ok.exit_code == 0);
    auto bad = run_cli("verify-lemma --a 5 --b 1 --c 2 --d 2 --grid 8 --format csv");
    CHECK(bad.exit_code == 0);
    bool saw_violation = false;
    for (const auto& row : csv_rows(bad.out))
        if (row.size() == 6 && row[5] == "no") saw_violation = true;
    CHECK(saw_violation);
}

TEST_CASE("fill-check embeds and the convolution table") {
    CHECK(run_cli("fill-check --n 5").exit_code == 0);
    auto conv = run_cli("fill-check --n 3 --conv 9 --format csv");
    REQUIRE(conv.exit_code == 0);
    auto rows = csv_rows(conv.out);
    REQUIRE(rows.size() == 11);
    CHECK(rows[10] == std::vector<std::string>{"9", "11", "10", "yes"});
}

TEST_CASE("identical invocations are byte-identical") {
    for (const char* args :
         {"capacities --a 2 --b 3 --count 12", "decide --src 2,3 --dst 1,6 --format csv",
          "capacity-fn --a 5 --tol 1/1000", "verify-lemma --a 5 --b 1 --c 2 --d 2 --grid 6"}) {
        auto r1 = run_cli(args);
        auto r2 = run_cli(args);
        INFO(args);
        CHECK(r1.out == r2.out);
        CHECK(r1.exit_code == r2.exit_code);
    }
}

TEST_CASE("JSON documents round-trip byte-identically") {
    for (const char* args :
         {"capacities --a 1/2 --b 3/4 --count 6", "decide --src 1,7 --dst 79/30,79/30",
          "capacity-fn --a 7 --tol 1/1000", "fill-check --n 4"}) {
        auto r = run_cli(args);
        auto j = nlohmann::ordered_json::parse(r.out);
        INFO(args);
        CHECK(j.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("CSV and JSON carry identical data") {
    for (const char* args :
         {"capacities --a 2 --b 3 --count 12", "decide --src 2,3 --dst 1,6",
          "counts --a 2 --b 3 --n 12", "gf --a 1 --b 4 --c 2 --d 2 --count 8",
          "capacity-fn --a 8 --tol 1/1000", "verify-lemma --a 5 --b 1 --c 2 --d 2 --grid 6",
          "fill-check --n 5", "fill-check --n 3 --conv 9"}) {
        auto csv = run_cli(std::string(args) + " --format csv");
        auto json = run_cli(std::string(args) + " --format json");
        CHECK(csv.exit_code == json.exit_code);
        auto rows = csv_rows(csv.out);
        auto j = nlohmann::ordered_json::parse(json.out);
        INFO(args);
        REQUIRE(rows.size() == j["rows"].size() + 1);
        const auto& header = rows[0];
        for (std::size_t i = 0; i < j["rows"].size(); ++i) {
            const auto& obj = j["rows"][i];
            REQUIRE(obj.size() == header.size());
            std::size_t col = 0;
            for (const auto& [key, value] : obj.items()) {
                REQUIRE(key == header[col]);
                REQUIRE(value.get<std::string>() == rows[i + 1][col]);
                ++col;
            }
        }
    }
}

TEST_CASE("--out writes the same bytes the pipe carries") {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/echcap_cli_out_test.json";
    auto direct = run_cli("counts --a 3 --b 5 --n 40");
    auto filed = run_cli("counts --a 3 --b 5 --n 40 --out '" + path + "'");
    REQUIRE(filed.exit_code == 0);
    CHECK(filed.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == direct.out);
    std::remove(path.c_str());
}
