// Drives the installed binary end to end through temp files.

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "atomlat/formats.hpp"
#include "atomlat/oracle.hpp"
#include "atomlat/crossing.hpp"

#ifndef ATOMLAT_CLI_PATH
#define ATOMLAT_CLI_PATH "atomlat"
#endif
#ifndef ATOMLAT_FIXTURE_DIR
#define ATOMLAT_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/atomlat_cli_out.txt";
    const std::string command =
        std::string(ATOMLAT_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    std::remove(out_path.c_str());
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(ATOMLAT_FIXTURE_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                             "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_CASE("atomize prints the atomization and answers queries") {
    const RunResult r = run_cli("atomize " + fixture("join_below.slt"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "atom {c}\n"
                   "atom {a,c}\n"
                   "atom {b,c}\n"
                   "POS a <= c\n"
                   "NEG c <= a\n"
                   "POS a+b <= c\n"
                   "NEG c <= a+b\n");
}

TEST_CASE("atomize --reduce output still checks against the oracle") {
    const RunResult r =
        run_cli("atomize --reduce --format structured " + fixture("join_below.slt"));
    CHECK(r.exit_code == 0);

    const std::string doc = r.out.substr(0, r.out.find('\n') + 1);
    const atomlat::Model reduced = atomlat::parse_model(doc);
    const atomlat::Problem problem =
        atomlat::parse_problem(slurp(fixture("join_below.slt")));
    const atomlat::OrderOracle oracle =
        atomlat::congruence_closure(reduced.table(), problem.assertions);
    CHECK(atomlat::oracle_equiv(reduced, oracle).equivalent);
}

TEST_CASE("check accepts every fixture") {
    for (const char* name : {"join_below.slt", "chain5.slt", "merge_ab.slt"}) {
        const RunResult r = run_cli("check " + fixture(name));
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("OK") == 0);
    }
}

TEST_CASE("query answers match the oracle for every fixture") {
    for (const char* name : {"join_below.slt", "chain5.slt", "merge_ab.slt"}) {
        const atomlat::Problem problem = atomlat::parse_problem(slurp(fixture(name)));
        const atomlat::OrderOracle oracle =
            atomlat::congruence_closure(problem.table, problem.assertions);

        const RunResult r = run_cli("atomize " + fixture(name));
        REQUIRE(r.exit_code == 0);
        std::istringstream lines(r.out);
        std::string line;
        std::size_t q = 0;
        while (std::getline(lines, line)) {
            if (line.rfind("POS", 0) != 0 && line.rfind("NEG", 0) != 0)
                continue;
            REQUIRE(q < problem.queries.size());
            const atomlat::Duple& duple = problem.queries[q++];
            const bool expected = oracle.le(duple.left, duple.right);
            CHECK(line.substr(0, 3) == (expected ? "POS" : "NEG"));
        }
        CHECK(q == problem.queries.size());
    }
}

TEST_CASE("cross applies assertions to a deserialized base model") {
    const std::string base_path = write_temp(
        "cli_base.json",
        "{\"atoms\":[[\"a\"],[\"b\"],[\"c\"]],\"constants\":[\"a\",\"b\",\"c\"]}\n");
    const std::string problem_path =
        write_temp("cli_cross.slt", "constants: a b c\nassert: a <= b\nquery: a <= b\n");

    const RunResult r = run_cli("cross " + problem_path + " --base " + base_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "atom {b}\natom {c}\natom {a,b}\nPOS a <= b\n");

    const std::string mismatched =
        write_temp("cli_mismatch.slt", "constants: a b\nassert: a <= b\n");
    CHECK(run_cli("cross " + mismatched + " --base " + base_path).exit_code == 2);
}

TEST_CASE("input errors exit with code 2 and guard violations with 3") {
    CHECK(run_cli("atomize " + fixture("bad_constant.slt")).exit_code == 2);
    CHECK(run_cli("atomize /nonexistent.slt").exit_code == 2);
    CHECK(run_cli("omega --guard 2 " + fixture("join_below.slt")).exit_code == 3);
    CHECK(run_cli("check --max-c 2 " + fixture("join_below.slt")).exit_code == 3);
}

TEST_CASE("omega flags redundancy and decompose prints the tuple table") {
    const RunResult omega = run_cli("omega " + fixture("merge_ab.slt"));
    CHECK(omega.exit_code == 0);
    CHECK(omega.out == "atom {c} NR\n"
                       "atom {a,b} NR\n"
                       "atom {a,b,c} R\n");

    const RunResult dec = run_cli("decompose " + fixture("merge_ab.slt"));
    CHECK(dec.exit_code == 0);
    CHECK(dec.out.find("factor 1: atom {c}") != std::string::npos);
    CHECK(dec.out.find("factor 2: atom {a,b}") != std::string::npos);
    CHECK(dec.out.find("element a -> 01") != std::string::npos);
    CHECK(dec.out.find("element c -> 10") != std::string::npos);
}

TEST_CASE("hasse writes DOT to stdout or a file") {
    const RunResult direct = run_cli("hasse " + fixture("merge_ab.slt"));
    CHECK(direct.exit_code == 0);
    CHECK(direct.out.find("digraph model {") == 0);
    CHECK(direct.out.find("\"a\" -> \"a+c\";") != std::string::npos);

    const std::string dot_path =
        std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/cli_hasse.dot";
    const RunResult to_file =
        run_cli("hasse " + fixture("merge_ab.slt") + " -o " + dot_path);
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(dot_path) == direct.out);
    std::remove(dot_path.c_str());
}
