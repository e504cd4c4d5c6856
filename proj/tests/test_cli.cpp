#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_path = "cli_test_out.txt";
    std::string cmd = std::string(CLI_BIN) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(out_path.c_str());
    return {code, ss.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("identities subcommand") {
    RunResult r = run_cli("identities");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "case continuant pass"));
    CHECK(contains(r.out, "failed 0"));

    RunResult single = run_cli("identities --case binomial-3");
    CHECK(single.exit_code == 0);
    CHECK(contains(single.out, "cases 1"));

    RunResult missing = run_cli("identities --case nope");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("identities from a case file") {
    {
        std::ofstream out("cli_cases.txt");
        out << "case bad\nlhs x\nrhs y\nend\n";
    }
    RunResult r = run_cli("identities --file cli_cases.txt");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "case bad FAIL"));
    std::remove("cli_cases.txt");
}

TEST_CASE("weyl subcommand") {
    RunResult r = run_cli("weyl --m 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "normal_form 3*x^2"));
}

TEST_CASE("build and check and morphisms") {
    RunResult b = run_cli("build --spec 'zmod(4)' --out cli_zmod4.struct");
    CHECK(b.exit_code == 0);
    RunResult c = run_cli("check cli_zmod4.struct");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "is_ring yes"));
    CHECK(contains(c.out, "jacobson_radical 0 2"));

    RunResult m = run_cli("morphisms cli_zmod4.struct cli_zmod4.struct");
    CHECK(m.exit_code == 0);
    CHECK(contains(m.out, "morphisms 1"));
    CHECK(contains(m.out, "morphism 0 0 1 2 3"));
    CHECK(contains(m.out, "total_violations 0"));
    std::remove("cli_zmod4.struct");
}

TEST_CASE("certify subcommand") {
    run_cli("build --spec 'zmod(6)' --out cli_zmod6.struct");
    RunResult r = run_cli("certify cli_zmod6.struct");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "certified_addable 6"));
    CHECK(contains(r.out, "replay pass"));
    RunResult p = run_cli("certify cli_zmod6.struct --pairs");
    CHECK(p.exit_code == 0);
    CHECK(contains(p.out, "certified_pairs 36"));
    std::remove("cli_zmod6.struct");
}

TEST_CASE("formula subcommand") {
    run_cli("build --spec 'zmod(6)' --out cli_z6.struct");
    RunResult r = run_cli("formula --name S_perp --struct cli_z6.struct --tuple 2,3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "condition_ii pass"));
    CHECK(contains(r.out, "condition_i_on_battery pass"));
    RunResult bad = run_cli("formula --name S_perp --struct cli_z6.struct --tuple 1,1");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "inapplicable"));
    std::remove("cli_z6.struct");
}

TEST_CASE("fixture subcommand") {
    RunResult r = run_cli("fixture table1 --dir " + std::string(FIXTURE_DIR));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "result pass"));
    CHECK(contains(r.out, "violation at (a,b)"));

    RunResult t2 = run_cli("fixture table2 --dir " + std::string(FIXTURE_DIR));
    CHECK(t2.exit_code == 0);
    CHECK(contains(t2.out, "violation at (2,4)"));
}

TEST_CASE("matrix subcommand") {
    RunResult r = run_cli("matrix --nmax 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "case cayley-hamilton-n3 pass"));
    CHECK(contains(r.out, "failed 0"));
}

TEST_CASE("search subcommand small order") {
    RunResult r = run_cli("search --class semiring --order 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "found 0"));
    CHECK(contains(r.out, "exhaustive yes"));
}

TEST_CASE("brachynomial subcommand") {
    RunResult yes = run_cli("brachynomial --poly \"x + x*y\"");
    CHECK(yes.exit_code == 0);
    CHECK(contains(yes.out, "verdict brachynomial"));
    CHECK(contains(yes.out, "witness x y'"));

    RunResult no = run_cli("brachynomial --poly \"x + y\"");
    CHECK(no.exit_code == 0);
    CHECK(contains(no.out, "verdict not a brachynomial"));

    RunResult malformed = run_cli("brachynomial --poly \"x +\"");
    CHECK(malformed.exit_code == 2);
}

TEST_CASE("detaudit subcommand") {
    {
        std::ofstream out("cli_audit.txt");
        out << "ring zmod(2)\nn 3\n";
        out << "gen 1 0 0 0 1 0 0 0 1\n";
        out << "gen 0 1 0 0 0 0 0 0 0\n";
    }
    RunResult r = run_cli("detaudit --spec cli_audit.txt");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "premise_det_succ holds"));
    CHECK(contains(r.out, "conclusion_det_additive holds"));
    std::remove("cli_audit.txt");
}

TEST_CASE("report file matches stdout apart from stat lines") {
    RunResult r = run_cli("--report cli_report.txt identities --case continuant");
    CHECK(r.exit_code == 0);
    std::ifstream in("cli_report.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == r.out);
    std::remove("cli_report.txt");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("check no_such_file.struct").exit_code == 2);
    CHECK(run_cli("build --spec \"frobnicate(1)\"").exit_code == 2);
    CHECK(run_cli("search --class semiring --order 9").exit_code == 2);
}

TEST_CASE("resource limits exit with code 3") {
    CHECK(run_cli("build --spec \"zmod(5000)\"").exit_code == 3);
}
