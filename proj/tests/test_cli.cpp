#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string out_path = "/tmp/symsq_cli_test_out.txt";
    std::string cmd = std::string(SYMSQ_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("eigen subcommand") {
    auto ok = run("--cache-dir /tmp/symsq_cli_cache eigen --weight 12 --terms 50");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("dim 1") != std::string::npos);
    CHECK(ok.output.find("lambda(2)=-0.530330") != std::string::npos);

    auto empty = run("--cache-dir /tmp/symsq_cli_cache eigen --weight 14");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("dim 0") != std::string::npos);

    auto odd = run("--cache-dir /tmp/symsq_cli_cache eigen --weight 13");
    CHECK(odd.exit_code == 2);
}

TEST_CASE("scan subcommand") {
    auto empty = run("--cache-dir /tmp/symsq_cli_cache scan --weights 14:14:1 --k 0.5 "
                     "--out /tmp/symsq_scan_empty.csv");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.find("notice") != std::string::npos);
    std::string csv = slurp("/tmp/symsq_scan_empty.csv");
    CHECK(csv.find("kappa,dim,k,") == 0);
    CHECK(csv.find('\n') == csv.size() - 1); // header only

    auto bad = run("scan --weights 12:16:2 --k -1 --out /tmp/symsq_scan_bad.csv");
    CHECK(bad.exit_code == 2);

    auto good = run("--cache-dir /tmp/symsq_cli_cache scan --weights 12:20:4 --k 0.25 "
                    "--out /tmp/symsq_scan_a.csv --plot /tmp/symsq_scan_a.svg");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("fitted slope") != std::string::npos);
    CHECK(slurp("/tmp/symsq_scan_a.svg").find("<svg") == 0);

    // byte-identical output regardless of thread count
    auto t1 = run("--threads 1 --cache-dir /tmp/symsq_cli_cache scan --weights 12:24:4 "
                  "--k 0.25 --out /tmp/symsq_scan_t1.csv");
    auto t4 = run("--threads 4 --cache-dir /tmp/symsq_cli_cache scan --weights 12:24:4 "
                  "--k 0.25 --out /tmp/symsq_scan_t4.csv");
    CHECK(t1.exit_code == 0);
    CHECK(t4.exit_code == 0);
    CHECK(slurp("/tmp/symsq_scan_t1.csv") == slurp("/tmp/symsq_scan_t4.csv"));
}

TEST_CASE("delta, lvalue, moment subcommands carry error bounds") {
    auto d = run("--cache-dir /tmp/symsq_cli_cache delta --weight 200 --m 1 --n 1 --cmax 1000");
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("+-") != std::string::npos);

    auto l = run("--cache-dir /tmp/symsq_cli_cache lvalue --weight 12 --s 2");
    CHECK(l.exit_code == 0);
    CHECK(l.output.find("+-") != std::string::npos);
    CHECK(l.output.find("8.058752") != std::string::npos); // L(2, sym2 Delta)

    auto m = run("--cache-dir /tmp/symsq_cli_cache moment --weight 12 --k 0");
    CHECK(m.exit_code == 0);
    CHECK(m.output.find("+-") != std::string::npos);

    auto bad = run("--cache-dir /tmp/symsq_cli_cache moment --weight 12 --k -2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify subcommand with restricted weights") {
    auto v = run("--cache-dir /tmp/symsq_cli_cache verify --suite holder --weights 12:16 "
                 "--json /tmp/symsq_verify.json");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("PASS") != std::string::npos);
    std::string j = slurp("/tmp/symsq_verify.json");
    CHECK(j.find("\"pass\": true") != std::string::npos);
    CHECK(j.find("margin") != std::string::npos);

    auto unknown = run("verify --suite nonsense");
    CHECK(unknown.exit_code == 2);
}
