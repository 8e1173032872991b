#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>

#include "eqdom/cli.hpp"
#include "eqdom/fixtures.hpp"
#include "eqdom/io.hpp"

using namespace eqdom;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("eqdom_cli_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

cli::Options quiet_options() {
  cli::Options opt;
  opt.threads = 1;
  return opt;
}

}  // namespace

TEST_CASE("cmd_fixture then cmd_validate then cmd_decide round trip") {
  cli::Options opt = quiet_options();
  TempFile f("c6.json");
  cli::Report fx = cli::cmd_fixture("cyclic", 6, f.path, opt);
  CHECK(fx.elements == 6);

  cli::Report v = cli::cmd_validate(f.path, opt);
  CHECK(v.payload["status"] == "ok");
  CHECK(v.payload["elements"] == 6);
  CHECK(v.input_hash != 0);

  cli::Report d1 = cli::cmd_decide(f.path, /*with_oracle=*/false, opt);
  CHECK(d1.payload["verdict"] == "NotED");
  CHECK(d1.payload["certificate"]["kind"] == "ZeroDivisor");
  CHECK(d1.payload["certificate_verified"] == true);

  // Idempotent pipeline: a second run reports the same result.
  cli::Report d2 = cli::cmd_decide(f.path, false, opt);
  CHECK(d1.payload == d2.payload);
  CHECK(d1.input_hash == d2.input_hash);
}

TEST_CASE("cmd_decide with oracle on a small input") {
  cli::Options opt = quiet_options();
  TempFile f("n3.json");
  cli::cmd_fixture("null", 3, f.path, opt);
  cli::Report r = cli::cmd_decide(f.path, /*with_oracle=*/true, opt);
  CHECK(r.payload["verdict"] == "NotED");
  CHECK(r.payload["certificate"]["kind"] == "HasZero");
  CHECK(r.payload["oracle"] == "Agree");
}

TEST_CASE("cmd_analyze reports the full picture") {
  cli::Options opt = quiet_options();
  TempFile f("rs240.json");
  cli::cmd_fixture("rs240", 0, f.path, opt);
  cli::Report r = cli::cmd_analyze(f.path, opt);
  CHECK(r.payload["kernel_size"] == 240);
  CHECK(r.payload["lambda"] == 2);
  CHECK(r.payload["i"] == 2);
  CHECK(r.payload["group_order"] == 60);
  CHECK(r.payload["matrix"] == "Nonsingular");
  CHECK(r.payload["group"] == "ED");
  CHECK(r.payload["sim_trivial"] == true);
  CHECK(r.payload["bounds"]["refined"]["value"] == 960);
}

TEST_CASE("cmd_solve") {
  cli::Options opt = quiet_options();
  TempFile sg("lz2.json");
  cli::cmd_fixture("lz2", 0, sg.path, opt);
  TempFile sys("lz2.system");
  io::write_file(sys.path, "vars 1\nx1*a = a\n");
  cli::Report r = cli::cmd_solve(sg.path, sys.path, opt);
  CHECK(r.payload["solutions"] == 1);
  CHECK(r.payload["points"][0][0] == "a");
}

TEST_CASE("cmd_witness writes a verified system file") {
  cli::Options opt = quiet_options();
  TempFile sg("a5.json");
  cli::cmd_fixture("a5", 0, sg.path, opt);
  TempFile pts("target.points");
  io::write_file(pts.path, "vars 1\np01234\np12340\n");
  TempFile out("defining.system");
  cli::Report r = cli::cmd_witness(sg.path, pts.path, 0, out.path, opt);
  CHECK(r.payload["equations"] == 58);
  CHECK(r.payload["verified"] == true);

  // The emitted file re-solves to the same two points.
  io::LoadedSemigroup a5 = io::load_semigroup_file(sg.path);
  System sys = io::parse_system_text(io::read_file(out.path), a5.semigroup);
  CHECK(sys.equations.size() == 58);
  PointSet sol = solve_system(a5.semigroup, sys);
  CHECK(sol.count() == 2);
}

TEST_CASE("cmd_witness msem over the trivial semigroup is the empty system") {
  cli::Options opt = quiet_options();
  TempFile sg("triv.json");
  cli::cmd_fixture("triv", 0, sg.path, opt);
  cli::Report r = cli::cmd_witness(sg.path, "msem", 4, "", opt);
  CHECK(r.payload["equations"] == 0);
  CHECK(r.payload["verified"] == true);
}

TEST_CASE("cmd_witness mgr-like over A5") {
  cli::Options opt = quiet_options();
  TempFile sg("a5w.json");
  cli::cmd_fixture("a5", 0, sg.path, opt);
  cli::Report r = cli::cmd_witness(sg.path, "mgr-like", 2, "", opt);
  CHECK(r.payload["target_points"] == 119);  // {x1 = 1 or x2 = 1} in A5^2
  CHECK(r.payload["equations"] == 3600 - 119);
  CHECK(r.payload["verified"] == true);
}

TEST_CASE("reports embed the input hash and element names") {
  cli::Options opt = quiet_options();
  TempFile f("names.json");
  cli::cmd_fixture("lz2", 0, f.path, opt);
  cli::Report r = cli::cmd_decide(f.path, false, opt);
  CHECK(r.input_hash != 0);
  CHECK(r.element_names == std::vector<std::string>{"a", "b"});
  CHECK(r.to_json()["element_names"].size() == 2);
}

TEST_CASE("run() exit codes") {
  TempFile f("exit.json");
  cli::cmd_fixture("n3", 0, f.path, quiet_options());

  CHECK(cli::run({"decide", f.path}) == 0);
  CHECK(cli::run({"validate", "missing_file.json"}) == 2);

  TempFile broken("broken.json");
  io::write_file(broken.path, R"({"elements":["a","b"],"table":[["b","a"],["a","a"]]})");
  CHECK(cli::run({"validate", broken.path}) == 2);

  TempFile a5p("a5plus.json");
  cli::cmd_fixture("a5plus", 0, a5p.path, quiet_options());
  // 61^4 points fit the raised sweep budget, so the run reaches synthesis and
  // fails on the nontrivial ~_K precondition.
  CHECK(cli::run({"witness", a5p.path, "--set", "msem", "--vars", "4", "--budget-sweep",
                  "20000000"}) == 4);
  CHECK(cli::run({"witness", a5p.path, "--set", "msem", "--vars", "4"}) == 3);

  TempFile rs("rs240cap.json");
  cli::cmd_fixture("rs240", 0, rs.path, quiet_options());
  CHECK(cli::run({"decide", "--budget-sweep", "10", "--oracle", rs.path}) == 3);

  CHECK(cli::run({"fixture", "no_such_fixture"}) == 2);
}

#ifdef EQDOM_CLI_BINARY
TEST_CASE("the installed binary honors the exit-code contract") {
  std::string bin = EQDOM_CLI_BINARY;
  TempFile f("bin_c6.json");
  std::string quiet = " > /dev/null 2>&1";
  CHECK(std::system((bin + " fixture cyclic 6 --out " + f.path + quiet).c_str()) == 0);
  CHECK(std::system((bin + " validate " + f.path + quiet).c_str()) == 0);
  CHECK(std::system((bin + " decide --json " + f.path + quiet).c_str()) == 0);
  int rc = std::system((bin + " validate missing.json" + quiet).c_str());
  CHECK(WEXITSTATUS(rc) == 2);
}
#endif
