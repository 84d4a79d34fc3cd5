// End-to-end checks of the command-line tool: every subcommand is a thin
// adapter over the corresponding library operation, with stable report lines
// and the documented exit codes (0 success, 1 logical failure, 2 usage).

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

const std::string cli = SUPERLL_CLI_PATH;
const std::string samples = SUPERLL_SAMPLES_DIR;

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                      : "/tmp") +
                    "/superll_cli_out.txt";
  std::string cmd = cli + " " + args + " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("check validates the counterexample derivation") {
  RunResult r = run("check --instance " + samples + "/blocked-cut.inst " +
                    samples + "/blocked-cut.sp");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "proof: valid"));
  CHECK(has_line(r.out, "cut-free: no"));
}

TEST_CASE("verify-axioms reports the ce2 counterexample and exits 1") {
  RunResult r = run("verify-axioms --instance " + samples +
                    "/blocked-cut.inst --table cut");
  CHECK(r.status == 1);
  CHECK(has_line(r.out, "counterexample: ce2 k=1 e1=e' e=e n=2"));
  CHECK(has_line(r.out, "result: fail"));
}

TEST_CASE("search on the counterexample goal is not provable within budget") {
  RunResult r = run("search --instance " + samples +
                    "/blocked-cut.inst --goal \"|- !e' X^, ?e (X * X), ?e "
                    "X^\" --depth 12 --nodes 100000");
  CHECK(r.status == 1);
  CHECK(has_line(r.out, "status: not-provable-within-budget"));
}

TEST_CASE("cut-elim writes a cut-free proof that re-validates") {
  write_file("/tmp/superll_cli_cut.sp",
             "(cut \"!b X\" 0 0 (prom b 0 (ax \"X\")) (de b 1 (ax \"X\")))");
  RunResult r = run(
      "cut-elim --instance preset:ll-full -o /tmp/superll_cli_cutfree.sp "
      "/tmp/superll_cli_cut.sp");
  REQUIRE(r.status == 0);
  CHECK(has_line(r.out, "step.cuts-eliminated: 1"));
  RunResult c = run(
      "check --instance preset:ll-full /tmp/superll_cli_cutfree.sp");
  CHECK(c.status == 0);
  CHECK(has_line(c.out, "cut-free: yes"));
}

TEST_CASE("girardize via the CLI leaves no promotion or digging nodes") {
  RunResult r = run("girardize --instance preset:ll-full -o "
                    "/tmp/superll_cli_gir.sp " +
                    samples + "/girard-demo.sp");
  REQUIRE(r.status == 0);
  std::ifstream in("/tmp/superll_cli_gir.sp");
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("prom-g") != std::string::npos);
  CHECK(ss.str().find("(dg ") == std::string::npos);
  CHECK(ss.str().find("(prom b") == std::string::npos);
}

TEST_CASE("translate runs in both directions") {
  RunResult enc = run("translate --preset sll --direction to-super -o "
                      "/tmp/superll_cli_enc.sp " +
                      samples + "/mpx2.nsp");
  REQUIRE(enc.status == 0);
  RunResult chk = run("check --instance preset:sll /tmp/superll_cli_enc.sp");
  CHECK(chk.status == 0);
  RunResult dec = run("translate --preset sll --direction from-super -o "
                      "/tmp/superll_cli_dec.nsp /tmp/superll_cli_enc.sp");
  CHECK(dec.status == 0);
  RunResult nchk =
      run("check --instance preset:sll --native sll /tmp/superll_cli_dec.nsp");
  CHECK(nchk.status == 0);
}

TEST_CASE("export-latex emits an inference tree") {
  RunResult r = run("export-latex " + samples + "/blocked-cut.sp");
  CHECK(r.status == 0);
  CHECK(r.out.find("\\begin{prooftree}") != std::string::npos);
}

TEST_CASE("exit codes distinguish logical failures from usage errors") {
  // invalid proof: a promotion width the instance forbids
  write_file("/tmp/superll_cli_bad.sp",
             "(prom b 0 (tensor 0 0 (ax \"X\") (ax \"X\")))");
  RunResult bad = run("check --instance preset:lll /tmp/superll_cli_bad.sp");
  CHECK(bad.status == 1);
  CHECK(has_line(bad.out, "proof: invalid"));
  CHECK(bad.out.find("p(2,b)") != std::string::npos);

  RunResult usage = run("check /tmp/superll_cli_bad.sp");
  CHECK(usage.status == 2);

  RunResult syntax = run("check --instance preset:lll " + samples +
                         "/blocked-cut.inst");
  CHECK(syntax.status == 2);  // not a proof file

  RunResult refuse = run("cut-elim --instance " + samples +
                         "/blocked-cut.inst " + samples + "/blocked-cut.sp");
  CHECK(refuse.status == 1);  // axiom table fails, transformation refuses
}

TEST_CASE("strict mode and measures are plumbed through") {
  write_file("/tmp/superll_cli_ex.sp", "(ex (1 0) (ax \"X\"))");
  RunResult raw = run("check --instance preset:ll-full --measure raw "
                      "/tmp/superll_cli_ex.sp");
  CHECK(has_line(raw.out, "size: 2"));
  RunResult xf = run("check --instance preset:ll-full "
                     "/tmp/superll_cli_ex.sp");
  CHECK(has_line(xf.out, "size: 1"));
}
