#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string scratch_dir() {
  static std::string dir = [] {
    std::string d = "/tmp/mwb_cli_" + std::to_string(::getpid());
    if (std::system(("mkdir -p " + d).c_str()) != 0) d = "/tmp";
    return d;
  }();
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string out = scratch_dir() + "/out.txt";
  const std::string err = scratch_dir() + "/err.txt";
  const std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(MWB_BIN) + " " + args +
      " > " + out + " 2> " + err;
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string write_fixture(const std::string& name, const std::string& body) {
  const std::string path = scratch_dir() + "/" + name;
  std::ofstream(path) << body;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("hilbert command prints the exact symbol") {
  const auto r = run_cli("hilbert 1:3 0:5 --q 7 --m 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "(3*pi, 5)_3 = zeta_3^1"));
  const auto j = run_cli("hilbert 1:3 0:5 --q 7 --m 3 --format json");
  CHECK(j.code == 0);
  CHECK(contains(j.out, "\"exponent\": 1"));
  CHECK(contains(j.out, "\"symbol\": \"zeta_3^1\""));
}

TEST_CASE("cocycle command evaluates canonical products") {
  // sigma_GL(diag(pi,1), diag(1,3)) = (pi,3)_3 = zeta_3^2
  const auto r = run_cli("\"t=pi,1\" \"t=1,3\" --q 7 --m 3");
  CHECK(r.code == 2);  // subcommand is required
  const auto c = run_cli("cocycle \"t=pi,1\" \"t=1,3\" --q 7 --m 3");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "sigma(x,y) = zeta_3^2"));
  const auto sp = run_cli(
      "cocycle \"t=pi,3,9,12*pi^-1;w=3,1,2,0\" \"t=2,5,8,7\" --q 13 --m 2 "
      "--kind sp --format json");
  CHECK(sp.code == 0);
  CHECK(contains(sp.out, "\"cocycle_exponent\""));
  // symplectic membership violations surface as input errors
  const auto badsp =
      run_cli("cocycle \"t=2,3,5,4\" \"t=1,1,1,1\" --q 13 --m 2 --kind sp");
  CHECK(badsp.code == 2);
  CHECK(contains(badsp.err, "input error:"));
}

TEST_CASE("verify all with a fixed seed passes deterministically") {
  const auto r1 = run_cli("verify all --seed 42 --format json");
  CHECK(r1.code == 0);
  CHECK(contains(r1.out, "\"all_pass\": true"));
  const auto r2 = run_cli("verify all --seed 42 --format json");
  CHECK(r1.out == r2.out);  // byte-identical reports
  const auto renv = run_cli("verify all --format json", "MWB_SEED=42");
  CHECK(renv.code == 0);
  CHECK(renv.out == r1.out);
  const auto table = run_cli("verify cocycle --seed 7 --format table");
  CHECK(table.code == 0);
  CHECK(contains(table.out, "all checks passed"));
}

TEST_CASE("sabotage self-test raises a visible failure") {
  const auto r = run_cli("verify arch --seed 42 --sabotage --format json");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "\"all_pass\": false"));
  CHECK(contains(r.out, "injected-defect"));
  CHECK(contains(r.out, "deliberate corruption requested via sabotage flag"));
}

TEST_CASE("usage and input errors exit with code two") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("hilbert 1:1 0:2 --q 13").code == 2);  // missing --m
  const auto bad = run_cli("verify nonsense --seed 1");
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "unknown suite selector"));
  const auto badelem = run_cli("hilbert 1:0 0:2 --q 13 --m 2");
  CHECK(badelem.code == 2);
  CHECK(contains(badelem.err, "input error:"));
  const auto badq = run_cli("hilbert 1:1 0:2 --q 12 --m 2");
  CHECK(badq.code == 2);
}

TEST_CASE("lfactor runs on descriptor files with a self-check") {
  const std::string pi = write_fixture(
      "pi_sp.json",
      "{\"kind\":\"sp\",\"field\":\"padic\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[\"zeta(1/3)*q^(1/2)\",\"q^(-1)\"]}");
  const std::string tau = write_fixture(
      "tau_gl.json",
      "{\"kind\":\"gl\",\"field\":\"padic\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[\"zeta(2/3)\",\"q^(1/3)\"]}");
  const auto g = run_cli("lfactor " + pi + " " + tau + " --op gamma");
  CHECK(g.code == 0);
  CHECK(contains(g.out, "self-check gamma(s) * gamma(1-s, duals) = 1 : pass"));
  const auto s = run_cli("lfactor " + tau + " --op std --format json");
  CHECK(s.code == 0);
  CHECK(contains(s.out, "(1 - zeta(2/3) q^(0) X^(1))^-1"));
  const auto p = run_cli("lfactor " + pi + " --op pair");
  CHECK(p.code == 2);  // pair needs two descriptors
  const auto a = run_cli("lfactor " + pi + " --op a");
  CHECK(a.code == 2);  // normalizers take gl-kind data
  CHECK(contains(a.err, "input error:"));
  const std::string num = write_fixture(
      "tau_num.json",
      "{\"kind\":\"gl\",\"field\":\"padic\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[[0.5,0.25],[2.0,0.0]]}");
  const auto mixed = run_cli("lfactor " + pi + " " + num + " --op pair");
  CHECK(mixed.code == 2);
  CHECK(contains(mixed.err, "eigenvalue representation"));
  const std::string cfix = write_fixture(
      "pi_c.json",
      "{\"kind\":\"sp\",\"field\":\"complex\",\"m\":3,"
      "\"characters\":[[2,0.3,0.1],[-1,-0.2,0.4]]}");
  const auto wrongfield = run_cli("lfactor " + cfix + " --op std");
  CHECK(wrongfield.code == 2);
}

TEST_CASE("gamma-c reconstructs the archimedean factor") {
  const std::string pi = write_fixture(
      "pi_c2.json",
      "{\"kind\":\"sp\",\"field\":\"complex\",\"m\":3,"
      "\"characters\":[[2,0.3,0.1],[-1,-0.2,0.4]]}");
  const std::string tau = write_fixture(
      "tau_c2.json",
      "{\"kind\":\"gl\",\"field\":\"complex\",\"m\":3,"
      "\"characters\":[[0,0.45,-0.2],[1,0.1,0.3]]}");
  const auto r = run_cli("gamma-c " + pi + " " + tau + " --s 0.58,0.73");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "gamma"));
  const auto j =
      run_cli("gamma-c " + pi + " " + tau + " --s 0.58,0.73 --format json");
  CHECK(j.code == 0);
  CHECK(contains(j.out, "\"reconstruction_residual\""));
  const std::string triv = write_fixture(
      "triv_c.json",
      "{\"kind\":\"gl\",\"field\":\"complex\",\"m\":1,"
      "\"characters\":[[0,0,0]]}");
  const auto pole = run_cli("gamma-c " + triv + " " + triv + " --s 0.00000001");
  CHECK(pole.code == 2);
  CHECK(contains(pole.err, "domain error:"));
}
