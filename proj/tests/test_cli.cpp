#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TWISTCLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("model command emits the expected equations") {
  RunResult r = run_cli("model --p 2 --a 1 --b 1 --d 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "5*y^2 = -3*x^4 - 10*x^2 + 25\n");

  RunResult r3 = run_cli("model --p 3 --a 0 --d 2");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out == "2*z^3 + 6*z*w + 4*w^3 + (-1) = 0\n");
}

TEST_CASE("model command rejects unsupported torsion primes") {
  RunResult r = run_cli("model --p 5 --a 1 --d 2");
  CHECK(r.exit_code == 2);
  CHECK(r.out == "p=5 models not provided by the paper\n");
}

TEST_CASE("model JSON carries the coefficient fields") {
  RunResult r = run_cli("model --p 2 --a 1 --b 1 --d 5 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"A\":\"-3\"") != std::string::npos);
  CHECK(r.out.find("\"B\":\"-10\"") != std::string::npos);
  CHECK(r.out.find("\"C\":\"25\"") != std::string::npos);

  RunResult r3 = run_cli("model --p 3 --a 2 --d 3 --json");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("\"alpha\":\"1-4*z3\"") != std::string::npos);
  CHECK(r3.out.find("\"beta\":\"3+6*z3\"") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("model --p 2 --a 1 --d 5").exit_code == 2);
  CHECK(run_cli("model --p 2 --a x --b 1 --d 5").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("local --p 2 --a 1 --b 1 --d 5 --q 6").exit_code == 2);
  CHECK(run_cli("model --p 2 --a 1 --b 1 --d 5 --field Qzeta3").exit_code == 2);
  CHECK(run_cli("model --p 2 --a 1 --b 0 --d 5").exit_code == 2);
  CHECK(run_cli("model --p 2 --a 1 --b 1 --d 4").exit_code == 2);
}

TEST_CASE("local command maps verdicts to exit codes") {
  RunResult empty = run_cli("local --p 2 --a 1 --b 1 --d 5 --q 5");
  CHECK(empty.exit_code == 1);
  CHECK(empty.out.find("Empty") != std::string::npos);

  RunResult ok = run_cli("local --p 2 --a 1 --b 1 --d 1 --q 11");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("Solvable") != std::string::npos);

  RunResult strict = run_cli("local --p 3 --a 2 --d 5 --q 3 --strict");
  CHECK(strict.exit_code == 3);
  RunResult lax = run_cli("local --p 3 --a 2 --d 5 --q 3");
  CHECK(lax.exit_code == 0);
  CHECK(lax.out.find("Undetermined") != std::string::npos);
}

TEST_CASE("local command covers archimedean places") {
  RunResult real = run_cli("local --p 2 --a 1 --b -1 --d -1 --q real");
  CHECK(real.exit_code == 1);
  CHECK(real.out.find("Empty") != std::string::npos);

  RunResult cplx = run_cli("local --p 3 --a 2 --d 5 --q complex");
  CHECK(cplx.exit_code == 0);
}

TEST_CASE("scan enumerates the finite candidate set") {
  RunResult r = run_cli("scan --p 2 --a 1 --b 1");
  CHECK(r.exit_code == 0);
  for (const char* d : {"d = -6", "d = -3", "d = -2", "d = -1", "d = 1", "d = 2", "d = 3", "d = 6"}) {
    CHECK(r.out.find(d) != std::string::npos);
  }
  CHECK(r.out.find("Inconclusive") == std::string::npos);
}

TEST_CASE("scan reports the zero-bound failure") {
  RunResult r = run_cli("scan --p 2 --a 0 --b -1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("candidate set is not finite") != std::string::npos);
}

TEST_CASE("scan JSON is deterministic and pure") {
  RunResult a = run_cli("scan --p 2 --a 1 --b 1 --json");
  RunResult b = run_cli("scan --p 2 --a 1 --b 1 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.substr(0, 1) == "{");
  CHECK(a.out.find("\"candidates\"") != std::string::npos);
}

TEST_CASE("strict scan surfaces ramified uncertainty") {
  RunResult r = run_cli("scan --p 3 --a 2 --precision 4 --strict --places 2,3");
  CHECK(r.exit_code == 3);
}

TEST_CASE("scan respects the places restriction") {
  RunResult r = run_cli("scan --p 2 --a 1 --b 1 --places 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Rational(3)") != std::string::npos);
  CHECK(r.out.find("Rational(2)") == std::string::npos);
}

TEST_CASE("bad-primes lists the family bad reduction set") {
  RunResult r = run_cli("bad-primes --a 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2 3 7\n");

  RunResult j = run_cli("bad-primes --a 4 --json");
  CHECK(j.out == "{\"a\":4,\"bad_primes\":[2,3,13]}\n");
}
