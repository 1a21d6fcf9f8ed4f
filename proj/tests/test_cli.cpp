// Exit-code contract and session handling, exercised against the real
// binary (path injected by the build).
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SELFLINK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

} // namespace

TEST_CASE("exit 0: positive verdicts and plain computations") {
  CHECK(run_cli("verify --ring QQ[x,y,z] --ideal x^2,x*y,y^2 --f x^2 --g y^3").exit_code == 0);
  CHECK(run_cli("gb --ring QQ[x,y,z] --ideal x^2-y^2,y").exit_code == 0);
  CHECK(run_cli("hilbert --ring QQ[x,y,z] --ideal x^2,x*y,y^2").exit_code == 0);
  CHECK(run_cli("det --ring QQ[x,y,z] --matrix \"[0, x; x, y^3]\"").exit_code == 0);
  CHECK(run_cli("minors --ring QQ[x,y,z] --matrix \"[x, y^3]\"").exit_code == 0);
  CHECK(run_cli("construct --ring QQ[x,y,z] --twists 1 --lambda [x] --alpha [y^3]")
            .exit_code == 0);
  CHECK(run_cli("construct --ring QQ[x,y,z] --twists 1 --lambda [x] --alpha [y^2] --gamma 1")
            .exit_code == 0);
  CHECK(run_cli("parity --ring QQ[x0,x1,x2,x3,x4,x5] --ideal x0^2,x1^4 --d 4 --m 4")
            .exit_code == 0);
  CHECK(run_cli("colon --ring QQ[x,y,z] --ideal x^2,y^3 --by x^2,x*y,y^2").exit_code == 0);
  CHECK(run_cli("intersect --ring QQ[x,y,z] --ideal x^2,y --with x").exit_code == 0);
  CHECK(run_cli("nf --ring QQ[x,y,z] --ideal x^2,x+y --poly y^2").exit_code == 0);
  CHECK(run_cli("contact --field \"GF(11)\" --L y").exit_code == 0);
  CHECK(run_cli("demo33 --field QQ --L x").exit_code == 0);
  CHECK(run_cli("selftest").exit_code == 0);
}

TEST_CASE("exit 1: computed negative verdicts") {
  CHECK(run_cli("verify --ring QQ[x,y,z] --ideal x,y --f x^2 --g y^2").exit_code == 1);
  CHECK(run_cli("compare --ring QQ[x,y,z,w] --ideal x,y --g x^2 --f y --h x+y").exit_code ==
        1);
}

TEST_CASE("exit 2: malformed input") {
  CHECK(run_cli("verify --ring QQ[x,y,z] --ideal \"x^2 + q\" --f x --g y").exit_code == 2);
  CHECK(run_cli("gb --ring NOSUCH[x] --ideal x").exit_code == 2);
  CHECK(run_cli("gb --ideal x").exit_code == 2);       // no ring
  CHECK(run_cli("nonexistent-subcommand").exit_code == 2);
  CHECK(run_cli("hilbert --ring QQ[x,y,z] --ideal x^2+y").exit_code == 2); // inhomogeneous
  CHECK(run_cli("demo33 --field QQ --L 0").exit_code == 2);                // L = 0 degenerates
}

TEST_CASE("exit 3: unsupported requests") {
  auto r = run_cli("contact --field QQ --L y");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("root") != std::string::npos);
  CHECK(run_cli("demo33 --field QQ --L y").exit_code == 3);
  CHECK(run_cli("contact --field \"GF(3)\" --L x").exit_code == 3); // characteristic 3
}

TEST_CASE("verify output names the verdicts") {
  auto r = run_cli("verify --ring QQ[x,y,z] --ideal x^2,x*y,y^2 --f x^2 --g y^3 --json");
  CHECK(r.output.find("\"verdict\": true") != std::string::npos);
  CHECK(r.output.find("\"colon_equal\": true") != std::string::npos);
}

TEST_CASE("session files declare named objects") {
  const std::string path = "/tmp/selflink_session_test.txt";
  {
    std::ofstream f(path);
    f << "# the triple point in the plane\n"
      << "ring QQ[x,y,z] grevlex\n"
      << "poly f = x^2\n"
      << "poly g = y^3\n"
      << "ideal I = x^2, x*y, y^2\n"
      << "matrix A = [y, 0; -x, y; 0, -x]\n";
  }
  CHECK(run_cli("verify --file " + path + " --ideal I --f f --g g").exit_code == 0);
  CHECK(run_cli("det --file " + path + " --matrix \"[0, x; x, y^3]\"").exit_code == 0);
  // session names and literals may mix
  CHECK(run_cli("verify --file " + path + " --ideal I --f f --g \"y^3 + x^2*y\"").exit_code ==
        0);
  // --ring conflicts with --file
  CHECK(run_cli("verify --file " + path + " --ring QQ[x,y] --ideal I --f f --g g").exit_code ==
        2);
  std::remove(path.c_str());
}
