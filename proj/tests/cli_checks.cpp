// End-to-end checks of the command-line surface: exit codes, document
// round-trips, and command composition. Runs the built binary through the
// shell, one PASS/FAIL line per behavior.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef SCT_CLI_PATH
#define SCT_CLI_PATH "sct"
#endif

namespace {

int g_failures = 0;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run(const std::string& shell_command) {
  std::string out_file = "/tmp/sct_cli_checks_out.txt";
  std::string cmd = shell_command + " > " + out_file + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  CliResult r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::string cli() { return std::string(SCT_CLI_PATH); }

void check(bool ok, const std::string& what) {
  std::printf("%s  %s\n", ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++g_failures;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

int main() {
  check(run(cli() + " check gallery:dunce_hat").exit_code == 1,
        "check gallery:dunce_hat exits 1");
  check(run(cli() + " check gallery:bing_house").exit_code == 0,
        "check gallery:bing_house exits 0");
  check(run(cli() + " check 'gallery:simplex(3)'").exit_code == 2,
        "check of a 3-dimensional star exits 2");

  CliResult rim = run(cli() + " boundary --kind one gallery:dunce_hat");
  check(rim.exit_code == 0 && contains(rim.output, "\"X\":[]"),
        "boundary --kind one of the dunce hat is the empty complex");

  write_file("/tmp/sct_cli_path.json", R"({"X":[[0,1],[1,2]]})");
  CliResult odd = run(cli() + " boundary --kind odd /tmp/sct_cli_path.json");
  check(odd.exit_code == 0 && contains(odd.output, "[0]") &&
            contains(odd.output, "[2]") && !contains(odd.output, "[1]"),
        "boundary --kind odd of a path holds the odd-degree vertices");

  CliResult piped = run(cli() + " link gallery:dunce_hat --vertex 0 | " +
                        cli() + " check-cone -");
  check(piped.exit_code == 1 && contains(piped.output, "NotComputableType"),
        "link | check-cone reproduces the corner obstruction");

  CliResult emitted =
      run(cli() + " gallery 'star(5)' --emit | " + cli() + " check -");
  check(emitted.exit_code == 0, "gallery --emit | check round-trips");

  CliResult sd = run(cli() + " subdivide --iterations 2 gallery:segment_bare | " +
                     cli() + " check -");
  check(sd.exit_code == 1, "twice-subdivided bare segment still exits 1");

  write_file("/tmp/sct_cli_bad.json", R"({"X":[[0,1)");
  check(run(cli() + " check /tmp/sct_cli_bad.json").exit_code == 3,
        "malformed document exits 3");
  write_file("/tmp/sct_cli_notsub.json", R"({"X":[[0,1]],"A":[[2]]})");
  check(run(cli() + " check /tmp/sct_cli_notsub.json").exit_code == 3,
        "A outside X exits 3");
  write_file("/tmp/sct_cli_fatcone.json", R"({"X":[[0,1]],"A":[[0,1]]})");
  check(run(cli() + " check-cone /tmp/sct_cli_fatcone.json").exit_code == 3,
        "check-cone with an edge in A exits 3");

  CliResult ambient = run(cli() + " gallery 'ball_pair(2)' --emit");
  write_file("/tmp/sct_cli_ambient.json", ambient.output);
  CliResult uc = run(cli() + " union-check /tmp/sct_cli_ambient.json "
                             "/tmp/sct_cli_ambient.json");
  check(uc.exit_code == 0 && contains(uc.output, "ComputableType"),
        "union-check with a covering piece exits 0");

  CliResult par_a = run(cli() + " check gallery:bing_house --json");
  CliResult par_b = run(cli() + " check gallery:bing_house --json --parallel");
  check(par_a.output == par_b.output && !par_a.output.empty(),
        "--parallel output is byte-identical");

  check(run(cli() + " self-test").exit_code == 0, "self-test exits 0");

  CliResult list = run(cli() + " gallery");
  check(list.exit_code == 0 && contains(list.output, "dunce_hat") &&
            contains(list.output, "Bing"),
        "gallery listing names the built-ins with provenance");

  return g_failures == 0 ? 0 : 1;
}
