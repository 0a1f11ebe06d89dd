#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end runs of the installed command-line tool.

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(VALTOP_CLI) + " " + args + " 2>&1";
  std::array<char, 512> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("/tmp/valtop_test_") + name;
  std::ofstream out(path);
  out << text;
  return path;
}

const char* kBadV1 = R"({
  "ring": "Z", "monoid": "Z",
  "entries": [
    {"elem": "2", "value": ["5"]},
    {"elem": "4", "value": ["2"]}
  ],
  "backing": null
})";

}  // namespace

TEST_CASE("eval returns the value with exit zero") {
  auto r = run_cli("eval --valuation 'padic(2)' --elem 12");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("= 2") != std::string::npos);
}

TEST_CASE("check reports the violation and writes a certificate") {
  std::string table = write_temp("bad_v1.json", kBadV1);
  std::string cert = table + ".cert.json";
  std::remove(cert.c_str());
  auto r = run_cli("check --table " + table);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("V1 violation at (2,2)") != std::string::npos);
  std::ifstream in(cert);
  CHECK(in.good());
}

TEST_CASE("separate re-verifies an emitted certificate") {
  std::string table = write_temp("bad_v1b.json", kBadV1);
  auto first = run_cli("check --table " + table + " --out " + table + ".cert");
  REQUIRE(first.exit_code == 1);
  auto second = run_cli("separate --table " + table + " --cert " + table + ".cert");
  CHECK(second.exit_code == 1);
  CHECK(second.output.find("verified") != std::string::npos);
}

TEST_CASE("topo compare reports strictness through the exit code") {
  auto strict = run_cli("topo compare --group Q --fine A2 --coarse A3");
  CHECK(strict.exit_code == 1);
  CHECK(strict.output.find("strict witness") != std::string::npos);
  auto equal = run_cli("topo compare --group Z --fine A2 --coarse A3");
  CHECK(equal.exit_code == 0);
  auto gamma_prime = run_cli("topo compare --group 'nonneg(Z)' --fine A1 --coarse A2");
  CHECK(gamma_prime.exit_code == 0);
}

TEST_CASE("witness-t1 builds the counterexample for the pinned pair") {
  auto r = run_cli(
      "witness-t1 --valuation 'padic(2)' --a0 2 --gamma-prime 2 --topology 'nont1(1,2)'");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("all contain the backing value: yes") != std::string::npos);
  auto refused = run_cli(
      "witness-t1 --valuation 'padic(2)' --a0 2 --gamma-prime 2 --topology A1");
  CHECK(refused.exit_code == 2);
}

TEST_CASE("topo props covers the pinned topologies") {
  auto pinned = run_cli("topo props --topology 'pinned(5)' --group Z");
  CHECK(pinned.exit_code == 0);
  CHECK(pinned.output.find("witness") != std::string::npos);
  auto nont1 = run_cli("topo props --topology 'nont1(1,2)' --group Z");
  CHECK(nont1.exit_code == 1);
  CHECK(nont1.output.find("not T1") != std::string::npos);
}

TEST_CASE("spectra answers membership queries") {
  auto r = run_cli("spectra --valuation 'padic(2)' --query zariski --a '3/2'");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("false") != std::string::npos);
  auto n = run_cli("spectra --valuation 'monomial(w=[2,3])' --query normalize");
  CHECK(n.output.find("monomial(w=[1,3/2])") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
  std::string table = write_temp("bad_v1c.json", kBadV1);
  auto a = run_cli("--json check --table " + table);
  auto b = run_cli("--json check --table " + table);
  CHECK(a.output == b.output);
  auto c = run_cli("--json topo compare --group Q --fine A2 --coarse A3");
  auto d = run_cli("--json topo compare --group Q --fine A2 --coarse A3");
  CHECK(c.output == d.output);
}

TEST_CASE("usage and data errors exit with two") {
  auto r = run_cli("eval --valuation 'padic(9)' --elem 12");
  CHECK(r.exit_code == 2);
  auto missing = run_cli("check --table /tmp/valtop_no_such_file.json");
  CHECK(missing.exit_code == 2);
}
