// End-to-end exercise of the command-line binary through a shell pipe.
// Takes the binary path as argv[1]; prints one FAIL line per broken check.

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

std::string cli;
int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << '\n';
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << '\n';
    std::exit(2);
  }
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json parse(const RunResult& r, const std::string& what) {
  try {
    return Json::parse(r.out);
  } catch (const std::exception& e) {
    check(false, what + ": output is not JSON (" + e.what() + ")");
    return Json::object();
  }
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

void test_pgst_cycle4() {
  const RunResult r = run("check-pgst --generator cycle:4 0 2");
  check(r.exit_code == 0, "cycle:4 exit code");
  const Json j = parse(r, "cycle:4");
  check(j.value("schema", "") == "1", "cycle:4 schema tag");
  check(j.value("command", "") == "check-pgst", "cycle:4 command tag");
  check(j.value("route", "") == "spectral", "cycle:4 route");
  check(j["verdict"].value("outcome", "") == "yes", "cycle:4 outcome");
  check(j["verdict"].value("mode", "") == "exact", "cycle:4 mode");
  check(j["verdict"]["certificate"].value("type", "") == "lattice_all_even",
        "cycle:4 certificate type");
  check(!j["verdict"]["certificate"]["basis"].empty(), "cycle:4 certificate carries a basis");
}

void test_pgst_unitary8() {
  const RunResult r = run("check-pgst --unitary 8 0 4");
  check(r.exit_code == 0, "unitary 8 exit code");
  const Json j = parse(r, "unitary 8");
  check(j.value("route", "") == "cayley", "unitary 8 route");
  check(j["verdict"].value("outcome", "") == "no", "unitary 8 outcome");
  const Json& cert = j["verdict"]["certificate"];
  check(cert.value("type", "") == "parity_violation", "unitary 8 certificate type");
  const std::vector<long long> expected = {0, 1, 3, 0, 0, 0, 0, 0};
  check(cert["relation"].get<std::vector<long long>>() == expected, "unitary 8 witness relation");
}

void test_pgst_order_obstruction() {
  const RunResult r = run("check-pgst --circulant 9 --conn 1,8 0 3");
  check(r.exit_code == 0, "circulant 9 exit code");
  const Json j = parse(r, "circulant 9");
  check(j["verdict"].value("outcome", "") == "no", "circulant 9 outcome");
  const Json& cert = j["verdict"]["certificate"];
  check(cert.value("type", "") == "order_obstruction", "circulant 9 certificate type");
  check(cert["element"].get<std::vector<int>>() == std::vector<int>{3}, "circulant 9 element");
  check(cert.value("order", 0) == 3, "circulant 9 element order");
}

void test_pgst_unknown() {
  const RunResult r = run("check-pgst --circulant 12 --conn 1,11 0 6 --precision 80");
  check(r.exit_code == 2, "circulant 12 exit code distinguishes Unknown");
  const Json j = parse(r, "circulant 12");
  check(j["verdict"].value("outcome", "") == "unknown", "circulant 12 outcome");
  check(j["verdict"].value("mode", "") == "heuristic", "circulant 12 mode");
  check(j["verdict"]["certificate"].value("type", "") == "search_bounds",
        "circulant 12 certificate type");
  check(j["verdict"]["certificate"].value("precision", 0) == 80, "circulant 12 precision echo");
}

void test_unitary_table() {
  const RunResult r = run("unitary-table 2 12");
  check(r.exit_code == 0, "unitary-table exit code");
  const std::string expected =
      "n,pgst,pst,witness\n"
      "2,true,true,1\n"
      "3,false,false,\n"
      "4,true,true,2\n"
      "5,false,false,\n"
      "6,true,true,3\n"
      "7,false,false,\n"
      "8,false,false,\n"
      "9,false,false,\n"
      "10,true,false,5\n"
      "11,false,false,\n"
      "12,true,true,6\n";
  check(r.out == expected, "unitary-table byte-exact output");
}

void test_sweep_csv() {
  const RunResult r = run("sweep --generator cycle:4 0 2 --tau-max 8");
  check(r.exit_code == 0, "sweep exit code");
  const auto rows = lines(r.out);
  check(rows.size() == 11, "sweep row count (summary + header + 9 samples)");
  if (rows.size() != 11) return;
  check(rows[0].rfind("# max_fidelity=", 0) == 0, "sweep summary comment");
  check(rows[0].find("argmax=2") != std::string::npos, "sweep argmax");
  check(rows[1] == "tau,fidelity", "sweep csv header");
  check(rows[2].rfind("0,", 0) == 0, "sweep starts at tau=0");
  const std::string& hit = rows[4];  // tau = 2
  check(hit.rfind("2,", 0) == 0, "sweep tau=2 row present");
  check(std::abs(std::strtod(hit.c_str() + 2, nullptr) - 1.0) < 1e-12, "sweep tau=2 fidelity");
}

void test_sweep_long_run() {
  const RunResult r = run("sweep --unitary 10 0 5 --tau-max 100000 --format json");
  check(r.exit_code == 0, "long sweep exit code");
  const Json j = parse(r, "long sweep");
  const double best = j.value("max_fidelity", 0.0);
  check(best < 1.0, "long sweep never reaches fidelity one");
  check(best > 1.0 - 1e-8, "long sweep comes very close to one");
  check(j.value("argmax", 0L) == 53829, "long sweep argmax");
}

void test_pst() {
  {
    const RunResult r = run("check-pst --generator cycle:4 0 2");
    check(r.exit_code == 0, "pst cycle:4 exit code");
    const Json j = parse(r, "pst cycle:4");
    check(j["verdict"].value("outcome", "") == "found", "pst cycle:4 outcome");
    check(j["verdict"].value("tau", -1L) == 2, "pst cycle:4 tau");
  }
  {
    const RunResult r = run("check-pst --generator cycle:5 0 2");
    check(r.exit_code == 0, "pst cycle:5 exit code");
    const Json j = parse(r, "pst cycle:5");
    check(j["verdict"].value("outcome", "") == "absent_within_period", "pst cycle:5 outcome");
    check(j["verdict"].value("period", -1L) == 5, "pst cycle:5 period");
    check(j["verdict"].value("best_fidelity", 1.0) < 1.0 - 1e-9, "pst cycle:5 best fidelity");
  }
}

void test_spectrum() {
  const RunResult r = run("spectrum --generator complete:3");
  check(r.exit_code == 0, "spectrum exit code");
  const Json j = parse(r, "spectrum");
  check(j.value("schema", "") == "1", "spectrum schema tag");
  const Json& eigs = j["eigenvalues"];
  check(eigs.size() == 2, "spectrum distinct eigenvalue count");
  if (eigs.size() != 2) return;
  check(std::abs(eigs[0].value("value", 0.0) - 1.0) < 1e-12, "spectrum top eigenvalue");
  check(eigs[0].value("multiplicity", 0) == 1, "spectrum top multiplicity");
  check(std::abs(eigs[1].value("value", 0.0) + 0.5) < 1e-12, "spectrum bulk eigenvalue");
  check(eigs[1].value("multiplicity", 0) == 2, "spectrum bulk multiplicity");
  for (const auto& entry : eigs)
    for (const auto& flag : entry["support"]) check(flag.get<bool>(), "spectrum full support");
}

void test_determinism_and_out_file() {
  const std::string args = "check-pgst --unitary 8 0 4";
  const RunResult first = run(args);
  const RunResult second = run(args);
  check(first.out == second.out, "repeated runs are byte-identical");

  const std::string path = "/tmp/groverwalk_cli_out.json";
  std::remove(path.c_str());
  const RunResult filed = run(args + " --out " + path);
  check(filed.exit_code == first.exit_code, "--out keeps the exit code");
  check(filed.out.empty(), "--out silences stdout");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  check(ss.str() == first.out, "--out file matches stdout bytes");
  std::remove(path.c_str());
}

void test_usage_errors() {
  check(run("check-pgst 0 2").exit_code == 1, "missing graph source exits 1");
  check(run("check-pgst --generator cycle:4 --unitary 8 0 2").exit_code == 1,
        "two graph sources exit 1");
  check(run("check-pgst --generator blob:4 0 2").exit_code == 1, "unknown generator exits 1");
  check(run("check-pgst --generator cycle:4 0 9").exit_code == 1, "vertex out of range exits 1");
  check(run("check-pgst --circulant 9 0 3").exit_code == 1, "--circulant without --conn exits 1");
  check(run("check-pgst --circulant 9 --conn 1,x 0 3").exit_code == 1, "bad --conn token exits 1");
  check(run("check-pgst --generator cycle:4 0").exit_code == 1, "missing positional exits 1");
  check(run("unitary-table 5 3").exit_code == 1, "reversed table range exits 1");
  check(run("spectrum --edge-list /nonexistent/file").exit_code == 1, "unreadable file exits 1");
  check(run("--help").exit_code == 0, "--help exits 0");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cli-binary>\n";
    return 2;
  }
  cli = argv[1];

  test_pgst_cycle4();
  test_pgst_unitary8();
  test_pgst_order_obstruction();
  test_pgst_unknown();
  test_unitary_table();
  test_sweep_csv();
  test_sweep_long_run();
  test_pst();
  test_spectrum();
  test_determinism_and_out_file();
  test_usage_errors();

  if (failures > 0) {
    std::cerr << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
