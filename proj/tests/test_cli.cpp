// End-to-end checks of the command-line binary: exit codes and format parity.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int run(const std::string& args, std::string* out = nullptr) {
  const std::string out_path = "/tmp/gwps3_cli_test_out.txt";
  const std::string cmd = std::string(GWPS3_CLI_BIN) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(out_path);
    std::ostringstream os;
    os << in.rdbuf();
    *out = os.str();
  }
  return WEXITSTATUS(status);
}

int failures = 0;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    std::cerr << "FAIL: " << what << "\n";
    ++failures;
  }
}

}  // namespace

int main() {
  std::string out;

  expect(run("classify", &out) == 0, "classify exits 0");
  expect(out.find("2,3,10,15") != std::string::npos, "classify lists case 14");
  expect(out.find("1,2,2,5     10   10     1") != std::string::npos,
         "classify row for (1,2,2,5) shows (10,10,1)");

  // the three formats carry the same data
  std::string json_out, csv_out;
  expect(run("classify --json", &json_out) == 0, "classify --json exits 0");
  expect(run("classify --csv", &csv_out) == 0, "classify --csv exits 0");
  const auto j = nlohmann::json::parse(json_out);
  expect(j.size() == 14, "json classify has 14 rows");
  int csv_rows = -1;  // header line
  {
    std::istringstream is(csv_out);
    std::string line;
    while (std::getline(is, line))
      if (!line.empty()) ++csv_rows;
  }
  expect(csv_rows == 14, "csv classify has 14 rows");
  for (const auto& row : j) {
    const long l = row["l"], sigma = row["sigma"], index = row["index"];
    expect(l * index == sigma, "json row index consistency");
  }

  expect(run("hilbert 1,2,3,6 12", &out) == 0, "hilbert exits 0");
  expect(out.find("27") != std::string::npos, "hilbert count printed");
  expect(run("hilbert 1,2,0,6 12", &out) == 2, "bad weights give usage error");
  expect(run("hilbert 1,2,3,6", &out) == 2, "missing degree gives usage error");

  expect(run("invariants 1,2,4,5", &out) == 0, "invariants on non-Gorenstein input exits 0");
  expect(out.find("weight 5") != std::string::npos, "offending weight reported");
  expect(run("invariants 1,1,4,6", &out) == 0, "invariants exits 0");
  expect(out.find("g=37") != std::string::npos, "genus reported");

  expect(run("veronese 1,3,8,12 --n 3", &out) == 0, "veronese exits 0");
  expect(out.find("9-ic (u0 t = v^3)") != std::string::npos, "model line printed");
  expect(run("veronese 1,1,1,1 --n 2", &out) == 0, "non-hypersurface image still exits 0");
  expect(out.find("not a hypersurface: 10 generators") != std::string::npos,
         "codimension message printed");

  expect(run("fan 2,3,10,15 --json", &out) == 0, "fan exits 0");
  expect(nlohmann::json::parse(out).contains("rays"), "fan json has rays");

  expect(run("blowup-verify", &out) == 0, "blowup-verify passes");
  expect(run("degrees", &out) == 0, "degrees passes");
  expect(out.find("misprint") != std::string::npos, "degrees carries the case-12 note");
  expect(run("profiles --seeds 5", &out) == 0, "profiles passes on a custom seed");

  expect(run("verify --all", &out) == 0, "verify --all passes");
  expect(run("verify", &out) == 2, "verify without --all is a usage error");
  expect(run("bogus-subcommand", &out) == 2, "unknown subcommand is a usage error");

  // byte-identical reports across runs
  std::string again;
  run("verify --all", &out);
  run("verify --all", &again);
  expect(out == again, "verify output is deterministic");

  // alternate reference data: tampered alpha must fail verification (exit 1)
  {
    std::ifstream in(std::string(GWPS3_DATA_DIR) + "/reference_cases.txt");
    std::ostringstream os;
    os << in.rdbuf();
    std::string text = os.str();
    const std::string needle = "9  | 2 | 21 | 6  | 4 | 5 |";
    const auto pos = text.find(needle);
    expect(pos != std::string::npos, "reference row located for tampering");
    text.replace(pos, needle.size(), "9  | 2 | 21 | 6  | 5 | 5 |");
    std::ofstream("/tmp/gwps3_tampered.txt") << text;
    expect(run("--data /tmp/gwps3_tampered.txt verify --all", &out) == 1,
           "tampered alpha fails verification with exit 1");
    expect(out.find("extension.dim.case9") != std::string::npos, "failing check is reported");

    // corrupt table: parse failure is a usage error with a line number
    std::ofstream("/tmp/gwps3_corrupt.txt") << "# broken, version 1\n# section: classification\nnonsense\n";
    expect(run("--data /tmp/gwps3_corrupt.txt classify", &out) == 2,
           "corrupt reference file is rejected");
    expect(out.find(":3:") != std::string::npos, "parse error carries the line number");
  }

  if (failures == 0) std::cout << "cli checks passed\n";
  return failures == 0 ? 0 : 1;
}
