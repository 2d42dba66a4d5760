// End-to-end smoke test for the gazekit binary. argv[1] is the CLI path.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: gazekit_cli_smoke <cli-path>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path dir =
      fs::temp_directory_path() / ("gazekit_smoke_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const std::string d = dir.string();
  const std::string null = " >/dev/null 2>" + d + "/stderr.txt";

  // Usage errors exit 2.
  check(run(cli + " --definitely-not-a-flag" + null) == 2, "unknown flag exits 2");
  check(run(cli + null) == 2, "missing subcommand exits 2");
  check(run(cli + " --help >/dev/null 2>&1") == 0, "--help exits 0");

  // Happy path: synth -> ingest -> train -> evaluate.
  const std::string config = d + "/config.json";
  std::ofstream(config) << R"({"duration_s": 6.0, "fixation_ms_range": [150, 400]})";
  check(run(cli + " synth --config " + config + " --seed 9 -o " + d + "/doc.json" +
            null) == 0,
        "synth exits 0");
  check(fs::exists(d + "/doc.json"), "synth wrote the document");
  check(fs::exists(d + "/doc.json.intervals.csv"), "synth wrote the interval sidecar");

  check(run(cli + " ingest " + d + "/doc.json -o " + d + "/table.csv" + null) == 0,
        "ingest exits 0");
  check(fs::exists(d + "/table.csv"), "ingest wrote the table");

  check(run(cli + " analyze " + d + "/table.csv --iqr-k 3 -o " + d + "/analysis" +
            null) == 0,
        "analyze exits 0");
  check(fs::exists(d + "/analysis/divergence.csv"), "analyze wrote the series");
  check(fs::exists(d + "/analysis/divergence.svg"), "analyze wrote the plot");

  check(run(cli + " pca " + d + "/table.csv --mode center -o " + d + "/pca" + null) ==
            0,
        "pca exits 0");
  check(fs::exists(d + "/pca/scree.csv"), "pca wrote the scree table");
  {
    std::istringstream scree(slurp(d + "/pca/scree.csv"));
    std::string line;
    int lines = 0;
    while (std::getline(scree, line)) ++lines;
    check(lines == 26, "scree table has 25 data rows");
  }

  check(run(cli + " train " + d + "/table.csv --pcs 4 --folds 4 --seed 5 " +
            "--grid 'C:1,10;gamma:0.1,1' -o " + d + "/model.json --grid-out " + d +
            "/grid.csv --test-out " + d + "/test.csv" + null) == 0,
        "train exits 0");
  check(fs::exists(d + "/model.json"), "train wrote the model");
  check(fs::exists(d + "/grid.csv"), "train wrote the grid table");

  check(run(cli + " evaluate " + d + "/model.json " + d + "/test.csv -o " + d +
            "/report.json --plot " + d + "/confusion.svg" + null) == 0,
        "evaluate exits 0");
  check(fs::exists(d + "/report.json"), "evaluate wrote the report");
  check(slurp(d + "/report.json").find("accuracy") != std::string::npos,
        "report mentions accuracy");

  check(run(cli + " boundary " + d + "/table.csv --pcs 2 --resolution 24 --seed 5 " +
            "--grid 'C:1;gamma:0.5' -o " + d + "/boundary.csv" + null) == 0,
        "boundary exits 0");
  check(fs::exists(d + "/boundary.csv"), "boundary wrote the grid");
  check(fs::exists(d + "/boundary.csv.svg"), "boundary wrote the contour");

  // Full report chain into one directory.
  check(run(cli + " report --in " + d + "/doc.json -o " + d + "/report --seed 3 " +
            "--grid 'C:1,10;gamma:0.1,1'" + null) == 0,
        "report exits 0");
  for (const char* f : {"table.csv", "model.json", "grid.csv", "report.json",
                        "manifest.json", "boundary.csv", "confusion.svg"})
    check(fs::exists(dir / "report" / f), std::string("report wrote ") + f);

  // Determinism: identical flags give byte-identical outputs.
  check(run(cli + " synth --config " + config + " --seed 9 -o " + d + "/doc2.json" +
            null) == 0,
        "second synth exits 0");
  check(slurp(d + "/doc.json") == slurp(d + "/doc2.json"),
        "synth output is byte-identical for the same seed");

  // Runtime failures exit 1 and name the path.
  check(run(cli + " evaluate " + d + "/missing_model.json " + d + "/test.csv" +
            null) == 1,
        "missing model exits 1");
  check(slurp(d + "/stderr.txt").find("missing_model.json") != std::string::npos,
        "error message names the missing path");

  fs::remove_all(dir);
  if (failures == 0) {
    std::cout << "cli smoke: all checks passed\n";
    return 0;
  }
  std::cout << "cli smoke: " << failures << " checks failed\n";
  return 1;
}
