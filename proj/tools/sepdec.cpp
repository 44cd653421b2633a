// Command line front end: runs one query file, or every query file of a
// directory in parallel (--batch), and prints JSON reports.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "sepdec/query.hpp"

namespace fs = std::filesystem;
using sepdec::Json;

namespace {

struct Flags {
  std::string input;
  std::string batch;
  std::string output;
  std::string task;
  std::string level;
  std::string basis;
  std::string oracle;
  bool dump_pol = false;
  bool dump_bpol = false;
  bool trace = false;
  bool timing = false;
  std::size_t max_monoid = 0;
  std::size_t max_n = 0;
  std::size_t max_frontier = 0;
  std::size_t wall_ms = 0;
  std::size_t k = 0;
  unsigned jobs = 0;
};

/// Command line settings take precedence over the document.
Json overrides(const Flags& f) {
  Json o = Json::object();
  Json opts = Json::object();
  if (!f.task.empty()) o["task"] = f.task;
  if (!f.level.empty()) o["level"] = f.level;
  if (!f.basis.empty()) {
    // A custom path on the command line is relative to the working directory.
    std::string b = f.basis;
    if (b.rfind("custom:", 0) == 0) b = "custom:" + fs::absolute(b.substr(7)).string();
    opts["basis"] = b;
  }
  if (f.dump_pol) opts["dump_pol"] = true;
  if (f.dump_bpol) opts["dump_bpol"] = true;
  if (f.trace) opts["trace"] = true;
  if (f.timing) opts["timing"] = true;
  if (f.max_monoid) opts["max_monoid"] = f.max_monoid;
  if (f.max_n) opts["max_n"] = f.max_n;
  if (f.max_frontier) opts["max_frontier"] = f.max_frontier;
  if (f.wall_ms) opts["wall_ms"] = f.wall_ms;
  if (f.k) opts["k"] = f.k;
  if (!opts.empty()) o["options"] = opts;
  return o;
}

int run_batch(const Flags& f) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(f.batch)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        name.find(".report.") == std::string::npos)
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const fs::path out_dir = f.output.empty() ? fs::path(f.batch) : fs::path(f.output);
  fs::create_directories(out_dir);

  const Json patch = overrides(f);
  std::vector<int> codes(files.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      sepdec::Outcome r = sepdec::run_file(files[i], patch, f.oracle);
      std::ofstream(out_dir / (files[i].stem().string() + ".report.json"))
          << sepdec::serialize(r.report);
      codes[i] = r.exit_code;
    }
  };
  unsigned jobs = f.jobs ? f.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, files.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int worst = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::cout << files[i].filename().string() << " " << codes[i] << "\n";
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separation, covering and membership for low levels of concatenation hierarchies"};
  Flags f;
  auto* input = app.add_option("-i,--input", f.input, "Query file (JSON)");
  auto* batch = app.add_option("--batch", f.batch, "Run every *.json query in a directory");
  input->excludes(batch);
  app.add_option("-o,--output", f.output,
                 "Report file (single query) or report directory (--batch)");
  app.add_option("--task", f.task, "separate | cover | member | imprint");
  app.add_option("--level", f.level, "st_half | st1 | pol_at | st2 | dd_half | dd1");
  app.add_option("--basis", f.basis, "st0 | dd0 | at | custom:<monoid.json>");
  app.add_flag("--dump-pol", f.dump_pol, "Include the pointed Pol imprint");
  app.add_flag("--dump-bpol", f.dump_bpol, "Include the class-pointed BPol imprint");
  app.add_flag("--trace", f.trace, "Include outer-iteration sizes");
  app.add_flag("--timing", f.timing, "Include wall-clock time (reports stop being reproducible)");
  app.add_option("--max-monoid", f.max_monoid, "Monoid size bound (default 512)");
  app.add_option("--max-n", f.max_n, "Rating base bound |N| (default 16, at most 64)");
  app.add_option("--max-frontier", f.max_frontier, "Frontier triple bound (default 200000)");
  app.add_option("--wall-ms", f.wall_ms, "Wall-clock bound per engine run (default 300000)");
  app.add_option("--oracle", f.oracle, "Run an oracle instead: j-trivial | upward-closed | k-subword");
  app.add_option("--k", f.k, "Subword length for the k-subword oracle");
  app.add_option("-j,--jobs", f.jobs, "Parallel workers for --batch");
  CLI11_PARSE(app, argc, argv);

  if (!f.batch.empty()) return run_batch(f);
  if (f.input.empty()) {
    std::cerr << "either --input or --batch is required\n";
    return 2;
  }
  sepdec::Outcome r = sepdec::run_file(f.input, overrides(f), f.oracle);
  const std::string text = sepdec::serialize(r.report);
  if (f.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream(f.output) << text;
  }
  if (r.exit_code != 0) std::cerr << r.report["error"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}
