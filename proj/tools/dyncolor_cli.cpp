// Trace replay front end: pick an engine, feed it a trace file or a generated
// trace, print the run report.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dyncolor/bench/generate.hpp"
#include "dyncolor/bench/runner.hpp"
#include "dyncolor/error.hpp"

namespace {

constexpr int kExitContract = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace dyncolor;

  CLI::App app{"Replay graph update traces against a dynamic coloring engine"};
  std::string engine;
  std::string trace_path;
  std::string gen_spec;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  bench::RunOptions options;
  std::string check = "none";
  std::string out_path;
  std::string dump_path;
  bool omit_wall_time = false;

  app.add_option("--engine", engine, "Engine to run")
      ->required()
      ->check(CLI::IsMember(bench::engine_names()));
  auto* trace_opt = app.add_option("--trace", trace_path, "Trace file to replay")->check(CLI::ExistingFile);
  auto* gen_opt = app.add_option("--gen", gen_spec, "Generator spec, e.g. random-forest(64,63)");
  trace_opt->excludes(gen_opt);
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("--n", n, "Vertex count; widens the trace's own n");
  app.add_option("--gamma", options.gamma, "Arboricity bound for arb (default: trace degeneracy)");
  app.add_option("--mcap", options.mcap, "Edge capacity for delta1 (default: trace peak)");
  app.add_option("--dcap", options.dcap, "Degree capacity for delta1/arb (default: trace peak)");
  app.add_option("--check", check, "Oracle re-validation after every update")
      ->check(CLI::IsMember({"none", "oracle"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--dump-trace", dump_path, "Write the replayed trace here");
  app.add_flag("--omit-wall-time", omit_wall_time, "Leave timing fields out of the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (trace_path.empty() == gen_spec.empty()) {
    std::cerr << "error: exactly one of --trace and --gen is required\n";
    return kExitUsage;
  }
  options.engine = engine;
  options.check_oracle = check == "oracle";

  bench::Trace trace;
  try {
    trace = trace_path.empty() ? bench::generate(gen_spec, seed) : bench::read_trace_file(trace_path);
    if (n != 0) {
      if (n < trace.n) {
        std::cerr << "error: --n " << n << " is smaller than the trace's n = " << trace.n << "\n";
        return kExitUsage;
      }
      trace.n = n;
    }
    if (!dump_path.empty()) bench::write_trace_file(dump_path, trace);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  bench::RunReport report;
  try {
    report = bench::run(trace, options);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ContractViolation ? kExitContract : kExitUsage;
  }

  std::string text = bench::report_to_json(report, !omit_wall_time);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    out << text;
  }
  return 0;
}
