// littlewood: extremes of |L(1, chi)| over odd primes in a range.
//
// Exit status: 0 clean, 1 usage or configuration error, 2 a theorem
// inequality failed, 3 a per-prime numerical failure, 4 I/O error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "littlewood/batch.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kIoError = 4;

}  // namespace

int main(int argc, char** argv) {
  using namespace littlewood;

  CLI::App app{"Compute M_q and m_q for odd primes q in [min, max] and check Littlewood-type bounds"};
  app.option_defaults()->always_capture_default();

  RunConfig config;
  config.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int bits = 0;
  std::string mode = "fft";
  std::vector<std::string> plots;
  bool plot_only = false;
  bool quiet = false;

  app.add_option("--min", config.q_min, "Smallest q")->envname("LITTLEWOOD_MIN");
  app.add_option("--max", config.q_max, "Largest q")->envname("LITTLEWOOD_MAX");
  app.add_option("--bits", bits, "Precision budget n in bits (0: 50, or 62 with --extended)")
      ->envname("LITTLEWOOD_BITS");
  app.add_option("--mode", mode, "fft, direct (O(q^2) summation) or both (cross-checked)")
      ->check(CLI::IsMember({"fft", "direct", "both"}))
      ->envname("LITTLEWOOD_MODE");
  app.add_flag("--extended", config.extended, "Use the 80-bit long double pipeline")
      ->envname("LITTLEWOOD_EXTENDED");
  app.add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber)
      ->envname("LITTLEWOOD_WORKERS");
  app.add_option("--out", config.out_dir, "Output directory")->envname("LITTLEWOOD_OUT");
  app.add_option("--checkpoint-every", config.checkpoint_every, "Primes between checkpoints")
      ->check(CLI::PositiveNumber)
      ->envname("LITTLEWOOD_CHECKPOINT_EVERY");
  app.add_flag("--resume", config.resume, "Continue from the checkpoint in --out")->envname("LITTLEWOOD_RESUME");
  app.add_option("--plot", plots, "Write a gnuplot script: Mq, mq, Mq_normalized, mq_normalized, ULI, LLI")
      ->check(CLI::IsMember({"Mq", "mq", "Mq_normalized", "mq_normalized", "ULI", "LLI"}))
      ->envname("LITTLEWOOD_PLOT");
  app.add_flag("--plot-only", plot_only, "Only write plot scripts from existing CSVs in --out");
  app.add_option("--guard-band", config.guard_band, "Width of the marginal band around each inequality")
      ->envname("LITTLEWOOD_GUARD_BAND");
  app.add_option("--stop-after", config.stop_after, "Stop after writing this prime (simulated interruption)")
      ->group("");
  app.add_flag("-q,--quiet", quiet, "Do not print the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  config.mode = parse_run_mode(mode);
  config.n_bits = bits > 0 ? bits : default_bits(config.extended);

  int status = 0;
  try {
    if (!plot_only) {
      const RunResult result = run_range(config, &std::cerr);
      if (!quiet) print_summary(std::cout, result.summary);
      if (!result.summary.complete)
        std::cerr << "stopped after q=" << result.summary.last_prime << "; continue with --resume\n";
      status = result.exit_code;
    }
    for (const auto& name : plots) {
      const PlotKind kind = parse_plot_kind(name);
      const fs::path script = config.out_dir / ("plot_" + name + ".gp");
      emit_plot_script(config.out_dir / plot_source(kind), kind, script);
      if (!quiet) std::cout << "wrote " << script.string() << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "littlewood: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "littlewood: " << e.what() << '\n';
    return kIoError;
  }
  return status;
}
