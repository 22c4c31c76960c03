#include "bbnsim/runner.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "bbnsim/errors.hpp"
#include "bbnsim/report.hpp"

namespace bbnsim {

namespace {

std::filesystem::path resolve_output_dir(const RunConfig& config) {
  const char* env = std::getenv("BBNSIM_OUTPUT_DIR");
  std::filesystem::path dir = env && *env ? env : config.output_dir;
  std::filesystem::create_directories(dir);
  return dir;
}

/// Combined-gain column of a fit input: either a bare list of dB values
/// (optional gain_db header) or an outcomes CSV.
std::vector<double> read_gain_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gains file " + path.string());
  std::string line;
  std::vector<double> gains;
  std::size_t line_no = 0;
  int column = 0;
  bool header_checked = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!header_checked) {
      header_checked = true;
      if (line.find("combined_gain_db") != std::string::npos) {
        // Outcomes CSV: locate the column.
        std::stringstream ss(line);
        std::string field;
        int idx = 0;
        while (std::getline(ss, field, ',')) {
          if (field == "combined_gain_db") column = idx;
          ++idx;
        }
        continue;
      }
      if (line.find("gain_db") != std::string::npos) continue;  // bare header
    }
    std::stringstream ss(line);
    std::string field;
    for (int i = 0; i <= column; ++i) {
      if (!std::getline(ss, field, ','))
        throw ParseError("missing gain column", line_no);
    }
    try {
      gains.push_back(std::stod(field));
    } catch (const std::exception&) {
      throw ParseError("bad gain value '" + field + "'", line_no);
    }
  }
  if (gains.empty()) throw EmptyTraceError("gains file has no samples: " + path.string());
  return gains;
}

ChannelTrace make_trace(const RunConfig& config, const Network& network) {
  if (!config.trace_path.empty())
    return load_trace(config.trace_path, network, config.sampling_period_ms);
  return generate_synthetic(network, config.synth_duration_ms, config.seed, config.synth,
                            config.sampling_period_ms);
}

}  // namespace

int cmd_run(const RunConfig& config, std::ostream& log) {
  const Network network = network_of(config);
  const ChannelTrace trace = make_trace(config, network);
  const auto flows = flows_of(config, network);
  if (flows.empty()) throw ConfigError("no flows to run (population has one hub?)");
  const RunParams params = run_params_of(config);
  const auto out_dir = resolve_output_dir(config);

  log << "trace: " << (config.trace_path.empty() ? "synthetic" : config.trace_path)
      << ", duration " << trace.duration_ms << " ms, " << flows.size() << " flows\n";

  // Per-protocol pipelines are independent; run them concurrently and
  // write disjoint files.
  struct PipelineResult {
    std::vector<PacketOutcome> outcomes;
    MetricsSummary summary;
  };
  std::vector<std::future<PipelineResult>> futures;
  for (const ProtocolEntry& entry : config.protocols) {
    futures.push_back(std::async(std::launch::async, [&, entry]() {
      PipelineResult result;
      result.outcomes = run_protocol(trace, entry.run, flows, params);
      result.summary = summarize(result.outcomes, config.sensitivity_grid_dbm,
                                 network.tx_power_dbm(flows.front().first),
                                 config.window_period_ms);
      return result;
    }));
  }

  for (std::size_t i = 0; i < futures.size(); ++i) {
    const ProtocolEntry& entry = config.protocols[i];
    PipelineResult result = futures[i].get();
    if (config.write_outcomes)
      write_outcomes_csv(out_dir / ("outcomes_" + entry.name + ".csv"), result.outcomes);
    write_summary_json(out_dir / ("summary_" + entry.name + ".json"), entry.name,
                       result.summary, config.sensitivity_dbm);
    write_outage_csv(out_dir / ("outage_" + entry.name + ".csv"), result.summary.outage_curve);
    write_hops_csv(out_dir / ("hops_" + entry.name + ".csv"), result.summary);
    log << entry.name << ": success rate " << format_sig(result.summary.success_rate, 6)
        << ", throughput " << format_sig(result.summary.throughput_pps, 6)
        << " pps, no-route " << format_sig(result.summary.no_route_fraction, 6) << '\n';
  }
  return 0;
}

int cmd_fit(const std::filesystem::path& input, FitFamily family,
            const std::filesystem::path& out_dir, std::ostream& log) {
  const std::vector<double> gains = read_gain_file(input);
  const std::vector<double> amplitudes = amplitudes_from_db(gains);
  if (amplitudes.size() < 2)
    throw DegenerateFitError("too few usable samples after sentinel removal");

  const FitResult fit =
      family == FitFamily::Gamma ? fit_gamma(amplitudes) : fit_rician(amplitudes);
  std::filesystem::create_directories(out_dir);
  const std::string name = family == FitFamily::Gamma ? "gamma" : "rician";
  write_fit_json(out_dir / ("fit_" + name + ".json"), fit);
  write_pdf_csv(out_dir / "pdf_empirical.csv",
                empirical_pdf(amplitudes, std::min<int>(60, static_cast<int>(amplitudes.size()))));
  log << "fit_" << name << ": n=" << fit.n_samples << ", loglik "
      << format_sig(fit.loglik, 9) << '\n';
  return 0;
}

int cmd_synth(const RunConfig& config, const std::filesystem::path& out_path,
              std::ostream& log) {
  const Network network = network_of(config);
  const ChannelTrace trace = generate_synthetic(network, config.synth_duration_ms,
                                                config.seed, config.synth,
                                                config.sampling_period_ms);
  if (out_path.has_parent_path()) std::filesystem::create_directories(out_path.parent_path());
  write_trace(trace, out_path);
  log << "wrote " << trace.samples.size() << " samples to " << out_path.string() << '\n';
  return 0;
}

}  // namespace bbnsim
