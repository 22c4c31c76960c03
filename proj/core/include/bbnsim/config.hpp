#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bbnsim/metrics.hpp"
#include "bbnsim/stats_fit.hpp"
#include "bbnsim/synth.hpp"

namespace bbnsim {

/// One protocol pipeline of a run; `name` prefixes the output files.
struct ProtocolEntry {
  std::string name;
  ProtocolRun run;
};

/// Full description of a batch run. Defaults mirror the measurement-campaign
/// parameter table, so an empty config file runs that setting on a synthetic
/// trace.
struct RunConfig {
  // Trace source: a CSV path, or synthetic when empty.
  std::string trace_path;
  std::uint64_t seed = 1;
  std::int64_t synth_duration_ms = 60'000;
  SynthModel synth;
  int sampling_period_ms = kDefaultSamplingPeriodMs;
  int window_period_ms = kDefaultWindowPeriodMs;

  // Population: the default 10-BAN layout unless a JSON file is given.
  int n_bans = 10;
  std::string network_path;
  double tx_power_hub_dbm = 0.0;
  double tx_power_sensor_dbm = 0.0;

  std::vector<ProtocolEntry> protocols;
  std::vector<std::pair<NodeId, NodeId>> flows;  // empty = all ordered hub pairs

  double sensitivity_dbm = -100.0;
  std::vector<double> sensitivity_grid_dbm;  // kept sorted ascending
  DeliveryInstant instant = DeliveryInstant::EverySample;

  EnergyParams energy;
  DelayParams delay;
  std::optional<NodeId> orpl_root;
  double orpl_omega = 0.1;
  TrickleConfig trickle;
  LoadngParams loadng;

  std::string output_dir = "out";
  bool write_outcomes = true;
};

/// Parse the flat key=value config format ('#' comments, blank lines
/// allowed). Unknown keys raise ConfigError.
RunConfig parse_run_config(const std::filesystem::path& path);
RunConfig parse_run_config_text(const std::string& text);

/// RunParams slice of a config (the per-protocol knobs).
RunParams run_params_of(const RunConfig& config);

/// The population a config describes: the default layout or a JSON file
/// with bans and per-node transmit powers.
Network network_of(const RunConfig& config);
Network load_network_json(const std::filesystem::path& path);

/// The configured flow list, or all ordered hub pairs when empty.
std::vector<std::pair<NodeId, NodeId>> flows_of(const RunConfig& config,
                                                const Network& network);

FitFamily parse_fit_family(const std::string& name);

}  // namespace bbnsim
