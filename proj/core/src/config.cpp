#include "bbnsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bbnsim/errors.hpp"

namespace bbnsim {

namespace {

std::string trimmed(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trimmed(item));
  return out;
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + value + "'");
  }
}

std::int64_t to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for " + key + ": '" + value + "'");
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("bad boolean value for " + key + ": '" + value + "'");
}

ProtocolEntry parse_protocol(const std::string& token, std::optional<int> spr_hop_limit) {
  if (token == "spr") return {token, ProtocolRun{Protocol::Spr, spr_hop_limit}};
  if (token == "spr_unrestricted")
    return {token, ProtocolRun{Protocol::Spr, std::nullopt}};
  if (token == "cmr") return {token, ProtocolRun{Protocol::Cmr, spr_hop_limit}};
  if (token == "orpl") return {token, ProtocolRun{Protocol::Orpl, std::nullopt}};
  if (token == "loadng") return {token, ProtocolRun{Protocol::Loadng, std::nullopt}};
  throw ConfigError("unknown protocol '" + token + "'");
}

SynthFamily parse_family(const std::string& value) {
  if (value == "lognormal_db") return SynthFamily::LogNormalDb;
  if (value == "gamma") return SynthFamily::Gamma;
  if (value == "rician") return SynthFamily::Rician;
  throw ConfigError("unknown synth family '" + value + "'");
}

std::vector<double> default_grid() {
  std::vector<double> grid;
  for (int s = -100; s <= -60; ++s) grid.push_back(static_cast<double>(s));
  return grid;
}

}  // namespace

RunConfig parse_run_config_text(const std::string& text) {
  RunConfig config;
  std::vector<std::string> protocol_tokens = {"spr", "cmr", "orpl", "loadng"};
  std::optional<int> spr_hop_limit = 2;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key = value at line " + std::to_string(line_no));
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));

    if (key == "trace") {
      config.trace_path = value == "synth" ? "" : value;
    } else if (key == "seed") {
      config.seed = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "synth_duration_ms") {
      config.synth_duration_ms = to_int(key, value);
    } else if (key == "synth_mean_gain_db") {
      config.synth.defaults.mean_gain_db = to_double(key, value);
    } else if (key == "synth_autocorr") {
      config.synth.defaults.autocorr = to_double(key, value);
    } else if (key == "synth_innovation_std_db") {
      config.synth.defaults.innovation_std_db = to_double(key, value);
    } else if (key == "synth_family") {
      config.synth.defaults.family = parse_family(value);
    } else if (key == "synth_mean_jitter_db") {
      config.synth.mean_jitter_db = to_double(key, value);
    } else if (key == "sampling_period_ms") {
      config.sampling_period_ms = static_cast<int>(to_int(key, value));
    } else if (key == "window_period_ms") {
      config.window_period_ms = static_cast<int>(to_int(key, value));
    } else if (key == "n_bans") {
      config.n_bans = static_cast<int>(to_int(key, value));
    } else if (key == "network") {
      config.network_path = value;
    } else if (key == "tx_power_hub_dbm") {
      config.tx_power_hub_dbm = to_double(key, value);
    } else if (key == "tx_power_sensor_dbm") {
      config.tx_power_sensor_dbm = to_double(key, value);
    } else if (key == "protocols") {
      protocol_tokens = split(value, ',');
      if (protocol_tokens.empty()) throw ConfigError("protocols list is empty");
    } else if (key == "spr_hop_limit") {
      const auto limit = to_int(key, value);
      spr_hop_limit = limit <= 0 ? std::nullopt : std::optional<int>(static_cast<int>(limit));
    } else if (key == "flows") {
      config.flows.clear();
      for (const std::string& pair : split(value, ';')) {
        if (pair.empty()) continue;
        const auto gt = pair.find('>');
        if (gt == std::string::npos)
          throw ConfigError("flow '" + pair + "' must look like s>d");
        config.flows.emplace_back(
            static_cast<NodeId>(to_int(key, trimmed(pair.substr(0, gt)))),
            static_cast<NodeId>(to_int(key, trimmed(pair.substr(gt + 1)))));
      }
    } else if (key == "sensitivity_dbm") {
      config.sensitivity_dbm = to_double(key, value);
    } else if (key == "sensitivity_grid_dbm") {
      config.sensitivity_grid_dbm.clear();
      for (const std::string& v : split(value, ','))
        config.sensitivity_grid_dbm.push_back(to_double(key, v));
    } else if (key == "delivery_instant") {
      if (value == "every_sample")
        config.instant = DeliveryInstant::EverySample;
      else if (value == "window_start")
        config.instant = DeliveryInstant::WindowStart;
      else
        throw ConfigError("delivery_instant must be every_sample or window_start");
    } else if (key == "t_packet_ms") {
      config.energy.t_packet_ms = to_double(key, value);
    } else if (key == "p_tx_hub_mw") {
      config.energy.p_tx_hub_mw = to_double(key, value);
    } else if (key == "p_rx_hub_mw") {
      config.energy.p_rx_hub_mw = to_double(key, value);
    } else if (key == "p_tx_sensor_mw") {
      config.energy.p_tx_sensor_mw = to_double(key, value);
    } else if (key == "p_rx_sensor_mw") {
      config.energy.p_rx_sensor_mw = to_double(key, value);
    } else if (key == "p_idle_mw") {
      config.energy.p_idle_mw = to_double(key, value);
    } else if (key == "queue_wait_hub_ms") {
      config.delay.queue_wait_hub_ms = to_double(key, value);
    } else if (key == "queue_wait_cmr_hop_ms") {
      config.delay.queue_wait_cmr_hop_ms = to_double(key, value);
    } else if (key == "orpl_root") {
      config.orpl_root = value == "auto"
                             ? std::nullopt
                             : std::optional<NodeId>(static_cast<NodeId>(to_int(key, value)));
    } else if (key == "orpl_omega") {
      config.orpl_omega = to_double(key, value);
    } else if (key == "trickle_imin_ms") {
      config.trickle.i_min_ms = static_cast<int>(to_int(key, value));
    } else if (key == "trickle_imax_ms") {
      config.trickle.i_max_ms = static_cast<int>(to_int(key, value));
    } else if (key == "trickle_redundancy_k") {
      config.trickle.redundancy_k = static_cast<int>(to_int(key, value));
    } else if (key == "loadng_rht_ms") {
      config.loadng.rht_ms = static_cast<int>(to_int(key, value));
    } else if (key == "loadng_weight_offset_db") {
      config.loadng.weight_offset_db = to_double(key, value);
    } else if (key == "output_dir") {
      config.output_dir = value;
    } else if (key == "write_outcomes") {
      config.write_outcomes = to_bool(key, value);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  for (const std::string& token : protocol_tokens)
    config.protocols.push_back(parse_protocol(token, spr_hop_limit));
  if (config.sensitivity_grid_dbm.empty()) config.sensitivity_grid_dbm = default_grid();
  std::sort(config.sensitivity_grid_dbm.begin(), config.sensitivity_grid_dbm.end());

  if (config.window_period_ms <= 0 || config.sampling_period_ms <= 0 ||
      config.window_period_ms % config.sampling_period_ms != 0)
    throw ConfigError("window period must be a positive multiple of the sampling period");
  return config;
}

RunConfig parse_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config_text(buffer.str());
}

RunParams run_params_of(const RunConfig& config) {
  RunParams params;
  params.sensitivity_dbm = config.sensitivity_dbm;
  params.window_period_ms = config.window_period_ms;
  params.instant = config.instant;
  params.energy = config.energy;
  params.delay = config.delay;
  params.delay.sampling_period_ms = config.sampling_period_ms;
  params.orpl_root = config.orpl_root;
  params.orpl_omega = config.orpl_omega;
  params.trickle = config.trickle;
  params.trickle_seed = config.seed;
  params.loadng = config.loadng;
  return params;
}

Network network_of(const RunConfig& config) {
  if (!config.network_path.empty()) return load_network_json(config.network_path);
  return make_default_network(config.n_bans, config.tx_power_hub_dbm,
                              config.tx_power_sensor_dbm);
}

Network load_network_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open network file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad network JSON: " + std::string(e.what()));
  }
  try {
    std::vector<Ban> bans;
    for (const auto& jb : j.at("bans")) {
      Ban ban;
      ban.ban_id = jb.at("ban_id").get<int>();
      ban.hub = jb.at("hub").get<NodeId>();
      ban.sensors = jb.at("sensors").get<std::vector<NodeId>>();
      bans.push_back(std::move(ban));
    }
    std::map<NodeId, double> power;
    for (const auto& [node, dbm] : j.at("tx_power_dbm").items())
      power[static_cast<NodeId>(std::stol(node))] = dbm.get<double>();
    return Network(std::move(bans), std::move(power));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad network JSON: " + std::string(e.what()));
  }
}

std::vector<std::pair<NodeId, NodeId>> flows_of(const RunConfig& config,
                                                const Network& network) {
  if (!config.flows.empty()) return config.flows;
  std::vector<std::pair<NodeId, NodeId>> flows;
  for (NodeId s : network.hubs())
    for (NodeId d : network.hubs())
      if (s != d) flows.emplace_back(s, d);
  return flows;
}

FitFamily parse_fit_family(const std::string& name) {
  if (name == "gamma") return FitFamily::Gamma;
  if (name == "rician") return FitFamily::Rician;
  throw ConfigError("unknown fit family '" + name + "' (expected gamma or rician)");
}

}  // namespace bbnsim
