#include "bbnsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "bbnsim/errors.hpp"

namespace bbnsim {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

nlohmann::json curve_json(const std::vector<std::pair<double, double>>& curve) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [threshold, probability] : curve)
    j.push_back({{"sensitivity_dbm", threshold}, {"probability", probability}});
  return j;
}

}  // namespace

std::string format_sig(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
  return buf;
}

void write_outcomes_csv(const std::filesystem::path& path,
                        const std::vector<PacketOutcome>& outcomes) {
  auto out = open_out(path);
  out << "window_index,time_ms,s,d,success,combined_gain_db,delay_ms,energy_mj,"
         "hop_count,retransmitted,route_kind\n";
  for (const PacketOutcome& o : outcomes) {
    out << o.window_index << ',' << o.time_ms << ',' << o.s << ',' << o.d << ','
        << (o.success ? 1 : 0) << ',' << format_sig(o.combined_gain_db) << ','
        << format_sig(o.delay_ms) << ',' << format_sig(o.energy_mj) << ','
        << o.hop_count << ',' << (o.retransmitted ? 1 : 0) << ','
        << to_string(o.route_kind) << '\n';
  }
  if (!out) throw Error("write failed for " + path.string());
}

void write_summary_json(const std::filesystem::path& path, const std::string& protocol_name,
                        const MetricsSummary& summary, double sensitivity_dbm,
                        int warmup_windows) {
  nlohmann::json j;
  j["protocol"] = protocol_name;
  j["sensitivity_dbm"] = sensitivity_dbm;
  j["n_outcomes"] = summary.n_outcomes;
  j["n_windows"] = summary.n_windows;
  j["n_flows"] = summary.n_flows;
  j["warmup_windows"] = warmup_windows;
  j["success_rate"] = summary.success_rate;
  j["throughput_pps"] = summary.throughput_pps;
  j["delay_avg_ms"] = summary.delay_avg_ms;
  j["delay_max_ms"] = summary.delay_max_ms;
  j["energy_avg_mj"] = summary.energy_avg_mj;
  j["energy_max_mj"] = summary.energy_max_mj;
  j["no_route_fraction"] = summary.no_route_fraction;
  j["retransmit_fraction"] = summary.retransmit_fraction;
  nlohmann::json hops = nlohmann::json::object();
  for (const auto& [count, fraction] : summary.hop_histogram)
    hops[std::to_string(count)] = fraction;
  j["hop_histogram"] = hops;
  j["outage_curve"] = curve_json(summary.outage_curve);

  auto out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("write failed for " + path.string());
}

void write_outage_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<double, double>>& curve) {
  auto out = open_out(path);
  out << "sensitivity_dbm,outage_probability\n";
  for (const auto& [threshold, probability] : curve)
    out << format_sig(threshold) << ',' << format_sig(probability) << '\n';
  if (!out) throw Error("write failed for " + path.string());
}

void write_hops_csv(const std::filesystem::path& path, const MetricsSummary& summary) {
  auto out = open_out(path);
  out << "hops,fraction\n";
  for (const auto& [count, fraction] : summary.hop_histogram)
    out << count << ',' << format_sig(fraction) << '\n';
  out << "no_route," << format_sig(summary.no_route_fraction) << '\n';
  if (!out) throw Error("write failed for " + path.string());
}

void write_fit_json(const std::filesystem::path& path, const FitResult& fit) {
  nlohmann::json j;
  if (fit.family == FitFamily::Gamma) {
    j["family"] = "gamma";
    j["params"] = {{"shape", fit.gamma.shape}, {"scale", fit.gamma.scale}};
  } else {
    j["family"] = "rician";
    j["params"] = {{"nu", fit.rician.nu}, {"sigma", fit.rician.sigma}};
  }
  j["loglik"] = fit.loglik;
  j["n_samples"] = fit.n_samples;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("write failed for " + path.string());
}

void write_pdf_csv(const std::filesystem::path& path, const HistogramDensity& hist) {
  auto out = open_out(path);
  out << "bin_left,bin_right,density\n";
  for (std::size_t i = 0; i < hist.density.size(); ++i)
    out << format_sig(hist.edges[i]) << ',' << format_sig(hist.edges[i + 1]) << ','
        << format_sig(hist.density[i]) << '\n';
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace bbnsim
