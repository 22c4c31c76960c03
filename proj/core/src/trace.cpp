#include "bbnsim/trace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "bbnsim/errors.hpp"

namespace bbnsim {

namespace {

constexpr const char* kTraceHeader = "time_ms,tx,rx,gain_db";

std::string trimmed(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool is_nan_token(const std::string& s) {
  if (s.size() != 3) return false;
  return std::tolower(static_cast<unsigned char>(s[0])) == 'n' &&
         std::tolower(static_cast<unsigned char>(s[1])) == 'a' &&
         std::tolower(static_cast<unsigned char>(s[2])) == 'n';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ',')) fields.push_back(trimmed(cur));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::int64_t parse_int(const std::string& s, const char* what, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(std::string("bad ") + what + " field '" + s + "'", line);
  return value;
}

bool total_order(const GainSample& a, const GainSample& b) {
  return std::tie(a.time_ms, a.tx, a.rx) < std::tie(b.time_ms, b.tx, b.rx);
}

}  // namespace

ChannelTrace load_trace(const std::filesystem::path& path, const Network& network,
                        int sampling_period_ms) {
  if (sampling_period_ms <= 0) throw Error("sampling period must be positive");
  std::ifstream in(path);
  if (!in) throw Error("cannot open trace file " + path.string());

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw EmptyTraceError("trace file is empty: " + path.string());
  ++line_no;
  if (trimmed(line) != kTraceHeader)
    throw ParseError(std::string("expected header '") + kTraceHeader + "'", line_no);

  std::vector<GainSample> samples;
  std::int64_t max_time = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() != 4) throw ParseError("expected 4 fields", line_no);

    GainSample s;
    s.time_ms = parse_int(fields[0], "time_ms", line_no);
    if (s.time_ms < 0) throw ParseError("negative time_ms", line_no);
    if (s.time_ms % sampling_period_ms != 0)
      throw ParseError("time_ms not aligned to the sampling grid", line_no);
    s.tx = static_cast<NodeId>(parse_int(fields[1], "tx", line_no));
    s.rx = static_cast<NodeId>(parse_int(fields[2], "rx", line_no));
    if (s.tx == s.rx) throw SchemaError("self link at line " + std::to_string(line_no));
    if (!network.contains(s.tx) || !network.contains(s.rx))
      throw SchemaError("unknown node id at line " + std::to_string(line_no));

    const std::string& g = fields[3];
    if (g.empty() || is_nan_token(g)) {
      s.gain_db = kSentinelGainDb;
    } else {
      try {
        std::size_t used = 0;
        s.gain_db = std::stod(g, &used);
        if (used != g.size()) throw ParseError("bad gain_db field '" + g + "'", line_no);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError("bad gain_db field '" + g + "'", line_no);
      }
      if (!std::isfinite(s.gain_db)) s.gain_db = kSentinelGainDb;
    }

    max_time = std::max(max_time, s.time_ms);
    samples.push_back(s);
  }
  if (samples.empty()) throw EmptyTraceError("trace file has no samples: " + path.string());

  // Link-major pass: detect duplicates and fill absent grid points of every
  // observed link with the sentinel, so each link carries one sample per
  // period over the whole duration. Sorting beats set-based bookkeeping at
  // dataset scale (tens of millions of rows).
  std::sort(samples.begin(), samples.end(), [](const GainSample& a, const GainSample& b) {
    return std::tie(a.tx, a.rx, a.time_ms) < std::tie(b.tx, b.rx, b.time_ms);
  });
  const std::int64_t duration_ms = max_time + sampling_period_ms;
  const std::int64_t slots = duration_ms / sampling_period_ms;

  std::vector<GainSample> filled;
  std::size_t links = 0;
  for (std::size_t i = 0; i < samples.size();) {
    std::size_t j = i;
    while (j < samples.size() && samples[j].tx == samples[i].tx &&
           samples[j].rx == samples[i].rx)
      ++j;
    ++links;
    i = j;
  }
  filled.reserve(static_cast<std::size_t>(slots) * links);
  for (std::size_t i = 0; i < samples.size();) {
    const NodeId tx = samples[i].tx;
    const NodeId rx = samples[i].rx;
    std::int64_t expected = 0;
    for (; i < samples.size() && samples[i].tx == tx && samples[i].rx == rx; ++i) {
      if (i > 0 && samples[i - 1].tx == tx && samples[i - 1].rx == rx &&
          samples[i - 1].time_ms == samples[i].time_ms)
        throw SchemaError("duplicate sample for link " + std::to_string(tx) + "->" +
                          std::to_string(rx) + " at " +
                          std::to_string(samples[i].time_ms) + " ms");
      for (; expected < samples[i].time_ms; expected += sampling_period_ms)
        filled.push_back(GainSample{expected, tx, rx, kSentinelGainDb});
      filled.push_back(samples[i]);
      expected = samples[i].time_ms + sampling_period_ms;
    }
    for (; expected < duration_ms; expected += sampling_period_ms)
      filled.push_back(GainSample{expected, tx, rx, kSentinelGainDb});
  }
  std::sort(filled.begin(), filled.end(), total_order);
  return ChannelTrace{network, std::move(filled), sampling_period_ms, duration_ms};
}

void write_trace(const ChannelTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << kTraceHeader << '\n';
  std::vector<GainSample> ordered = trace.samples;
  std::sort(ordered.begin(), ordered.end(), total_order);
  char buf[64];
  for (const auto& s : ordered) {
    std::snprintf(buf, sizeof(buf), "%.17g", s.gain_db);
    out << s.time_ms << ',' << s.tx << ',' << s.rx << ',' << buf << '\n';
  }
  if (!out) throw Error("write failed for " + path.string());
}

std::vector<TimestampWindow> window(const ChannelTrace& trace, int period_ms) {
  if (period_ms <= 0 || period_ms % trace.sampling_period_ms != 0)
    throw Error("window period must be a positive multiple of the sampling period");
  if (trace.duration_ms <= 0) return {};

  const int n_windows =
      static_cast<int>((trace.duration_ms + period_ms - 1) / period_ms);
  std::vector<TimestampWindow> windows(n_windows);
  for (int i = 0; i < n_windows; ++i) {
    windows[i].index = i;
    windows[i].start_ms = static_cast<std::int64_t>(i) * period_ms;
    windows[i].period_ms = period_ms;
    windows[i].sampling_period_ms = trace.sampling_period_ms;
  }
  // Samples are sorted by time, so per-link vectors fill in slot order.
  for (const auto& s : trace.samples) {
    auto& w = windows[static_cast<std::size_t>(s.time_ms / period_ms)];
    w.link_samples[{s.tx, s.rx}].push_back(s.gain_db);
  }
  return windows;
}

std::optional<double> MapGainSource::at(NodeId tx, NodeId rx) const {
  auto it = gains_->find({tx, rx});
  if (it == gains_->end()) return std::nullopt;
  return it->second;
}

std::optional<double> WindowSlotSource::at(NodeId tx, NodeId rx) const {
  auto it = window_->link_samples.find({tx, rx});
  if (it == window_->link_samples.end() || slot_ >= it->second.size())
    return std::nullopt;
  return it->second[slot_];
}

std::optional<double> ReceivedPowerSource::at(NodeId tx, NodeId rx) const {
  auto g = gains_->at(tx, rx);
  if (!g) return std::nullopt;
  return *g + network_->tx_power_dbm(tx);
}

}  // namespace bbnsim
