#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bbnsim/network.hpp"

namespace bbnsim {

/// Stand-in gain for undecodable or missing samples, just below the
/// -100 dBm receiver sensitivity.
inline constexpr double kSentinelGainDb = -101.0;

inline constexpr int kDefaultSamplingPeriodMs = 50;
inline constexpr int kDefaultWindowPeriodMs = 500;

using LinkId = std::pair<NodeId, NodeId>;  // (tx, rx)

struct GainSample {
  std::int64_t time_ms = 0;
  NodeId tx = 0;
  NodeId rx = 0;
  double gain_db = 0.0;

  friend bool operator==(const GainSample&, const GainSample&) = default;
};

/// Time-indexed channel gains for a fixed population. After ingestion every
/// link present in the trace has one finite sample per sampling period over
/// the whole duration (gaps are filled with the sentinel).
struct ChannelTrace {
  Network network;
  std::vector<GainSample> samples;  // sorted by (time_ms, tx, rx)
  int sampling_period_ms = kDefaultSamplingPeriodMs;
  std::int64_t duration_ms = 0;
};

/// One routing-table period worth of samples, grouped per directed link.
/// Sample vectors are slot-aligned: element k was taken at
/// start_ms + k * sampling_period_ms.
struct TimestampWindow {
  int index = 0;
  std::int64_t start_ms = 0;
  int period_ms = kDefaultWindowPeriodMs;
  int sampling_period_ms = kDefaultSamplingPeriodMs;
  std::map<LinkId, std::vector<double>> link_samples;
};

/// Read a trace from the CSV schema `time_ms,tx,rx,gain_db`. A literal NaN
/// (any case) or an empty gain field marks a missing sample and is replaced
/// by the sentinel; so is any non-finite parsed value. Rows must be aligned
/// to the sampling grid; absent grid points of a link seen anywhere in the
/// file are filled with the sentinel.
ChannelTrace load_trace(const std::filesystem::path& path, const Network& network,
                        int sampling_period_ms = kDefaultSamplingPeriodMs);

/// Inverse of load_trace for normalized traces (canonical row order,
/// round-trippable float formatting).
void write_trace(const ChannelTrace& trace, const std::filesystem::path& path);

/// Partition a trace into consecutive windows of `period_ms`. Every sample
/// lands in exactly one window by floor(time / period).
std::vector<TimestampWindow> window(const ChannelTrace& trace,
                                    int period_ms = kDefaultWindowPeriodMs);

/// Read access to the channel at one instant; implementations decide where
/// the numbers come from (an explicit map, a window slot, ...).
class GainSource {
 public:
  virtual ~GainSource() = default;
  /// Channel value for the directed link, or nullopt when never observed.
  virtual std::optional<double> at(NodeId tx, NodeId rx) const = 0;
};

class MapGainSource final : public GainSource {
 public:
  explicit MapGainSource(const std::map<LinkId, double>& gains) : gains_(&gains) {}
  std::optional<double> at(NodeId tx, NodeId rx) const override;

 private:
  const std::map<LinkId, double>* gains_;
};

/// One sampling slot of a window.
class WindowSlotSource final : public GainSource {
 public:
  WindowSlotSource(const TimestampWindow& w, std::size_t slot)
      : window_(&w), slot_(slot) {}
  std::optional<double> at(NodeId tx, NodeId rx) const override;

 private:
  const TimestampWindow* window_;
  std::size_t slot_;
};

/// Adapts a gain source to received power: value + tx power of the sender.
class ReceivedPowerSource final : public GainSource {
 public:
  ReceivedPowerSource(const GainSource& gains, const Network& network)
      : gains_(&gains), network_(&network) {}
  std::optional<double> at(NodeId tx, NodeId rx) const override;

 private:
  const GainSource* gains_;
  const Network* network_;
};

}  // namespace bbnsim
