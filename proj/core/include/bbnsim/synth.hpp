#pragma once

#include <cstdint>
#include <map>

#include "bbnsim/trace.hpp"

namespace bbnsim {

/// Marginal distribution of the stationary channel amplitude.
enum class SynthFamily { LogNormalDb, Gamma, Rician };

struct SynthLinkParams {
  double mean_gain_db = -75.0;     // stationary mean of the dB series (LogNormalDb)
  double autocorr = 0.9;           // lag-1 coefficient of the latent AR(1), in [0, 1)
  double innovation_std_db = 3.0;  // innovation std-dev of the dB AR(1)
  SynthFamily family = SynthFamily::LogNormalDb;
  // Amplitude-domain parameters, used when family != LogNormalDb.
  double gamma_shape = 9.58;
  double gamma_scale = 3.34e-6;
  double rician_nu = 6.26e-5;
  double rician_sigma = 1.85e-5;
};

struct SynthModel {
  SynthLinkParams defaults;
  std::map<LinkId, SynthLinkParams> overrides;
  /// Per-link uniform offset in [-jitter, +jitter] applied to mean_gain_db,
  /// drawn once per link from the trace seed.
  double mean_jitter_db = 0.0;
};

/// Deterministic synthetic trace: a first-order autoregressive process in
/// the dB domain per directed link (hub-hub, hub-sensor and sensor-hub
/// links). For the Gamma and Rician families the AR(1) drives a Gaussian
/// copula whose marginal is mapped to the requested amplitude distribution;
/// the configured autocorrelation then applies to the latent series.
ChannelTrace generate_synthetic(const Network& network, std::int64_t duration_ms,
                                std::uint64_t seed, const SynthModel& model,
                                int sampling_period_ms = kDefaultSamplingPeriodMs);

}  // namespace bbnsim
