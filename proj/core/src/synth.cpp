#include "bbnsim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/non_central_chi_squared.hpp>

#include "bbnsim/errors.hpp"

namespace bbnsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t link_seed(std::uint64_t seed, NodeId tx, NodeId rx) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(tx)));
  h = splitmix64(h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(rx)) << 32));
  return h;
}

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Amplitude quantile for the configured family; u is clamped away from the
// endpoints so the quantiles stay finite.
double amplitude_quantile(const SynthLinkParams& p, double u) {
  constexpr double eps = 1e-12;
  u = std::clamp(u, eps, 1.0 - eps);
  switch (p.family) {
    case SynthFamily::Gamma: {
      boost::math::gamma_distribution<double> dist(p.gamma_shape, p.gamma_scale);
      return boost::math::quantile(dist, u);
    }
    case SynthFamily::Rician: {
      const double lambda = (p.rician_nu / p.rician_sigma) * (p.rician_nu / p.rician_sigma);
      boost::math::non_central_chi_squared_distribution<double> dist(2.0, lambda);
      return p.rician_sigma * std::sqrt(boost::math::quantile(dist, u));
    }
    case SynthFamily::LogNormalDb:
      break;
  }
  throw Error("amplitude_quantile: unexpected family");
}

void validate(const SynthLinkParams& p) {
  if (p.autocorr < 0.0 || p.autocorr >= 1.0)
    throw Error("autocorrelation must lie in [0, 1)");
  if (p.innovation_std_db < 0.0) throw Error("innovation std-dev must be nonnegative");
  if (p.family == SynthFamily::Gamma && (p.gamma_shape <= 0.0 || p.gamma_scale <= 0.0))
    throw Error("gamma family needs positive shape and scale");
  if (p.family == SynthFamily::Rician && (p.rician_nu < 0.0 || p.rician_sigma <= 0.0))
    throw Error("rician family needs nu >= 0 and sigma > 0");
}

}  // namespace

ChannelTrace generate_synthetic(const Network& network, std::int64_t duration_ms,
                                std::uint64_t seed, const SynthModel& model,
                                int sampling_period_ms) {
  if (sampling_period_ms <= 0) throw Error("sampling period must be positive");
  if (duration_ms < kDefaultWindowPeriodMs)
    throw Error("duration must cover at least one timestamp window");
  validate(model.defaults);
  for (const auto& [link, params] : model.overrides) {
    (void)link;
    validate(params);
  }

  // Directed links the protocols can use: hub-hub, hub-sensor, sensor-hub.
  std::vector<LinkId> links;
  for (NodeId a : network.hubs()) {
    for (NodeId b : network.hubs())
      if (a != b) links.push_back({a, b});
    for (const Ban& ban : network.bans()) {
      for (NodeId s : ban.sensors) {
        links.push_back({a, s});
        links.push_back({s, a});
      }
    }
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());

  const std::int64_t slots = duration_ms / sampling_period_ms;
  ChannelTrace trace{network, {}, sampling_period_ms, duration_ms};
  trace.samples.reserve(static_cast<std::size_t>(slots) * links.size());

  for (const LinkId& link : links) {
    auto ov = model.overrides.find(link);
    const SynthLinkParams& p = ov != model.overrides.end() ? ov->second : model.defaults;

    std::mt19937_64 rng(link_seed(seed, link.first, link.second));
    std::uniform_real_distribution<double> jitter(-model.mean_jitter_db,
                                                  model.mean_jitter_db);
    const double mean_db =
        p.mean_gain_db + (model.mean_jitter_db > 0.0 ? jitter(rng) : 0.0);

    // Standardized AR(1) latent series with unit stationary variance.
    std::normal_distribution<double> normal(0.0, 1.0);
    const double phi = p.autocorr;
    const double innov_scale = std::sqrt(1.0 - phi * phi);
    const double stationary_std =
        phi < 1.0 ? p.innovation_std_db / std::sqrt(1.0 - phi * phi) : 0.0;

    double z = normal(rng);
    for (std::int64_t k = 0; k < slots; ++k) {
      if (k > 0) z = phi * z + innov_scale * normal(rng);
      double gain_db;
      if (p.family == SynthFamily::LogNormalDb) {
        gain_db = mean_db + stationary_std * z;
      } else {
        const double amplitude = amplitude_quantile(p, std_normal_cdf(z));
        gain_db = 20.0 * std::log10(amplitude);
      }
      trace.samples.push_back(GainSample{k * sampling_period_ms, link.first,
                                         link.second, gain_db});
    }
  }

  std::sort(trace.samples.begin(), trace.samples.end(),
            [](const GainSample& a, const GainSample& b) {
              return std::tie(a.time_ms, a.tx, a.rx) < std::tie(b.time_ms, b.tx, b.rx);
            });
  return trace;
}

}  // namespace bbnsim
