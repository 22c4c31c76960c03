#include "bbnsim/stats_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "bbnsim/errors.hpp"
#include "bbnsim/special_functions.hpp"
#include "bbnsim/trace.hpp"

namespace bbnsim {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kScoreTol = 1e-10;

}  // namespace

double gamma_log_likelihood(double shape, double scale, std::span<const double> samples) {
  double sum_log = 0.0, sum = 0.0;
  for (double x : samples) {
    sum_log += std::log(x);
    sum += x;
  }
  const double n = static_cast<double>(samples.size());
  return (shape - 1.0) * sum_log - sum / scale -
         n * (shape * std::log(scale) + std::lgamma(shape));
}

double rician_log_likelihood(double nu, double sigma, std::span<const double> samples) {
  const double sigma2 = sigma * sigma;
  double loglik = 0.0;
  for (double x : samples) {
    loglik += std::log(x) - std::log(sigma2) - (x * x + nu * nu) / (2.0 * sigma2) +
              log_bessel_i0(x * nu / sigma2);
  }
  return loglik;
}

FitResult fit_gamma(std::span<const double> samples) {
  if (samples.size() < 2) throw Error("gamma fit needs at least two samples");
  double sum = 0.0, sum_log = 0.0;
  for (double x : samples) {
    if (!(x > 0.0)) throw Error("gamma fit needs strictly positive samples");
    sum += x;
    sum_log += std::log(x);
  }
  const double n = static_cast<double>(samples.size());
  const double mean = sum / n;
  const double mean_log = sum_log / n;
  // Profile-likelihood target: ln(k) - digamma(k) = s, s >= 0 by Jensen
  // with equality only for constant data.
  const double s = std::log(mean) - mean_log;
  if (!(s > 1e-12)) throw DegenerateFitError("samples carry no shape information");

  // Minka-style starting point, then safeguarded Newton on the score.
  double shape = (3.0 - s + std::sqrt((s - 3.0) * (s - 3.0) + 24.0 * s)) / (12.0 * s);
  double lo = shape, hi = shape;
  auto score = [s](double k) { return std::log(k) - boost::math::digamma(k) - s; };
  while (score(lo) < 0.0) lo *= 0.5;
  while (score(hi) > 0.0) hi *= 2.0;

  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = score(shape);
    if (std::abs(f) < kScoreTol) break;
    if (f > 0.0)
      lo = std::max(lo, shape);
    else
      hi = std::min(hi, shape);
    const double deriv = 1.0 / shape - boost::math::trigamma(shape);
    double next = shape - f / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    shape = next;
  }

  FitResult result;
  result.family = FitFamily::Gamma;
  result.gamma = GammaParams{shape, mean / shape};
  result.loglik = gamma_log_likelihood(result.gamma.shape, result.gamma.scale, samples);
  result.n_samples = samples.size();
  return result;
}

FitResult fit_rician(std::span<const double> samples) {
  if (samples.size() < 2) throw Error("rician fit needs at least two samples");
  double sum = 0.0, sum_sq = 0.0;
  double min_x = std::numeric_limits<double>::infinity(), max_x = 0.0;
  for (double x : samples) {
    if (x < 0.0) throw Error("rician fit needs nonnegative samples");
    sum += x;
    sum_sq += x * x;
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
  }
  if (min_x == max_x) throw DegenerateFitError("samples carry no spread");
  const double n = static_cast<double>(samples.size());
  const double m1 = sum / n;
  const double m2 = sum_sq / n;  // E[x^2] = nu^2 + 2 sigma^2

  // Moment start: nu0^2 = max(2 m1^2 - m2, eps), sigma0^2 = (m2 - nu0^2)/2.
  const double nu0_sq = std::max(2.0 * m1 * m1 - m2, 1e-12 * m2);
  const double nu0 = std::sqrt(nu0_sq);
  const double sigma0 = std::sqrt(std::max((m2 - nu0_sq) / 2.0, 1e-12 * m2));

  // Score fixed point: nu <- mean(x R(x nu / sigma^2)) with R = I1/I0,
  // sigma^2 <- m2/2 - nu^2/2.
  double nu = nu0;
  double sigma2 = sigma0 * sigma0;
  for (int it = 0; it < kMaxIterations; ++it) {
    double acc = 0.0;
    for (double x : samples) acc += x * bessel_i1_over_i0(x * nu / sigma2);
    const double nu_next = acc / n;
    const double sigma2_next = std::max((m2 - nu_next * nu_next) / 2.0, 1e-15 * m2);
    const double step =
        std::abs(nu_next - nu) / std::sqrt(m2) + std::abs(sigma2_next - sigma2) / m2;
    nu = nu_next;
    sigma2 = sigma2_next;
    if (step < kScoreTol) break;
  }

  // Keep the best-likelihood candidate; the Rayleigh boundary covers data
  // with no line-of-sight component.
  struct Candidate {
    double nu, sigma;
  };
  const Candidate candidates[] = {
      {nu, std::sqrt(sigma2)},
      {nu0, sigma0},
      {0.0, std::sqrt(m2 / 2.0)},
  };
  FitResult result;
  result.family = FitFamily::Rician;
  result.loglik = -std::numeric_limits<double>::infinity();
  for (const Candidate& c : candidates) {
    const double ll = rician_log_likelihood(c.nu, c.sigma, samples);
    if (ll > result.loglik) {
      result.loglik = ll;
      result.rician = RicianParams{c.nu, c.sigma};
    }
  }
  result.n_samples = samples.size();
  return result;
}

HistogramDensity empirical_pdf(std::span<const double> samples, int n_bins) {
  if (samples.empty()) throw Error("histogram needs at least one sample");
  if (n_bins < 1) throw Error("histogram needs at least one bin");
  const auto [min_it, max_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *min_it, hi = *max_it;

  HistogramDensity hist;
  if (lo == hi) {
    // Degenerate span: one unit-mass bin around the value.
    hist.edges = {lo - 0.5, lo + 0.5};
    hist.density = {1.0};
    return hist;
  }

  const double width = (hi - lo) / n_bins;
  hist.edges.resize(n_bins + 1);
  for (int i = 0; i <= n_bins; ++i) hist.edges[i] = lo + width * i;
  hist.edges.back() = hi;

  std::vector<std::size_t> counts(n_bins, 0);
  for (double x : samples) {
    int bin = static_cast<int>((x - lo) / width);
    bin = std::clamp(bin, 0, n_bins - 1);  // max lands in the last bin
    ++counts[static_cast<std::size_t>(bin)];
  }
  hist.density.resize(n_bins);
  const double norm = static_cast<double>(samples.size()) * width;
  for (int i = 0; i < n_bins; ++i)
    hist.density[i] = static_cast<double>(counts[static_cast<std::size_t>(i)]) / norm;
  return hist;
}

std::vector<double> amplitudes_from_db(std::span<const double> gains_db, bool drop_sentinel) {
  std::vector<double> amplitudes;
  amplitudes.reserve(gains_db.size());
  for (double db : gains_db) {
    if (!std::isfinite(db)) continue;
    if (drop_sentinel && db <= kSentinelGainDb + 1e-9) continue;
    amplitudes.push_back(std::pow(10.0, db / 20.0));
  }
  return amplitudes;
}

}  // namespace bbnsim
