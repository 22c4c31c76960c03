#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bbnsim {

enum class FitFamily { Gamma, Rician };

struct GammaParams {
  double shape = 0.0;  // kappa
  double scale = 0.0;  // theta
};

struct RicianParams {
  double nu = 0.0;
  double sigma = 0.0;
};

struct FitResult {
  FitFamily family = FitFamily::Gamma;
  GammaParams gamma;    // valid when family == Gamma
  RicianParams rician;  // valid when family == Rician
  double loglik = 0.0;
  std::size_t n_samples = 0;
};

double gamma_log_likelihood(double shape, double scale, std::span<const double> samples);
double rician_log_likelihood(double nu, double sigma, std::span<const double> samples);

/// Gamma MLE via the profile likelihood: safeguarded Newton on
/// ln(k) - digamma(k) = ln(mean) - mean(ln x), then scale = mean / k.
/// Throws DegenerateFitError when the samples carry no shape information
/// (all equal) and Error on non-positive samples.
FitResult fit_gamma(std::span<const double> samples);

/// Rician MLE: moment initialization followed by the score fixed point
/// nu <- mean(x * I1/I0(x*nu/sigma^2)), sigma^2 <- mean(x^2)/2 - nu^2/2,
/// keeping the best-likelihood candidate (the Rayleigh boundary included).
FitResult fit_rician(std::span<const double> samples);

struct HistogramDensity {
  std::vector<double> edges;    // n_bins + 1 ascending edges
  std::vector<double> density;  // integrates to one
};

HistogramDensity empirical_pdf(std::span<const double> samples, int n_bins);

/// dB gains to linear amplitudes (10^(db/20)); sentinel-valued censoring
/// artifacts and non-finite entries are dropped when requested.
std::vector<double> amplitudes_from_db(std::span<const double> gains_db,
                                       bool drop_sentinel = true);

}  // namespace bbnsim
