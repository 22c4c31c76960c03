#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bbnsim/metrics.hpp"
#include "bbnsim/stats_fit.hpp"

namespace bbnsim {

/// Shortest decimal form with at least 9 significant digits (12 by
/// default); used by every emitted file.
std::string format_sig(double value, int significant_digits = 12);

void write_outcomes_csv(const std::filesystem::path& path,
                        const std::vector<PacketOutcome>& outcomes);

void write_summary_json(const std::filesystem::path& path, const std::string& protocol_name,
                        const MetricsSummary& summary, double sensitivity_dbm,
                        int warmup_windows = 1);

void write_outage_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<double, double>>& curve);

void write_hops_csv(const std::filesystem::path& path, const MetricsSummary& summary);

void write_fit_json(const std::filesystem::path& path, const FitResult& fit);

void write_pdf_csv(const std::filesystem::path& path, const HistogramDensity& hist);

}  // namespace bbnsim
