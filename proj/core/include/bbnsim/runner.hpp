#pragma once

#include <filesystem>
#include <iosfwd>

#include "bbnsim/config.hpp"

namespace bbnsim {

/// Run every configured protocol pipeline over the configured trace and
/// write outcomes_<proto>.csv, summary_<proto>.json, outage_<proto>.csv and
/// hops_<proto>.csv into the output directory (BBNSIM_OUTPUT_DIR overrides
/// the configured one). Deterministic for a fixed config and seed.
int cmd_run(const RunConfig& config, std::ostream& log);

/// Fit the requested family to a combined-gain file (single gain_db column,
/// or an outcomes CSV whose combined_gain_db column is used) and write
/// fit_<family>.json plus pdf_empirical.csv.
int cmd_fit(const std::filesystem::path& input, FitFamily family,
            const std::filesystem::path& out_dir, std::ostream& log);

/// Generate the configured synthetic trace and write it as a trace CSV.
int cmd_synth(const RunConfig& config, const std::filesystem::path& out_path,
              std::ostream& log);

}  // namespace bbnsim
