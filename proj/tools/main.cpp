// Batch entry point: run protocol comparisons over a trace, fit combined
// channel gain distributions, or generate synthetic traces.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bbnsim/config.hpp"
#include "bbnsim/errors.hpp"
#include "bbnsim/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Trace-driven routing simulator for coexisting body area networks"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run the configured protocol comparison");
  run->add_option("--config", config_path, "Run configuration file")->required();

  std::string fit_input, fit_family = "gamma", fit_out_dir = ".";
  auto* fit = app.add_subcommand("fit", "Fit a distribution to combined channel gains");
  fit->add_option("--input", fit_input, "Gains file (gain_db column or outcomes CSV)")
      ->required();
  fit->add_option("--family", fit_family, "gamma or rician");
  fit->add_option("--out-dir", fit_out_dir, "Output directory");

  std::string synth_config, synth_out;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic trace CSV");
  synth->add_option("--config", synth_config, "Run configuration file")->required();
  synth->add_option("--out", synth_out, "Output trace path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return bbnsim::cmd_run(bbnsim::parse_run_config(config_path), std::cout);
    }
    if (fit->parsed()) {
      return bbnsim::cmd_fit(fit_input, bbnsim::parse_fit_family(fit_family), fit_out_dir,
                             std::cout);
    }
    if (synth->parsed()) {
      return bbnsim::cmd_synth(bbnsim::parse_run_config(synth_config), synth_out, std::cout);
    }
  } catch (const bbnsim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
