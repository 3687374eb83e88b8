// Apache License, Version 2.0, refer to LICENSE.txt

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "stochcond/errors.hpp"
#include "stochcond/experiment.hpp"

using namespace stochcond;

namespace {

struct Settings {
  std::string config_file;
  std::map<std::string, std::string> flags;
};

void add_setting_flags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--config", s.config_file, "key = value configuration file");
  for (const std::string& key : known_settings()) {
    cmd->add_option_function<std::string>(
        "--" + key, [&s, key](const std::string& v) { s.flags[key] = v; }, "override '" + key + "'");
  }
}

// File settings first, then flags on top.
ExperimentConfig build_config(const Settings& s, bool& has_study) {
  ExperimentConfig config;
  has_study = false;
  if (!s.config_file.empty()) {
    for (const auto& [k, v] : read_config_file(s.config_file)) {
      apply_setting(config, k, v);
      if (k == "study") has_study = true;
    }
  }
  for (const auto& [k, v] : s.flags) {
    apply_setting(config, k, v);
    if (k == "study") has_study = true;
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic conditioning experiments"};
  app.require_subcommand(1);

  Settings run_settings, validate_settings;
  CLI::App* run = app.add_subcommand("run", "run an experiment and write draws and summary");
  add_setting_flags(run, run_settings);
  CLI::App* val = app.add_subcommand("validate", "check a configuration without running it");
  add_setting_flags(val, validate_settings);
  CLI::App* golden = app.add_subcommand("golden", "golden data files");
  golden->require_subcommand(1);
  std::string golden_dir = "golden";
  CLI::App* regen = golden->add_subcommand("regenerate", "rewrite the golden datasets");
  regen->add_option("--dir", golden_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run) {
      bool has_study = false;
      const ExperimentConfig config = build_config(run_settings, has_study);
      if (!has_study) {
        std::cerr << "error: missing required flag --study\n";
        return 2;
      }
      const ExperimentResult result = run_experiment(config);
      const std::string dir = write_outputs(config, result);
      std::cout << "wrote " << dir << "\n";
      return 0;
    }
    if (*val) {
      bool has_study = false;
      const ExperimentConfig config = build_config(validate_settings, has_study);
      const auto violations = validate(config);
      for (const auto& v : violations) std::cout << v << "\n";
      if (violations.empty()) std::cout << "ok\n";
      return violations.empty() ? 0 : 2;
    }
    if (*regen) {
      for (const auto& path : regenerate_golden(golden_dir)) std::cout << "wrote " << path << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
