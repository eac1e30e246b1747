#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orbitlab/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"orbitlab: exact-arithmetic orbit, height, and prime-divisor tables "
               "for self-maps of projective space over Q"};
  app.require_subcommand(1);

  struct CommandSpec {
    const char* name;
    const char* help;
  };
  constexpr CommandSpec commands[] = {
      {"orbit", "orbit points and their naive heights"},
      {"heights", "per-target heights along the orbit"},
      {"alpha", "height growth-rate estimators"},
      {"ratio", "target height over naive height (first target)"},
      {"ppd", "primitive prime divisors of F along the orbit (F = first generator)"},
      {"bsum", "window sums of new-prime local heights (F = first generator)"},
      {"mult", "largest backward multiplicity per step (P^1 maps)"},
      {"dml-probe", "push the orbit through a form pair and track image heights"},
  };

  std::string config_path;
  std::string out_override;
  std::string cache_override;
  long long n_max_override = -1;
  long long window_override = -1;
  bool factor_flag = false;
  bool cache_set = false;

  for (const CommandSpec& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "JSON experiment config")->required();
    sub->add_option("--n-max", n_max_override, "override n_max");
    sub->add_option("--out", out_override, "override output CSV path");
    sub->add_option("--cache", cache_override, "override orbit cache path");
    sub->add_option("--l", window_override, "override the bsum window l");
    sub->add_flag("--factor", factor_flag, "ppd: attempt full prime listings");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  cache_set = sub->count("--cache") > 0;

  try {
    orbitlab::ExperimentConfig cfg = orbitlab::ExperimentConfig::load(config_path);
    if (n_max_override >= 0) cfg.n_max = static_cast<unsigned>(n_max_override);
    if (!out_override.empty()) cfg.output = out_override;
    if (cache_set) cfg.cache = cache_override;
    if (window_override >= 0) cfg.window = static_cast<unsigned>(window_override);
    if (factor_flag) cfg.factor = true;
    return orbitlab::run_command(sub->get_name(), cfg);
  } catch (const std::exception& e) {
    std::cerr << "orbitlab: " << e.what() << '\n';
    return 1;
  }
}
