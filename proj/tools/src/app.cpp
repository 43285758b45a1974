#include "opinfo_cli/app.hpp"

#include <fstream>

#include "CLI11.hpp"
#include "opinfo_cli/commands.hpp"

namespace opinfo::cli {

namespace {

struct SubcommandInfo {
  const char* name;
  const char* help;
};

constexpr SubcommandInfo kSubcommands[] = {
    {"rates", "Rate tables and information-content estimates for one source"},
    {"verify", "Run the property sweeps; exit 1 on any violation"},
    {"entropy-compare", "Measurement/decomposition entropy, accessible and state information"},
    {"fidelity-bounds", "Fidelity and the generalized Fuchs-van de Graaf chain"},
    {"steering-demo", "Steering certificate and the ensemble/dilation figure-of-merit comparison"},
};

void write_report(const ExperimentConfig& cfg, const CommandOutput& res, std::ostream& os) {
  if (cfg.format == "json") {
    write_json(os, cfg, res.rows);
  } else {
    write_csv(os, res.rows);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information content of states in operational probabilistic theories", "opinfo"};
  ExperimentConfig cfg;
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");
  app.add_option("--theory", cfg.theory, "classical:d, quantum:d or squit");
  app.add_option("--state", cfg.state, "pure, maxmixed, center, plus, diag:..., bloch:x,y,z, xy:x,y, coords:...");
  app.add_option("--state2", cfg.state2, "second state for fidelity-bounds (default maxmixed)");
  app.add_option("--family", cfg.family, "scheme family for rates")
      ->check(CLI::IsMember({"typical", "all_projective", "measure_prepare"}));
  app.add_option("--N", cfg.N, "block lengths, comma separated")->delimiter(',');
  app.add_option("--eps", cfg.eps, "error tolerances, comma separated")->delimiter(',');
  app.add_option("--seed", cfg.seed, "master seed");
  app.add_option("--restarts", cfg.restarts, "search restarts");
  app.add_option("--max-evals", cfg.max_evals, "objective evaluations per restart");
  app.add_option("--trials", cfg.trials, "trials per property sweep (0: defaults)");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--suite", cfg.suites, "verify: suites to run, comma separated")->delimiter(',');
  app.add_flag("--inject-fault", cfg.inject_fault, "verify: add a non-stochastic channel to the validity suite");
  for (const auto& s : kSubcommands) app.add_subcommand(s.name, s.help)->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    const CommandOutput res = dispatch(cfg);
    if (cfg.out.empty()) {
      write_report(cfg, res, out);
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw UsageError("cannot open '" + cfg.out + "' for writing");
      write_report(cfg, res, file);
    }
    for (const auto& n : res.notes) err << n << '\n';
    return res.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedFeature& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const UnsupportedComposition& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"opinfo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace opinfo::cli
