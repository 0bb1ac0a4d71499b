#include "exo/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int fail_config(const std::string& what) {
  std::cerr << exo::tool_name << ": " << what << "\n";
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Russell domains and the B(n,e,Q) class"};
  app.set_version_flag("--version", exo::tool_version);
  std::string command, config_path, format = "json", out_path;
  std::optional<std::uint64_t> seed;
  app.add_option("command", command, "command to run")->required()->check(CLI::IsMember(exo::commands));
  app.add_option("--config", config_path, "config JSON")->required();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--seed", seed, "overrides the config seed");
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ifstream in(config_path);
  if (!in)
    return fail_config("cannot read " + config_path);
  std::stringstream text;
  text << in.rdbuf();

  exo::Report report;
  std::string output;
  try {
    exo::RunConfig cfg = exo::parse_config_text(text.str(), command);
    if (seed)
      cfg.seed = *seed;
    if (out_path.empty() && cfg.output)
      out_path = *cfg.output;
    report = exo::run(cfg);
  } catch (const exo::Error& e) {
    return fail_config(e.what());
  }

  output = exo::emit_report(report, format == "text" ? exo::ReportFormat::text : exo::ReportFormat::json);
  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path);
    out << output;
    if (!out) {
      std::cerr << exo::tool_name << ": cannot write " << out_path << "\n";
      return 2;
    }
  }
  return report.exit_status();
}
