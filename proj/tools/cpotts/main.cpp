#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cpotts/errors.hpp"
#include "cpotts/suite.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chiral Potts and cyclic hypergeometric identity verifier"};
  app.require_subcommand(1);

  cpotts::SuiteConfig config;
  std::string k_text = "0.6";
  std::string format = "json";
  std::string out_path;
  double tol = 0.0;
  std::vector<std::string> identities;

  CLI::App* verify = app.add_subcommand("verify", "Run seeded identity trials and emit a report");
  verify->add_option("--N", config.N, "Root of unity order")->capture_default_str();
  verify->add_option("--k", k_text, "Curve modulus as re[,im]")->capture_default_str();
  verify->add_option("--L", config.L, "Chain length for transfer matrices")->capture_default_str();
  verify->add_option("--trials", config.trials, "Trials per identity")->capture_default_str();
  verify->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  CLI::Option* tol_opt = verify->add_option("--tol", tol, "Override every identity tolerance");
  verify->add_option("--identity", identities, "Identity name, repeatable, or 'all'");
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  verify->add_option("--out", out_path, "Report path (default stdout)");
  verify->add_option("--threads", config.threads, "Worker threads, 0 = hardware")->capture_default_str();

  verify->add_flag_callback("--list", [] {
    for (const std::string& name : cpotts::registered_identities()) std::cout << name << '\n';
    std::exit(0);
  }, "Print registered identity names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    config.k = cpotts::parse_complex(k_text);
    if (*tol_opt) config.tol = tol;
    if (!identities.empty()) config.identities = identities;
    config.format = format == "text" ? cpotts::OutputFormat::Text : cpotts::OutputFormat::Json;
    cpotts::validate_config(config);
  } catch (const cpotts::InputError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }

  const cpotts::VerificationReport report = cpotts::run_suite(config);
  const std::string body = config.format == cpotts::OutputFormat::Json ? cpotts::report_json(report)
                                                                      : cpotts::report_text(report);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << '\n';
      return kExitConfig;
    }
    out << body;
  }
  return report.all_pass() ? 0 : kExitFailure;
}
