#include <iostream>

#include <CLI11.hpp>

#include "sigmak/cli.hpp"

namespace cli = sigmak::cli;

int main(int argc, char** argv) {
  CLI::App app{"Certify convexity of general inverse sigma_k level sets"};
  app.require_subcommand(1);

  cli::CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits", common.digits, "decimal digits in chain approximations")->check(CLI::Range(0, 60));
    auto* fl = sub->add_flag("--float", common.float_mode, "round coefficients to double (numeric, not a certificate)");
    sub->add_flag("--exact", "exact rational arithmetic (default)")->excludes(fl);
    sub->add_flag("--timings", common.timings, "append per-phase timings to the report");
  };

  std::string input = "-", other, point;
  int rc = cli::kExitOk;

  auto* certify = app.add_subcommand("certify", "certify strict stability of an equation");
  certify->add_option("input", input, "equation JSON file, or - for stdin");
  add_common(certify);

  auto* dominance = app.add_subcommand("dominance", "test whether g dominates f");
  dominance->add_option("g", input, "dominating candidate")->required();
  dominance->add_option("f", other, "reference equation")->required();
  add_common(dominance);

  auto* membership = app.add_subcommand("membership", "nested cone membership of a point");
  membership->add_option("input", input, "equation JSON file")->required();
  membership->add_option("point", point, "comma separated or JSON array")->required();
  add_common(membership);

  cli::AlphaArgs alpha_args;
  auto* alpha = app.add_subcommand("alpha", "sample the log-concavity ratio of the diagonal restriction");
  alpha->add_option("input", input, "equation JSON, or {\"poly\": [...]}");
  alpha->add_option("--range", alpha_args.range, "a:b");
  alpha->add_option("--samples", alpha_args.samples, "grid size");
  alpha->add_option("--csv", alpha_args.csv, "write x,alpha rows here");
  add_common(alpha);

  cli::DeformArgs deform_args;
  auto* deform = app.add_subcommand("deform", "alpha along the top-root deformation family");
  deform->add_option("input", input, "equation JSON, or {\"poly\": [...]}");
  deform->add_option("--y-count", deform_args.y_count, "grid points in (x_m, x_0]");
  deform->add_option("--x-max", deform_args.x_max, "right end of each curve");
  deform->add_option("--samples", deform_args.samples, "x samples per curve");
  deform->add_option("--csv", deform_args.csv, "write x,y,alpha rows here");
  add_common(deform);

  cli::PresetArgs preset_args;
  auto* preset = app.add_subcommand("preset", "emit a named equation as JSON");
  preset->add_option("name", preset_args.name, "monge-ampere | j-equation | hessian | nonneg | guan-zhang | dhym")->required();
  preset->add_option("params", preset_args.params, "n followed by preset parameters");
  preset->add_option("--top", preset_args.top, "top coefficient for nonneg / guan-zhang");
  preset->add_option("--precision", preset_args.precision, "significant digits for dhym coefficients");

  int count = 100;
  auto* sample = app.add_subcommand("sample", "seeded points of the region (SIGMAK_SEED)");
  sample->add_option("input", input, "equation JSON file");
  sample->add_option("--count", count, "number of points");
  add_common(sample);

  int pairs = 1000;
  auto* convexity = app.add_subcommand("convexity", "midpoint convexity test (SIGMAK_SEED)");
  convexity->add_option("input", input, "equation JSON file");
  convexity->add_option("--pairs", pairs, "number of sampled pairs");
  add_common(convexity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  if (*certify) rc = cli::cmd_certify(input, common, std::cout, std::cerr);
  else if (*dominance) rc = cli::cmd_dominance(input, other, common, std::cout, std::cerr);
  else if (*membership) rc = cli::cmd_membership(input, point, common, std::cout, std::cerr);
  else if (*alpha) rc = cli::cmd_alpha(input, alpha_args, common, std::cout, std::cerr);
  else if (*deform) rc = cli::cmd_deform(input, deform_args, common, std::cout, std::cerr);
  else if (*preset) rc = cli::cmd_preset(preset_args, std::cout, std::cerr);
  else if (*sample) rc = cli::cmd_sample(input, count, common, std::cout, std::cerr);
  else if (*convexity) rc = cli::cmd_convexity(input, pairs, common, std::cout, std::cerr);
  return rc;
}
