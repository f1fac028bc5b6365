#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace mec::cli;

  CLI::App app{"Near-minimum-entropy couplings of discrete distributions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MEC_VERSION);

  Options opt;
  std::string input;
  std::string coupling;
  std::size_t trunc = 0;
  double eps = 0.0;
  double alpha = 0.0;
  std::string out_path;

  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "Renyi order for entropy reports (inf allowed)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* glb = app.add_subcommand("glb", "Greatest lower bound of a collection under majorization");
  glb->add_option("input", input, "Collection file")->required();
  add_alpha(glb);

  auto* couple = app.add_subcommand("couple", "Build a coupling of a collection");
  couple->add_option("input", input, "Collection file")->required();
  couple->add_option("--trunc", trunc, "Stop each Bernoulli split after L sticks")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  couple->add_option("--eps", eps, "Residual at which Bernoulli splits stop");
  couple->add_option("--out", out_path, "Write the coupling here (default: stdout)");
  add_alpha(couple);

  auto* sample = app.add_subcommand("sample", "Draw correlated samples from a coupling file");
  sample->add_option("coupling", coupling, "Coupling file")->required();
  sample->add_option("--seed", opt.seed, "64-bit seed");
  sample->add_option("--count", opt.count, "Number of draws");

  auto* verify = app.add_subcommand("verify", "Check a coupling file against its inputs");
  verify->add_option("coupling", coupling, "Coupling file")->required();
  verify->add_option("input", input, "Collection file")->required();
  add_alpha(verify);

  auto* causal = app.add_subcommand("causal", "Entropic causal direction score for a joint table");
  causal->add_option("joint", input, "Joint table file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  for (auto* cmd : {glb, couple, verify}) {
    if (cmd->parsed() && cmd->count("--alpha")) opt.alpha = alpha;
  }
  if (couple->count("--trunc")) opt.trunc = trunc;
  if (couple->count("--eps")) opt.eps = eps;
  if (couple->count("--out")) opt.out = out_path;

  if (glb->parsed()) return cmd_glb(input, opt, std::cout, std::cerr);
  if (couple->parsed()) return cmd_couple(input, opt, std::cout, std::cerr);
  if (sample->parsed()) return cmd_sample(coupling, opt, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(coupling, input, opt, std::cout, std::cerr);
  if (causal->parsed()) return cmd_causal(input, opt, std::cout, std::cerr);
  return kExitInput;
}
