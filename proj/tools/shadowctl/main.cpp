#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "shadow/error.hpp"

namespace {

using shadow::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& rc, std::string& point, std::string& mode) {
  sub->add_option("--point", point, "Observation point x,y[,z]");
  sub->add_option("--mode", mode, "Ball mode")->check(CLI::IsMember({"open", "closed"}));
  sub->add_option("--margin", rc.margin, "Required certificate margin");
  sub->add_option("--samples", rc.samples, "Sampling-oracle directions (>= 1000)");
  sub->add_option("--seed", rc.seed, "Seed for the sampling oracle");
  sub->add_option("--out", rc.out_path, "Configuration output path");
  sub->add_option("--cert", rc.cert_path, "Certificate output path");
  auto* svg = sub->add_option("--svg", rc.svg_path, "SVG figure output (2D)");
  auto* mesh = sub->add_option("--mesh", rc.mesh_path, "OBJ scene output (3D)");
  svg->excludes(mesh);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocking ball configurations and exact shadow certificates", "shadowctl"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string point;
  std::string mode = "closed";

  auto* solve = app.add_subcommand("solve", "Place balls on a domain boundary and certify them");
  add_common(solve, rc, point, mode);
  solve->add_option("--domain", rc.domain_path, "Domain file")->required();

  auto* verify = app.add_subcommand("verify", "Certify an existing configuration");
  add_common(verify, rc, point, mode);
  verify->add_option("--config", rc.config_path, "Configuration file")->required();
  verify->add_option("--domain", rc.domain_path, "Domain file for the boundary check");

  auto* lemma2 = app.add_subcommand("lemma2", "Four balls on the unit sphere");
  add_common(lemma2, rc, point, mode);
  lemma2->add_option("--epsilon", rc.epsilon, "Offset of the side-ball plane");
  lemma2->add_option("--delta", rc.delta, "Relative shrink of the large ball");

  auto* planar = app.add_subcommand("khudai2d", "Two disks on the unit circle");
  add_common(planar, rc, point, mode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : shadow::cli::kInputError;
  }

  if (app.got_subcommand(verify)) {
    rc.command = shadow::cli::Command::verify;
  } else if (app.got_subcommand(lemma2)) {
    rc.command = shadow::cli::Command::lemma2;
  } else if (app.got_subcommand(planar)) {
    rc.command = shadow::cli::Command::khudai2d;
  } else {
    rc.command = shadow::cli::Command::solve;
  }
  rc.mode = shadow::ball_mode_from_string(mode);
  if (!point.empty()) {
    try {
      rc.point = shadow::cli::parse_point(point);
    } catch (const shadow::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return shadow::cli::kInputError;
    }
  }
  return shadow::cli::run(rc, std::cout, std::cerr);
}
