#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "shadow/error.hpp"
#include "shadow/export.hpp"
#include "shadow/io.hpp"
#include "shadow/solver.hpp"

namespace shadow::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Domain load_domain(const std::string& path) {
  try {
    return domain_from_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw InputError("domain expression: " + std::string(e.what()) + " at position " +
                     std::to_string(e.position()));
  } catch (const Error& e) {
    throw InputError("domain file: " + std::string(e.what()));
  }
}

Point point_of(const RunConfig& rc, int dim) {
  if (rc.point.empty()) throw InputError("missing --point");
  if (static_cast<int>(rc.point.size()) != dim) {
    throw InputError("point has " + std::to_string(rc.point.size()) +
                     " coordinates but the domain has dimension " + std::to_string(dim));
  }
  try {
    return Vec::from(rc.point);
  } catch (const Error& e) {
    throw InputError(std::string("point: ") + e.what());
  }
}

void check_samples(const RunConfig& rc) {
  if (rc.samples != 0 && rc.samples < 1000) throw InputError("--samples must be at least 1000");
}

void write_out(const std::string& path, const std::string& text) {
  try {
    write_text_file(path, text);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::string default_cert_path(const RunConfig& rc) {
  if (rc.cert_path) return *rc.cert_path;
  if (rc.out_path) {
    std::string p = *rc.out_path;
    if (p.size() > 5 && p.substr(p.size() - 5) == ".json") p.resize(p.size() - 5);
    return p + ".cert.json";
  }
  return {};
}

/// Names the first failing certificate check, or empty when all pass.
std::string failed_check(const Certificate& c, double margin_target) {
  if (!c.checks.outside_point) return "outside_point: the point lies in a ball";
  if (!c.checks.pairwise_disjoint) return "pairwise_disjoint: two balls overlap";
  if (c.checks.centers_on_boundary == false) return "centers_on_boundary: a center is off the boundary";
  if (!c.covered) return "covered: some line through the point misses every ball";
  if (c.margin < margin_target) {
    std::ostringstream os;
    os << "margin: " << c.margin << " is below the required " << margin_target;
    return os.str();
  }
  if (c.sampling_escape) return "sampling: the oracle found an escaping direction";
  return {};
}

void print_witness(std::ostream& os, const Certificate& c) {
  const auto& w = c.witness ? c.witness : c.sampling_escape;
  if (w) os << "witness direction: " << w->str() << '\n';
}

/// Shared tail of every command: optional oracle, certificate output, exit code.
int finish(const RunConfig& rc, Certificate& cert, const ShadowConfig& cfg, double margin_target,
           std::ostream& out, std::ostream& err) {
  if (rc.samples > 0) run_sampling_oracle(cert, cfg, rc.samples, rc.seed);
  const std::string cert_text = certificate_to_json(cert);
  const std::string cert_path = default_cert_path(rc);
  if (!cert_path.empty()) write_out(cert_path, cert_text);
  out << cert_text;
  const std::string failure = failed_check(cert, margin_target);
  if (!failure.empty()) {
    err << "check failed: " << failure << '\n';
    print_witness(out, cert);
    return kFailed;
  }
  return kVerified;
}

void write_figures(const RunConfig& rc, const Domain* domain, const ShadowConfig& cfg,
                   std::optional<double> rho) {
  if (rc.svg_path) {
    if (cfg.dim() != 2) throw InputError("--svg needs a 2D configuration");
    std::ostringstream os;
    write_svg(os, domain, cfg, rho);
    write_out(*rc.svg_path, os.str());
  }
  if (rc.mesh_path) {
    if (cfg.dim() != 3) throw InputError("--mesh needs a 3D configuration");
    std::ostringstream os;
    write_obj(os, domain, cfg);
    write_out(*rc.mesh_path, os.str());
  }
}

void emit_config(const RunConfig& rc, const ShadowConfig& cfg, std::ostream& out) {
  const std::string text = config_to_json(cfg);
  if (rc.out_path) {
    write_out(*rc.out_path, text);
  } else {
    out << text;
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case Errc::construction_failed:
      case Errc::validation_failed:
      case Errc::ray_misses_boundary:
      case Errc::search_failed:
      case Errc::no_root_in_range:
      case Errc::no_intersection_with_sigma:
        return kFailed;
      default:
        return kInputError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

Domain unit_sphere_domain(int dim) {
  return Domain::implicit(Expression::parse(dim == 2 ? "x^2 + y^2 - 1" : "x^2 + y^2 + z^2 - 1", dim));
}

}  // namespace

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (item.empty() || used != item.size()) {
      throw Error(Errc::invalid_argument, "bad coordinate '" + item + "' in point '" + text + "'");
    }
    c.push_back(v);
  }
  if (!text.empty() && text.back() == ',') {
    throw Error(Errc::invalid_argument, "trailing comma in point '" + text + "'");
  }
  if (c.size() != 2 && c.size() != 3) {
    throw Error(Errc::invalid_argument, "point needs 2 or 3 coordinates, got '" + text + "'");
  }
  return c;
}

int cmd_solve(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_samples(rc);
    if (!rc.domain_path) throw InputError("missing --domain");
    const Domain domain = load_domain(*rc.domain_path);
    const Point x0 = point_of(rc, domain.dim());
    bool inside = false;
    try {
      inside = domain.contains(x0);
    } catch (const Error& e) {
      throw InputError(std::string("cannot evaluate the domain at the point: ") + e.what());
    }
    if (!inside) throw InputError("point not in domain");

    const double target = rc.margin.value_or(0.0);
    if (target < 0.0 || !std::isfinite(target)) throw InputError("--margin must be non-negative");
    SolveOptions opts;
    opts.mode = rc.mode;
    if (domain.dim() == 2) {
      opts.margin_angle = std::max(opts.margin_angle, target);
      if (opts.margin_angle >= kPi / 8) throw InputError("--margin must be below pi/8 in 2D");
    }
    const Solution sol = solve(domain, x0, opts);

    emit_config(rc, sol.config, out);
    write_figures(rc, &domain, sol.config, sol.inradius.rho);
    Certificate cert = sol.certificate;
    return finish(rc, cert, sol.config, std::max(target, std::nextafter(0.0, 1.0)), out, err);
  });
}

int cmd_verify(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_samples(rc);
    if (!rc.config_path) throw InputError("missing --config");
    ShadowConfig cfg;
    try {
      cfg = config_from_json(read_text_file(*rc.config_path));
    } catch (const Error& e) {
      throw InputError("configuration file: " + std::string(e.what()));
    }
    std::optional<Domain> domain;
    if (rc.domain_path) {
      domain = load_domain(*rc.domain_path);
      if (domain->dim() != cfg.dim()) throw InputError("domain and configuration dimensions differ");
    }
    Certificate cert = domain ? validate(*domain, cfg) : validate(cfg);
    write_figures(rc, domain ? &*domain : nullptr, cfg, std::nullopt);
    return finish(rc, cert, cfg, rc.margin.value_or(0.0), out, err);
  });
}

int cmd_lemma2(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_samples(rc);
    const Lemma2Constants k = Lemma2Constants::compute();
    out << std::fixed << std::setprecision(10) << "y' = " << k.y_prime << '\n'
        << "x' = " << k.x_prime << '\n'
        << "r' = " << k.r_prime << '\n'
        << "a  = " << k.side_a << '\n'
        << std::defaultfloat;

    Lemma2Params p;
    if (rc.epsilon || rc.delta) {
      if (rc.epsilon) p.eps_level = *rc.epsilon;
      if (rc.delta) p.delta = *rc.delta;
    } else {
      p = tune_lemma2();
    }
    p.mode = rc.mode;
    if (!(p.eps_level >= 0.0) || !(p.delta >= 0.0 && p.delta < 1.0)) {
      throw InputError("--epsilon must be >= 0 and --delta in [0, 1)");
    }
    out << std::setprecision(17) << "epsilon = " << p.eps_level << "\ndelta = " << p.delta << '\n' << std::defaultfloat;

    ShadowConfig cfg;
    try {
      cfg = lemma2_layout(p);
    } catch (const Error& e) {
      // Degenerate parameters (e.g. the large ball reaching the center).
      throw Error(Errc::construction_failed, e.what());
    }
    emit_config(rc, cfg, out);
    write_figures(rc, nullptr, cfg, std::nullopt);
    Certificate cert = validate(unit_sphere_domain(3), cfg, 1e-9);
    return finish(rc, cert, cfg, rc.margin.value_or(1e-3), out, err);
  });
}

int cmd_khudai2d(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_samples(rc);
    const double m = rc.margin.value_or(0.02);
    if (!(m >= 0.0 && m < kPi / 8)) throw InputError("--margin must lie in [0, pi/8)");
    const ShadowConfig cfg = two_balls_unit_circle(m, rc.mode);
    emit_config(rc, cfg, out);
    write_figures(rc, nullptr, cfg, 1.0);
    Certificate cert = validate(unit_sphere_domain(2), cfg, 1e-9);
    return finish(rc, cert, cfg, std::nextafter(0.0, 1.0), out, err);
  });
}

int run(const RunConfig& rc, std::ostream& out, std::ostream& err) {
  switch (rc.command) {
    case Command::solve: return cmd_solve(rc, out, err);
    case Command::verify: return cmd_verify(rc, out, err);
    case Command::lemma2: return cmd_lemma2(rc, out, err);
    case Command::khudai2d: return cmd_khudai2d(rc, out, err);
  }
  return kInputError;
}

}  // namespace shadow::cli
