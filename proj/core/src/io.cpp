#include "shadow/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace shadow {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::io_error, what); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (double c : v.coords()) a.push_back(c);
  return a;
}

Vec vec_from(const json& j, int dim, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<double> c;
  for (const json& e : j) {
    if (!e.is_number()) bad(std::string(what) + " must contain numbers");
    c.push_back(e.get<double>());
  }
  if (dim != 0 && static_cast<int>(c.size()) != dim) {
    bad(std::string(what) + " has " + std::to_string(c.size()) + " coordinates, expected " +
        std::to_string(dim));
  }
  try {
    return Vec::from(c);
  } catch (const Error& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int dim_field(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || (d.get<int>() != 2 && d.get<int>() != 3)) {
    bad("'dim' must be 2 or 3");
  }
  return d.get<int>();
}

}  // namespace

std::string config_to_json(const ShadowConfig& cfg) {
  json j;
  j["dim"] = cfg.dim();
  j["point"] = vec_json(cfg.x0);
  j["mode"] = to_string(cfg.mode());
  j["balls"] = json::array();
  for (const Ball& b : cfg.balls) {
    j["balls"].push_back({{"center", vec_json(b.center())}, {"radius", b.radius()}});
  }
  return j.dump(2) + "\n";
}

ShadowConfig config_from_json(std::string_view text) {
  const json j = parse(text);
  const int dim = dim_field(j);
  ShadowConfig cfg{vec_from(field(j, "point"), dim, "point"), {}};
  BallMode mode = BallMode::closed;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) bad("'mode' must be a string");
    try {
      mode = ball_mode_from_string(j["mode"].get<std::string>());
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  const json& balls = field(j, "balls");
  if (!balls.is_array()) bad("'balls' must be an array");
  for (const json& b : balls) {
    const Vec c = vec_from(field(b, "center"), dim, "ball center");
    const json& r = field(b, "radius");
    if (!r.is_number()) bad("ball radius must be a number");
    try {
      cfg.balls.emplace_back(c, r.get<double>(), mode);
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  return cfg;
}

std::string certificate_to_json(const Certificate& cert) {
  json j;
  j["covered"] = cert.covered;
  j["margin"] = cert.margin;
  j["checks"] = {{"outside_point", cert.checks.outside_point},
                 {"pairwise_disjoint", cert.checks.pairwise_disjoint},
                 {"centers_on_boundary", cert.checks.centers_on_boundary
                                             ? json(*cert.checks.centers_on_boundary)
                                             : json(nullptr)}};
  j["witness"] = cert.witness ? vec_json(*cert.witness) : json(nullptr);
  j["samples_used"] = cert.samples_used;
  j["dim"] = cert.dim;
  j["mode"] = to_string(cert.mode);
  j["n_balls"] = cert.n_balls;
  j["boundary_gaps"] = cert.boundary_gaps;
  j["sampling_escape"] = cert.sampling_escape ? vec_json(*cert.sampling_escape) : json(nullptr);
  j["passed"] = cert.passed();
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  const json j = parse(text);
  Certificate c;
  try {
    c.covered = field(j, "covered").get<bool>();
    c.margin = field(j, "margin").get<double>();
    const json& checks = field(j, "checks");
    c.checks.outside_point = field(checks, "outside_point").get<bool>();
    c.checks.pairwise_disjoint = field(checks, "pairwise_disjoint").get<bool>();
    const json& cob = field(checks, "centers_on_boundary");
    if (!cob.is_null()) c.checks.centers_on_boundary = cob.get<bool>();
    const json& w = field(j, "witness");
    if (!w.is_null()) c.witness = vec_from(w, 0, "witness");
    c.samples_used = field(j, "samples_used").get<std::size_t>();
    if (j.contains("dim")) c.dim = j["dim"].get<int>();
    if (j.contains("mode")) c.mode = ball_mode_from_string(j["mode"].get<std::string>());
    if (j.contains("n_balls")) c.n_balls = j["n_balls"].get<std::size_t>();
    if (j.contains("boundary_gaps")) c.boundary_gaps = j["boundary_gaps"].get<std::vector<double>>();
    if (j.contains("sampling_escape") && !j["sampling_escape"].is_null()) {
      c.sampling_escape = vec_from(j["sampling_escape"], 0, "sampling_escape");
    }
  } catch (const json::exception& e) {
    bad(std::string("bad certificate: ") + e.what());
  }
  return c;
}

std::string domain_to_json(const Domain& d) {
  json j;
  j["dim"] = d.dim();
  j["kind"] = to_string(d.kind());
  switch (d.kind()) {
    case DomainKind::implicit: j["payload"] = d.expression()->source(); break;
    case DomainKind::polygon: {
      json v = json::array();
      for (const Point& p : d.vertices()) v.push_back(vec_json(p));
      j["payload"] = {{"vertices", v}};
      break;
    }
    case DomainKind::mesh: {
      json v = json::array();
      for (const Point& p : d.vertices()) v.push_back(vec_json(p));
      json t = json::array();
      for (const Triangle& tri : d.triangles()) t.push_back({tri[0], tri[1], tri[2]});
      j["payload"] = {{"vertices", v}, {"triangles", t}};
      break;
    }
  }
  return j.dump(2) + "\n";
}

Domain domain_from_json(std::string_view text) {
  const json j = parse(text);
  const int dim = dim_field(j);
  const json& kind = field(j, "kind");
  if (!kind.is_string()) bad("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  const json& payload = field(j, "payload");

  auto vertices = [&](const json& obj) {
    const json& vs = field(obj, "vertices");
    if (!vs.is_array()) bad("'vertices' must be an array");
    std::vector<Point> out;
    for (const json& v : vs) out.push_back(vec_from(v, dim, "vertex"));
    return out;
  };

  try {
    if (k == "implicit") {
      if (!payload.is_string()) bad("implicit payload must be an expression string");
      return Domain::implicit(Expression::parse(payload.get<std::string>(), dim));
    }
    if (k == "polygon") {
      if (dim != 2) bad("polygon domains must have dim 2");
      return Domain::polygon(vertices(payload));
    }
    if (k == "mesh") {
      if (dim != 3) bad("mesh domains must have dim 3");
      std::vector<Triangle> tris;
      const json& ts = field(payload, "triangles");
      if (!ts.is_array()) bad("'triangles' must be an array");
      for (const json& t : ts) {
        if (!t.is_array() || t.size() != 3) bad("each triangle needs 3 vertex indices");
        Triangle tri{};
        for (std::size_t i = 0; i < 3; ++i) {
          if (!t[i].is_number_unsigned() && !(t[i].is_number_integer() && t[i].get<long long>() >= 0)) {
            bad("triangle indices must be non-negative integers");
          }
          tri[i] = t[i].get<std::size_t>();
        }
        tris.push_back(tri);
      }
      return Domain::mesh(vertices(payload), std::move(tris));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == Errc::io_error) throw;
    bad(e.what());
  }
  bad("unknown domain kind '" + k + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) bad("cannot write " + path.string());
  out << text;
  if (!out) bad("failed writing " + path.string());
}

}  // namespace shadow
