#include <gtest/gtest.h>

#include <sstream>

#include "generators.hpp"
#include "shadow/export.hpp"
#include "shadow/io.hpp"

namespace shadow {
namespace {

using testing::Gen;

TEST(ConfigJson, LosslessRoundTrip) {
  Gen g(61);
  for (int i = 0; i < 500; ++i) {
    const int dim = g.integer(2, 3);
    const BallMode mode = g.coin() ? BallMode::open : BallMode::closed;
    ShadowConfig cfg{g.point(dim, 1e3), {}};
    for (int j = g.integer(0, 5); j > 0; --j) {
      cfg.balls.emplace_back(g.point(dim, 1e3), std::exp(g.uniform(-20, 5)), mode);
    }
    const ShadowConfig back = config_from_json(config_to_json(cfg));
    EXPECT_EQ(back.x0, cfg.x0);
    EXPECT_EQ(back.balls, cfg.balls);
    EXPECT_EQ(config_to_json(back), config_to_json(cfg));
  }
}

TEST(ConfigJson, RejectsMalformed) {
  for (const char* text :
       {"", "{", "[]", R"({"dim": 2, "point": [0, 0]})", R"({"dim": 5, "point": [0], "balls": []})",
        R"({"dim": 2, "point": [0, 0, 0], "balls": []})",
        R"({"dim": 2, "point": [0, 0], "balls": [{"center": [1, 0], "radius": -1}]})",
        R"({"dim": 2, "point": [0, 0], "mode": "ajar", "balls": []})",
        R"({"dim": 2, "point": [0, "a"], "balls": []})"}) {
    try {
      config_from_json(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::io_error) << text;
    }
  }
}

TEST(CertificateJson, RoundTripAndSchema) {
  Certificate c;
  c.dim = 3;
  c.n_balls = 4;
  c.covered = false;
  c.margin = 0.0;
  c.checks.outside_point = true;
  c.checks.pairwise_disjoint = true;
  c.witness = Vec(0.1, 0.2, 0.9746794344808963);
  c.samples_used = 1000;
  c.boundary_gaps = {0.0, 0.25};
  const std::string text = certificate_to_json(c);
  for (const char* key : {"\"covered\"", "\"margin\"", "\"checks\"", "\"outside_point\"",
                          "\"pairwise_disjoint\"", "\"centers_on_boundary\"", "\"witness\"",
                          "\"samples_used\""}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
  const Certificate back = certificate_from_json(text);
  EXPECT_EQ(back.covered, c.covered);
  EXPECT_EQ(back.witness, c.witness);
  EXPECT_EQ(back.checks.centers_on_boundary, std::nullopt);
  EXPECT_EQ(back.boundary_gaps, c.boundary_gaps);
  EXPECT_EQ(back.samples_used, 1000u);
  EXPECT_EQ(certificate_to_json(back), text);
}

TEST(DomainJson, RoundTripEachKind) {
  const Domain a = Domain::implicit(Expression::parse("x^2/9 + y^2 - 1", 2));
  const Domain b = Domain::polygon({Vec(0, 0), Vec(3, 0), Vec(3, 1), Vec(0, 1)});
  const Domain c = Domain::mesh({Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)},
                                {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}});
  for (const Domain* d : {&a, &b, &c}) {
    const std::string text = domain_to_json(*d);
    const Domain back = domain_from_json(text);
    EXPECT_EQ(back.kind(), d->kind());
    EXPECT_EQ(domain_to_json(back), text);
  }
}

TEST(DomainJson, Errors) {
  EXPECT_THROW(domain_from_json(R"({"dim": 2, "kind": "blob", "payload": ""})"), Error);
  EXPECT_THROW(domain_from_json(R"({"dim": 3, "kind": "polygon", "payload": {"vertices": []}})"), Error);
  EXPECT_THROW(domain_from_json(R"({"dim": 2, "kind": "implicit", "payload": 3})"), Error);
  try {
    domain_from_json(R"({"dim": 2, "kind": "implicit", "payload": "x + q"})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), Errc::unknown_identifier);
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(read_text_file("/nonexistent/definitely/missing.json"), Error);
}

TEST(Export, SvgAndObjShapes) {
  const ShadowConfig c2{Vec(0, 0), {Ball(Vec(1, 0), 0.9), Ball(Vec(0, 1), 0.4)}};
  const Domain disk = Domain::implicit(Expression::parse("x^2 + y^2 - 1", 2));
  std::ostringstream svg;
  write_svg(svg, &disk, c2, 1.0);
  EXPECT_EQ(svg.str().rfind("<svg", 0), 0u);
  EXPECT_NE(svg.str().find("<polygon"), std::string::npos);
  EXPECT_NE(svg.str().find("</svg>"), std::string::npos);

  const ShadowConfig c3{Vec(0, 0, 0), {Ball(Vec(0, 1, 0), 0.9), Ball(Vec(0, -1, 0), 0.5)}};
  std::ostringstream obj;
  write_obj(obj, nullptr, c3);
  std::istringstream in(obj.str());
  std::string line;
  int v = 0, f = 0;
  while (std::getline(in, line)) {
    v += line.rfind("v ", 0) == 0;
    f += line.rfind("f ", 0) == 0;
  }
  EXPECT_EQ(v, 2 * (2 + 15 * 32));
  EXPECT_EQ(f, 2 * (2 * 32 + 14 * 32));
}

}  // namespace
}  // namespace shadow
