#include <string>

#include <doctest.h>

#include "rindler/error.hpp"
#include "rindler/grid.hpp"
#include "rindler/serialize.hpp"

using namespace rindler;

TEST_CASE("doubles round-trip through text") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) CHECK(parse_double(format_double(x)) == x);
  CHECK_THROWS_AS(parse_double("abc"), Error);
}

TEST_CASE("grid CSV round-trip") {
  WignerGrid g({-1.0, 0.5}, {0.1, 0.2, 0.3});
  for (std::size_t k = 0; k < g.values.size(); ++k) g.values[k] = 1.0 / (k + 3.0);
  g.meta["kind"] = "correction";
  const auto back = wigner_from_csv(to_csv(g));
  CHECK(back.eta == g.eta);
  CHECK(back.nu == g.nu);
  CHECK(back.values == g.values);
  CHECK(back.meta.at("kind") == "correction");

  CorrelationGrid c({0.0}, {0.0, 0.25});
  c.values = {3.5, -1.25};
  const auto cb = correlation_from_csv(to_csv(c));
  CHECK(cb.values == c.values);
}

TEST_CASE("config round-trip") {
  const auto j = Json::parse(R"({"units": {"c0": 2.0}, "spectrum": {"f0": 1.5, "eps": 0.05},
                                 "scene": {"xi": 1.0, "xi0": 0.4, "alpha": 0.3},
                                 "estimator": {"seed": 17, "M": 10}})");
  const auto cfg = config_from_json(j);
  CHECK(cfg.c0 == 2.0);
  CHECK(cfg.scene->alpha == 0.3);
  CHECK(cfg.estimator.seed == 17);
  const auto again = config_from_json(to_json(cfg));
  CHECK(again.spectrum.eps == 0.05);
  CHECK(again.estimator.realizations == 10);
}

TEST_CASE("config errors name the member") {
  try {
    config_from_json(Json::parse(R"({"trajectory": {"kind": "rindler", "xi": -1}})"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Config);
    CHECK(std::string(e.what()).find("/trajectory") != std::string::npos);
  }
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"spectrum": {"f0": "x"}})")), Error);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), Error);
}
