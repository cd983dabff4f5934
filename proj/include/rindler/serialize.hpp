#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rindler/grid.hpp"
#include "rindler/localize.hpp"
#include "rindler/mirror.hpp"
#include "rindler/spectrum.hpp"
#include "rindler/trajectory.hpp"

namespace rindler {

using Json = nlohmann::json;

// Errors name the offending member by JSON pointer, e.g. "/trajectory/xi".
Json to_json(const TrajectorySpec& spec);
TrajectorySpec trajectory_from_json(const Json& j, const std::string& path = "");

Json to_json(const MirrorScene& scene);
MirrorScene scene_from_json(const Json& j, const std::string& path = "", double default_c0 = 1.0);

Json to_json(const SourceSpectrum& s);
SourceSpectrum spectrum_from_json(const Json& j, const std::string& path = "");

Json to_json(const LocalizationResult& r);
Json to_json(const DistanceFit& r);

struct EstimatorSettings {
  std::size_t waves = 4096;
  std::size_t realizations = 2000;
  std::uint64_t seed = 1;
  Window window;
};

struct RunConfig {
  double c0 = 1.0;
  SourceSpectrum spectrum;
  std::optional<TrajectorySpec> trajectory;
  std::optional<MirrorScene> scene;
  Axis eta{-3.0, 3.0, 25};
  Axis nu{0.0, 3.0, 31};
  Axis lag{0.0, 5.0, 401};
  EstimatorSettings estimator;
  FitConfig fit;
  std::string out_dir = ".";
  std::string prefix = "rindler";
};

RunConfig config_from_json(const Json& j);
RunConfig load_config(const std::string& path);
Json to_json(const RunConfig& cfg);

}  // namespace rindler
