#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace rindler {

// Uniform lattice [min, max] with n points.
struct Axis {
  double min = 0.0;
  double max = 1.0;
  std::size_t n = 1;

  void validate(const char* name) const;
  std::vector<double> values() const;
};

// Row-major samples over (eta, nu) = (c0 tau / xi, xi omega / c0).
struct WignerGrid {
  std::vector<double> eta;
  std::vector<double> nu;
  std::vector<double> values;
  // Header metadata such as kind, units and window.
  std::map<std::string, std::string> meta;

  WignerGrid() = default;
  WignerGrid(std::vector<double> eta_values, std::vector<double> nu_values);

  double& at(std::size_t i, std::size_t j) { return values[i * nu.size() + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * nu.size() + j]; }
  void check() const;
};

// Row-major samples over (tau, tau').
struct CorrelationGrid {
  std::vector<double> tau;
  std::vector<double> lag;
  std::vector<double> values;
  std::map<std::string, std::string> meta;

  CorrelationGrid() = default;
  CorrelationGrid(std::vector<double> tau_values, std::vector<double> lag_values);

  double& at(std::size_t i, std::size_t j) { return values[i * lag.size() + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * lag.size() + j]; }
  void check() const;
};

// Shortest decimal that reads back to the same double.
std::string format_double(double x);
double parse_double(const std::string& text);

std::string to_csv(const WignerGrid& g);
std::string to_csv(const CorrelationGrid& g);
WignerGrid wigner_from_csv(const std::string& text);
CorrelationGrid correlation_from_csv(const std::string& text);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace rindler
