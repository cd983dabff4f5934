#include "rindler/grid.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rindler/error.hpp"

namespace rindler {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void write_meta(std::ostringstream& out, const std::map<std::string, std::string>& meta) {
  for (const auto& [k, v] : meta) out << "# " << k << '=' << v << '\n';
}

struct Table {
  std::map<std::string, std::string> meta;
  std::vector<double> columns;
  std::vector<double> rows;
  std::vector<double> values;
};

Table parse_table(const std::string& text, const std::string& header) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("# " + header, 0) == 0) {
      auto cells = split(line, ',');
      for (std::size_t k = 1; k < cells.size(); ++k) t.columns.push_back(parse_double(trim(cells[k])));
      have_header = true;
      continue;
    }
    if (line[0] == '#') {
      const auto body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq != std::string::npos) t.meta[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
      continue;
    }
    if (!have_header) fail(ErrorCode::Io, "line " + std::to_string(line_no) + ": data before '# " + header + "' header");
    auto cells = split(line, ',');
    if (cells.size() != t.columns.size() + 1) {
      fail(ErrorCode::Io, "line " + std::to_string(line_no) + ": expected " + std::to_string(t.columns.size() + 1) +
                              " cells, found " + std::to_string(cells.size()));
    }
    t.rows.push_back(parse_double(trim(cells[0])));
    for (std::size_t k = 1; k < cells.size(); ++k) t.values.push_back(parse_double(trim(cells[k])));
  }
  if (!have_header) fail(ErrorCode::Io, "missing '# " + header + "' header");
  return t;
}

template <class G>
std::string table_csv(const G& g, const std::vector<double>& rows, const std::vector<double>& cols,
                      const char* header) {
  std::ostringstream out;
  write_meta(out, g.meta);
  out << "# " << header;
  for (double c : cols) out << ',' << format_double(c);
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << format_double(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) out << ',' << format_double(g.values[i * cols.size() + j]);
    out << '\n';
  }
  return out.str();
}

}  // namespace

void Axis::validate(const char* name) const {
  if (n == 0 || !std::isfinite(min) || !std::isfinite(max) || max < min || (n > 1 && max == min)) {
    fail(ErrorCode::Config, std::string("axis '") + name + "' must satisfy min < max and n >= 1");
  }
}

std::vector<double> Axis::values() const {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = min;
    return v;
  }
  const double step = (max - min) / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = min + double(i) * step;
  v[n - 1] = max;
  return v;
}

WignerGrid::WignerGrid(std::vector<double> eta_values, std::vector<double> nu_values)
    : eta(std::move(eta_values)), nu(std::move(nu_values)), values(eta.size() * nu.size(), 0.0) {}

void WignerGrid::check() const {
  if (values.size() != eta.size() * nu.size()) fail(ErrorCode::InvalidParams, "wigner grid dimensions mismatch");
}

CorrelationGrid::CorrelationGrid(std::vector<double> tau_values, std::vector<double> lag_values)
    : tau(std::move(tau_values)), lag(std::move(lag_values)), values(tau.size() * lag.size(), 0.0) {}

void CorrelationGrid::check() const {
  if (values.size() != tau.size() * lag.size()) fail(ErrorCode::InvalidParams, "correlation grid dimensions mismatch");
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && text[0] == '+') ++first;
  auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc() || res.ptr != last) {
    if (text == "nan") return std::nan("");
    if (text == "inf") return INFINITY;
    if (text == "-inf") return -INFINITY;
    fail(ErrorCode::Io, "cannot parse number '" + text + "'");
  }
  return x;
}

std::string to_csv(const WignerGrid& g) {
  g.check();
  return table_csv(g, g.eta, g.nu, "eta/nu");
}

std::string to_csv(const CorrelationGrid& g) {
  g.check();
  return table_csv(g, g.tau, g.lag, "tau/tau_prime");
}

WignerGrid wigner_from_csv(const std::string& text) {
  auto t = parse_table(text, "eta/nu");
  WignerGrid g(std::move(t.rows), std::move(t.columns));
  g.values = std::move(t.values);
  g.meta = std::move(t.meta);
  g.check();
  return g;
}

CorrelationGrid correlation_from_csv(const std::string& text) {
  auto t = parse_table(text, "tau/tau_prime");
  CorrelationGrid g(std::move(t.rows), std::move(t.columns));
  g.values = std::move(t.values);
  g.meta = std::move(t.meta);
  g.check();
  return g;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(ErrorCode::Io, "write failed for '" + path + "'");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rindler
