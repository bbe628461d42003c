#include "quatmt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quatmt {

namespace {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  json j;
  in >> j;
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
}

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw std::runtime_error("expected a [w,x,y,z] quadruple");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

json quaternion_to_json(const Quaternion& q) {
  return json::array({q.w, q.x, q.y, q.z});
}

std::vector<double> parse_csv_row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<Quaternion> load_quaternion_list_json(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.is_array()) {
    throw std::runtime_error(path.string() + ": expected a JSON array of quadruples");
  }
  std::vector<Quaternion> out;
  out.reserve(j.size());
  for (const json& entry : j) {
    out.push_back(quaternion_from_json(entry));
  }
  return out;
}

void save_quaternion_list_json(const std::filesystem::path& path,
                               const std::vector<Quaternion>& values) {
  json j = json::array();
  for (const Quaternion& q : values) {
    j.push_back(quaternion_to_json(q));
  }
  write_text_file(path, j.dump(2) + "\n");
}

RegularSeries load_series_json(const std::filesystem::path& path) {
  std::vector<Quaternion> coeffs = load_quaternion_list_json(path);
  if (coeffs.empty()) {
    throw std::runtime_error(path.string() + ": series needs at least one coefficient");
  }
  return RegularSeries(std::move(coeffs));
}

void save_series_json(const std::filesystem::path& path, const RegularSeries& f) {
  save_quaternion_list_json(path, f.coeffs());
}

PoleSequence load_pole_sequence_json(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.contains("poles") || !j["poles"].is_array()) {
    throw std::runtime_error(path.string() + ": expected a \"poles\" array");
  }
  std::vector<Quaternion> poles;
  poles.reserve(j["poles"].size());
  for (const json& entry : j["poles"]) {
    poles.push_back(quaternion_from_json(entry));
  }
  std::optional<UnitImaginary> slice;
  if (j.contains("slice") && !j["slice"].is_null()) {
    const json& s = j["slice"];
    if (!s.is_array() || s.size() != 3) {
      throw std::runtime_error(path.string() + ": \"slice\" must be [x,y,z] or null");
    }
    slice = UnitImaginary(s[0].get<double>(), s[1].get<double>(), s[2].get<double>());
  }
  return PoleSequence(std::move(poles), slice);
}

void save_pole_sequence_json(const std::filesystem::path& path,
                             const PoleSequence& poles) {
  json j;
  j["poles"] = json::array();
  for (const Quaternion& a : poles.params()) {
    j["poles"].push_back(quaternion_to_json(a));
  }
  if (poles.common_slice()) {
    const UnitImaginary& s = *poles.common_slice();
    j["slice"] = json::array({s.x(), s.y(), s.z()});
  } else {
    j["slice"] = nullptr;
  }
  write_text_file(path, j.dump(2) + "\n");
}

SliceBoundaryGrid load_boundary_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path.string() + ": empty boundary file");
  }
  if (line.rfind("direction,", 0) != 0) {
    throw std::runtime_error(path.string() + ": first line must be direction,<x>,<y>,<z>");
  }
  const std::vector<double> dir = parse_csv_row(line.substr(std::string("direction,").size()));
  if (dir.size() != 3) {
    throw std::runtime_error(path.string() + ": direction needs three components");
  }
  const UnitImaginary direction(dir[0], dir[1], dir[2]);

  std::vector<double> thetas;
  std::vector<Quaternion> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<double> row = parse_csv_row(line);
    if (row.size() != 5) {
      throw std::runtime_error(path.string() + ": boundary rows are theta,w,x,y,z");
    }
    thetas.push_back(row[0]);
    values.push_back({row[1], row[2], row[3], row[4]});
  }
  const int m = static_cast<int>(values.size());
  if (m < 2) {
    throw std::runtime_error(path.string() + ": need at least 2 boundary samples");
  }
  for (int t = 0; t < m; ++t) {
    const double expected = 2.0 * std::numbers::pi * t / m;
    if (std::abs(thetas[static_cast<std::size_t>(t)] - expected) > 1e-9) {
      throw std::runtime_error(path.string() + ": nodes must be equispaced starting at 0");
    }
  }
  return {direction, std::move(values)};
}

void save_boundary_grid_csv(const std::filesystem::path& path,
                            const SliceBoundaryGrid& grid) {
  std::string text = "direction," + format_double(grid.direction().x()) + "," +
                     format_double(grid.direction().y()) + "," +
                     format_double(grid.direction().z()) + "\n";
  for (int t = 0; t < grid.size(); ++t) {
    const Quaternion& v = grid.values()[static_cast<std::size_t>(t)];
    text += format_double(grid.theta(t)) + "," + format_double(v.w) + "," +
            format_double(v.x) + "," + format_double(v.y) + "," +
            format_double(v.z) + "\n";
  }
  write_text_file(path, text);
}

void save_gram_csv(const std::filesystem::path& path, const QuaternionMatrix& m) {
  std::string text;
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      const Quaternion& q = m.at(r, c);
      if (c > 0) text += ",";
      text += format_double(q.w) + "," + format_double(q.x) + "," +
              format_double(q.y) + "," + format_double(q.z);
    }
    text += "\n";
  }
  write_text_file(path, text);
}

void save_convergence_csv(const std::filesystem::path& path,
                          const std::vector<std::pair<int, double>>& table) {
  std::string text = "n,residual\n";
  for (const auto& [n, residual] : table) {
    text += std::to_string(n) + "," + format_double(residual) + "\n";
  }
  write_text_file(path, text);
}

}  // namespace quatmt
