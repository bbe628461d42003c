#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "quatmt/hardy.hpp"
#include "quatmt/mt_system.hpp"
#include "quatmt/series.hpp"

namespace quatmt {

// File formats used by the command-line tools. All CSV floats are printed
// with 17 significant digits so that values round-trip exactly.
//
//  * quaternion lists / series coefficients: JSON array of [w,x,y,z]
//  * pole sequences: {"poles": [[w,x,y,z], ...], "slice": [x,y,z] | null}
//  * boundary samples: first line "direction,<x>,<y>,<z>", then one
//    "theta,w,x,y,z" row per equispaced node
//  * Gram matrices: row-major CSV, four columns per quaternion entry
//  * convergence tables: "n,residual" rows

std::string format_double(double v);  // 17 significant digits

std::vector<Quaternion> load_quaternion_list_json(const std::filesystem::path& path);
void save_quaternion_list_json(const std::filesystem::path& path,
                               const std::vector<Quaternion>& values);

RegularSeries load_series_json(const std::filesystem::path& path);
void save_series_json(const std::filesystem::path& path, const RegularSeries& f);

PoleSequence load_pole_sequence_json(const std::filesystem::path& path);
void save_pole_sequence_json(const std::filesystem::path& path,
                             const PoleSequence& poles);

SliceBoundaryGrid load_boundary_grid_csv(const std::filesystem::path& path);
void save_boundary_grid_csv(const std::filesystem::path& path,
                            const SliceBoundaryGrid& grid);

void save_gram_csv(const std::filesystem::path& path, const QuaternionMatrix& m);

void save_convergence_csv(const std::filesystem::path& path,
                          const std::vector<std::pair<int, double>>& table);

}  // namespace quatmt
