#pragma once

#include <string>

#include "wigstat/grid.hpp"

namespace wig {

// Field file format: one JSON header line
//   {"axes":[{"n_points":..,"spacing":..,"origin_index":..},...],"layout":"row-major"}
// followed by one "re im" pair per value in row-major order (last axis
// fastest). Doubles are written with 17 significant digits so a save/load
// round trip is lossless.
void save_field(const SampledField& f, const std::string& path);
SampledField load_field(const std::string& path);

// Flat CSV export: header row, then one line per sample with the coordinate
// tuple followed by re and im at 12 significant digits.
void export_csv(const SampledField& f, const std::string& path);

// Fixed-width float formatting used by all reports (12 significant digits).
std::string format_g12(double x);

}  // namespace wig
