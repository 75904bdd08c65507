#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "dirac/analysis.hpp"
#include "dirac/walk.hpp"

namespace dirac {

/// Field files carry a JSON header {n, N, eps, d} and the amplitudes as
/// interleaved (re, im) 64-bit floats, site-major then spinor index.
/// Paths ending in ".json" hold everything in one JSON document with the
/// samples under "data"; any other extension is the binary layout: the
/// header JSON on a single line terminated by '\n', followed by the raw
/// little-endian doubles.
void save_field(const LatticeField& field, const std::string& path);
LatticeField load_field(const std::string& path);

/// Factor-list description used by the walk-info command.
nlohmann::json describe_walk(const WalkOperator& w);

nlohmann::json report_to_json(const ConvergenceReport& report);

/// CSV rows `l,eps,error,bound,ratio` preceded by `#` comment lines naming
/// the configuration hash.
std::string report_to_csv(const ConvergenceReport& report, const std::string& config_hash);

/// FNV-1a 64-bit hash, hex-encoded; applied to canonical config dumps.
std::string fnv1a_hex(const std::string& text);

/// Shortest-round-trip decimal form used everywhere numbers reach output
/// files, so identical runs emit identical bytes.
std::string format_double(double v);

}  // namespace dirac
