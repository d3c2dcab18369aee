#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tspforge/instance.hpp"

namespace tspforge {

// TSPLIB subset: NAME, TYPE: TSP, DIMENSION, EDGE_WEIGHT_TYPE: EUC_2D,
// NODE_COORD_SECTION (1-based indices, integer coordinates), EOF.
// The reader rejects any EDGE_WEIGHT_TYPE other than EUC_2D. Parse failures
// report the offending line number. A COMMENT line carries the grid size so
// instances round-trip; files without it get the coordinate bounding box.

std::string to_tsplib(const Instance& inst);
void write_tsplib(const Instance& inst, const std::filesystem::path& path);

Instance parse_tsplib(std::istream& in, const std::string& source_name);
Instance read_tsplib(const std::filesystem::path& path);

}  // namespace tspforge
