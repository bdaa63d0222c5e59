#pragma once

#include <filesystem>
#include <iosfwd>

#include "lsg/harmonic/grid.hpp"

namespace lsg {

/// Binary layout: three uint64 node counts, double spacing, three double origin
/// components, then row-major doubles (k fastest). Excised nodes are NaN.
void write_grid_binary(const GridField& field, std::ostream& out);
void write_grid_binary(const GridField& field, const std::filesystem::path& path);
/// Reads values and geometry; excisions are not stored and mass must be supplied.
GridField read_grid_binary(std::istream& in, double mass);
GridField read_grid_binary(const std::filesystem::path& path, double mass);

/// CSV with header x,y,z,u, one row per active node.
void write_grid_csv(const GridField& field, std::ostream& out);

}  // namespace lsg
