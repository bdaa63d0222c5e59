#include "lsg/harmonic/grid_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "lsg/core/errors.hpp"

namespace lsg {

namespace {

template <typename T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw ConfigError("truncated grid file");
  return v;
}

}  // namespace

void write_grid_binary(const GridField& field, std::ostream& out) {
  const GridGeometry& g = field.geometry();
  for (auto d : g.dims) put<std::uint64_t>(out, d);
  put<double>(out, g.spacing);
  for (double o : g.origin) put<double>(out, o);
  out.write(reinterpret_cast<const char*>(field.values().data()),
            static_cast<std::streamsize>(field.values().size() * sizeof(double)));
}

void write_grid_binary(const GridField& field, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  write_grid_binary(field, out);
}

GridField read_grid_binary(std::istream& in, double mass) {
  GridGeometry g;
  for (auto& d : g.dims) d = static_cast<std::size_t>(get<std::uint64_t>(in));
  g.spacing = get<double>(in);
  for (auto& o : g.origin) o = get<double>(in);
  if (g.dims[0] * g.dims[1] * g.dims[2] > (std::size_t{1} << 32))
    throw ConfigError("grid file declares an implausible size");
  std::vector<double> values(g.size());
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(values.size() * sizeof(double)));
  if (!in) throw ConfigError("truncated grid payload");
  return GridField(g, std::move(values), {}, mass);
}

GridField read_grid_binary(const std::filesystem::path& path, double mass) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return read_grid_binary(in, mass);
}

void write_grid_csv(const GridField& field, std::ostream& out) {
  const GridGeometry& g = field.geometry();
  out << "x,y,z,u\n";
  for (std::size_t i = 0; i < g.dims[0]; ++i)
    for (std::size_t j = 0; j < g.dims[1]; ++j)
      for (std::size_t k = 0; k < g.dims[2]; ++k) {
        const double v = field.node_value(i, j, k);
        if (std::isnan(v)) continue;
        const Vec x = g.node(i, j, k);
        out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", x(0), x(1), x(2), v);
      }
}

}  // namespace lsg
