#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "detail.hpp"
#include "lsg/core/errors.hpp"
#include "lsg/harmonic/grid.hpp"
#include "lsg/levelset/extract.hpp"
#include "lsg/levelset/geometry.hpp"

namespace lsg {

namespace {

// Lattice of node values (shifted by -t) on which the isosurface is built.
struct Lattice {
  std::array<std::size_t, 3> dims{};
  std::array<double, 3> origin{};
  double h = 0.0;
  std::vector<double> values;

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dims[1] + j) * dims[2] + k;
  }
  Vec node(std::size_t id) const {
    const std::size_t k = id % dims[2];
    const std::size_t j = (id / dims[2]) % dims[1];
    const std::size_t i = id / (dims[1] * dims[2]);
    Vec x(3);
    x << origin[0] + h * i, origin[1] + h * j, origin[2] + h * k;
    return x;
  }
};

Lattice lattice_for(const ScalarField& field, double t, const ExtractOptions& options) {
  Lattice lat;
  if (const auto* grid = dynamic_cast<const GridField*>(&field)) {
    const GridGeometry& g = grid->geometry();
    lat.dims = g.dims;
    lat.origin = g.origin;
    lat.h = g.spacing;
    lat.values = grid->values();
    for (double& v : lat.values) v -= t;
    return lat;
  }
  auto box = options.box ? options.box : field.level_bounds(t);
  if (!box) throw ExtractionError("triangulation needs level bounds for analytic fields");
  if (options.resolution < 4) throw DomainError("triangulation resolution must be at least 4");
  const Vec c = box->center();
  const double half = 0.55 * box->extent().maxCoeff() + 1e-12;
  const auto n = static_cast<std::size_t>(options.resolution);
  lat.dims = {n + 1, n + 1, n + 1};
  lat.h = 2.0 * half / n;
  for (int a = 0; a < 3; ++a) lat.origin[a] = c(a) - half;
  lat.values.resize((n + 1) * (n + 1) * (n + 1));
  for (std::size_t id = 0; id < lat.values.size(); ++id) {
    try {
      lat.values[id] = field.value(lat.node(id)) - t;
    } catch (const SingularPointError&) {
      lat.values[id] = std::numeric_limits<double>::quiet_NaN();
    }
    if (std::isinf(lat.values[id])) lat.values[id] = std::numeric_limits<double>::quiet_NaN();
  }
  return lat;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

LevelSurface extract_triangulation(const ScalarField& field, double t,
                                   const ExtractOptions& options) {
  if (field.dimension() != 3) throw DomainError("triangulation backend supports n = 3 only");
  const Lattice lat = lattice_for(field, t, options);

  std::vector<Vec> vertices;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_vertex;
  auto vertex_on_edge = [&](std::size_t a, std::size_t b) -> std::uint32_t {
    if (a > b) std::swap(a, b);
    const std::uint64_t key = static_cast<std::uint64_t>(a) * lat.values.size() + b;
    auto it = edge_vertex.find(key);
    if (it != edge_vertex.end()) return it->second;
    const double va = lat.values[a], vb = lat.values[b];
    const Vec xa = lat.node(a), xb = lat.node(b);
    double s = va / (va - vb);
    if (va != 0.0 && vb != 0.0) {
      auto g = [&](double q) { return field.value(xa + q * (xb - xa)) - t; };
      try {
        boost::uintmax_t iters = 100;
        const auto r = boost::math::tools::toms748_solve(
            g, 0.0, 1.0, va, vb, boost::math::tools::eps_tolerance<double>(50), iters);
        s = 0.5 * (r.first + r.second);
      } catch (const std::exception&) {
        // keep the linear estimate
      }
    }
    const auto id = static_cast<std::uint32_t>(vertices.size());
    vertices.push_back(xa + s * (xb - xa));
    edge_vertex.emplace(key, id);
    return id;
  };

  std::vector<std::array<std::uint32_t, 3>> triangles;
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (std::size_t i = 0; i + 1 < lat.dims[0]; ++i)
    for (std::size_t j = 0; j + 1 < lat.dims[1]; ++j)
      for (std::size_t k = 0; k + 1 < lat.dims[2]; ++k) {
        std::size_t corner[8];
        bool valid = true, pos = false, neg = false;
        for (int c = 0; c < 8; ++c) {
          corner[c] = lat.index(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1));
          const double v = lat.values[corner[c]];
          if (std::isnan(v)) valid = false;
          else if (v >= 0.0) pos = true;
          else neg = true;
        }
        if (!valid || !pos || !neg) continue;
        for (const auto& p : perms) {
          const int v1 = 1 << p[0], v2 = v1 | (1 << p[1]);
          const std::size_t tet[4] = {corner[0], corner[v1], corner[v2], corner[7]};
          int in[4], out[4], ni = 0, no = 0;
          for (int q = 0; q < 4; ++q) {
            if (lat.values[tet[q]] >= 0.0) in[ni++] = q;
            else out[no++] = q;
          }
          if (ni == 0 || no == 0) continue;
          if (ni == 1 || no == 1) {
            const int lone = ni == 1 ? in[0] : out[0];
            std::uint32_t tri[3];
            int c = 0;
            for (int q = 0; q < 4; ++q)
              if (q != lone) tri[c++] = vertex_on_edge(tet[lone], tet[q]);
            triangles.push_back({tri[0], tri[1], tri[2]});
          } else {
            const std::uint32_t ac = vertex_on_edge(tet[in[0]], tet[out[0]]);
            const std::uint32_t ad = vertex_on_edge(tet[in[0]], tet[out[1]]);
            const std::uint32_t bd = vertex_on_edge(tet[in[1]], tet[out[1]]);
            const std::uint32_t bc = vertex_on_edge(tet[in[1]], tet[out[0]]);
            triangles.push_back({ac, ad, bd});
            triangles.push_back({ac, bd, bc});
          }
        }
      }
  if (triangles.empty()) throw EmptyLevelError("level set not attained on the lattice");

  LevelSurface surface = detail::start_surface(field, t, "triangulation");
  UnionFind uf(vertices.size());
  for (const auto& tri : triangles) {
    uf.unite(tri[0], tri[1]);
    uf.unite(tri[1], tri[2]);
  }
  std::size_t roots = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (uf.find(v) == v) ++roots;
  surface.components = static_cast<int>(roots);

  const double tol = 1e-13 * std::max(1.0, std::abs(t));
  surface.samples.reserve(triangles.size());
  for (const auto& tri : triangles) {
    const Vec& p0 = vertices[tri[0]];
    const Vec& p1 = vertices[tri[1]];
    const Vec& p2 = vertices[tri[2]];
    const Eigen::Vector3d e1 = (p1 - p0).head<3>(), e2 = (p2 - p0).head<3>();
    const double area = 0.5 * e1.cross(e2).norm();
    if (!(area > 0.0)) continue;
    const Vec centroid = (p0 + p1 + p2) / 3.0;
    Vec x = centroid;
    bool ok = false;
    SurfaceSample s;
    try {
      for (int it = 0; it < 8 && !ok; ++it) {
        const FieldSample fs = field.value_and_gradient(x);
        const double r = fs.u - t;
        if (std::abs(r) <= tol) {
          ok = true;
          break;
        }
        const double g2 = fs.grad.squaredNorm();
        if (!(g2 > 0.0)) break;
        x -= (r / g2) * fs.grad;
        if ((x - centroid).norm() > lat.h) break;
      }
      if (!ok) {
        // Accept when the residual is at the rounding level of the field itself.
        ok = (x - centroid).norm() <= lat.h &&
             std::abs(field.value(x) - t) <= 1e-10 * std::max(1.0, std::abs(t));
      }
      if (ok) {
        FieldSample fs;
        s = sample_geometry(field, x, &fs);
        const double fn = fs.grad.norm();
        s.weight = area * (fn > 0.0 ? area_factor(field.metric().at(x), fs.grad / fn) : 1.0);
      }
    } catch (const SingularPointError&) {
      ok = false;
    }
    if (!ok) {
      surface.excluded_area += area;
      continue;
    }
    surface.samples.push_back(std::move(s));
  }
  detail::finalize_surface(surface, options);
  return surface;
}

}  // namespace lsg
