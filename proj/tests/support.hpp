#ifndef HEXTET_TESTS_SUPPORT_HPP
#define HEXTET_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "hextet/core.hpp"
#include "hextet/driver.hpp"
#include "hextet/verify.hpp"

namespace hextet::testing {

struct GridInput {
  std::vector<Point3> points;
  std::vector<std::array<VertexId, 8>> hexes;
};

/// Structured nx*ny*nz grid of unit cubes, canonical binary vertex ordering.
inline GridInput make_grid(int nx, int ny, int nz) {
  GridInput g;
  auto vid = [&](int i, int j, int k) {
    return static_cast<VertexId>(i + (nx + 1) * (j + (ny + 1) * k));
  };
  g.points.resize(static_cast<std::size_t>((nx + 1) * (ny + 1) * (nz + 1)));
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i)
        g.points[vid(i, j, k)] = Point3{double(i), double(j), double(k)};
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        g.hexes.push_back({vid(i, j, k), vid(i + 1, j, k), vid(i + 1, j + 1, k), vid(i, j + 1, k),
                           vid(i, j, k + 1), vid(i + 1, j, k + 1), vid(i + 1, j + 1, k + 1),
                           vid(i, j + 1, k + 1)});
  return g;
}

inline HexComplex unit_cube_complex(const std::vector<CutPrescription>& cuts = {}) {
  GridInput g = make_grid(1, 1, 1);
  return build_complex(g.points, g.hexes, cuts);
}

/// The Fig-8 style degenerate prescription on the single grid cube: two fully
/// cut Different pairs in opposite parity classes, no diagonals meeting.
inline std::vector<CutPrescription> fig8_cuts() {
  GridInput g = make_grid(1, 1, 1);
  HexCell cell{0, g.hexes[0]};
  std::vector<CutPrescription> out;
  const int faces[4] = {0, 1, 2, 4};
  const int bits[4] = {0, 0, 1, 1};
  for (int i = 0; i < 4; ++i) {
    VertexPair d = cell.global_diagonal(faces[i], bits[i]);
    out.push_back({cell.face_key(faces[i]).v, {d.a, d.b}});
  }
  return out;
}

/// Solid square torus of four trapezoidal hexes; each hex shares an opposite
/// face pair with its two ring neighbors.
struct TorusInput {
  std::vector<Point3> points;
  std::vector<std::array<VertexId, 8>> hexes;
  std::array<FaceKey, 4> ring_faces;  // ring_faces[k] joins hex k-1 and hex k
};

inline TorusInput make_torus4() {
  TorusInput t;
  const double O[4][2] = {{0, 0}, {3, 0}, {3, 3}, {0, 3}};
  const double I[4][2] = {{1, 1}, {2, 1}, {2, 2}, {1, 2}};
  for (int z = 0; z <= 1; ++z) {
    for (const auto& c : O) t.points.push_back({c[0], c[1], double(z)});
    for (const auto& c : I) t.points.push_back({c[0], c[1], double(z)});
  }
  auto ob = [](int i) { return static_cast<VertexId>(i % 4); };
  auto ib = [](int i) { return static_cast<VertexId>(4 + i % 4); };
  auto ot = [](int i) { return static_cast<VertexId>(8 + i % 4); };
  auto it = [](int i) { return static_cast<VertexId>(12 + i % 4); };
  for (int k = 0; k < 4; ++k)
    t.hexes.push_back({ob(k), ob(k + 1), ib(k + 1), ib(k), ot(k), ot(k + 1), it(k + 1), it(k)});
  for (int k = 0; k < 4; ++k)
    t.ring_faces[static_cast<std::size_t>(k)] = FaceKey::of({ob(k), ib(k), ot(k), it(k)});
  return t;
}

/// Ring cuts in alternating types so every hex sees its ring pair Different
/// (possible because the ring has even length).
inline std::vector<CutPrescription> torus_ring_cuts(const TorusInput& t) {
  std::vector<CutPrescription> cuts;
  for (int k = 0; k < 4; ++k) {
    const auto& f = t.ring_faces[static_cast<std::size_t>(k)].v;
    VertexId o_b = static_cast<VertexId>(k % 4), i_b = static_cast<VertexId>(4 + k % 4);
    VertexId o_t = static_cast<VertexId>(8 + k % 4), i_t = static_cast<VertexId>(12 + k % 4);
    std::array<VertexId, 2> d = (k % 2 == 0) ? std::array<VertexId, 2>{o_b, i_t}
                                             : std::array<VertexId, 2>{i_b, o_t};
    cuts.push_back({f, d});
  }
  return cuts;
}

inline std::vector<RPoint> to_rpoints(const std::vector<Point3>& pts) {
  std::vector<RPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(RPoint::from(p));
  return out;
}

inline std::vector<Tetra> to_tetras(const std::vector<LocalTet>& local,
                                    const std::array<VertexId, 8>& verts,
                                    VertexId steiner = 0) {
  std::vector<Tetra> out;
  for (const auto& lt : local) {
    Tetra t;
    for (int k = 0; k < 4; ++k)
      t.v[static_cast<std::size_t>(k)] = lt[static_cast<std::size_t>(k)] == 8
                                             ? steiner
                                             : verts[lt[static_cast<std::size_t>(k)]];
    out.push_back(t);
  }
  return out;
}

/// Deterministic random prescriptions: sample distinct faces, random diagonal.
inline std::vector<CutPrescription> random_cuts(const HexComplex& cx, std::size_t n,
                                                std::uint64_t seed) {
  std::vector<FaceKey> keys = cx.face_keys_in_order();
  std::sort(keys.begin(), keys.end());
  std::mt19937_64 rng(seed);
  for (std::size_t i = keys.size() - 1; i > 0; --i)
    std::swap(keys[i], keys[rng() % (i + 1)]);
  keys.resize(n);
  std::vector<CutPrescription> cuts;
  for (const FaceKey& key : keys) {
    const FaceIncidence& inc = cx.adjacency.at(key);
    const HexCell& owner = cx.hexes[static_cast<std::size_t>(inc.hex[0])];
    VertexPair d = owner.global_diagonal(inc.local_face[0], static_cast<int>(rng() % 2));
    cuts.push_back({key.v, {d.a, d.b}});
  }
  return cuts;
}

}  // namespace hextet::testing

#endif
