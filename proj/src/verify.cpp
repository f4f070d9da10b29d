#include "hextet/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hextet {

namespace {

struct RVec {
  Rational x, y, z;
};

RVec sub(const RPoint& a, const RPoint& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
RVec cross(const RVec& a, const RVec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Rational dot(const RVec& a, const RVec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
bool is_zero(const RVec& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

using Tri = std::array<VertexId, 3>;
Tri tri_key(VertexId a, VertexId b, VertexId c) {
  Tri t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::array<Tri, 4> tet_tris(const Tetra& t) {
  return {tri_key(t.v[0], t.v[1], t.v[2]), tri_key(t.v[0], t.v[1], t.v[3]),
          tri_key(t.v[0], t.v[2], t.v[3]), tri_key(t.v[1], t.v[2], t.v[3])};
}

Rational tri_origin_volume(const RPoint& a, const RPoint& b, const RPoint& c) {
  // signed volume of the tet (origin, a, b, c), for boundary integrals
  return (a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
          a.z * (b.x * c.y - b.y * c.x)) /
         6;
}

std::string tri_str(const Tri& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

// outward-oriented boundary triangles of a region with fully cut quad faces
struct BoundaryTri {
  std::array<VertexId, 3> oriented;
  int face;  // owning quad/cap index for per-face matching
};

std::vector<BoundaryTri> hex_boundary(const std::array<VertexId, 8>& hv,
                                      const HexCutConfig& completed) {
  std::vector<BoundaryTri> out;
  out.reserve(12);
  for (int f = 0; f < kFacesPerHex; ++f) {
    const auto& q = kFaceCycle[static_cast<std::size_t>(f)];
    auto d = local_diagonal(f, completed.face[static_cast<std::size_t>(f)]);
    auto emit = [&](int a, int b, int c) {
      out.push_back({{hv[static_cast<std::size_t>(a)], hv[static_cast<std::size_t>(b)],
                      hv[static_cast<std::size_t>(c)]},
                     f});
    };
    if ((std::min(q[0], q[2]) == d[0] && std::max(q[0], q[2]) == d[1])) {
      emit(q[0], q[1], q[2]);
      emit(q[0], q[2], q[3]);
    } else {
      emit(q[1], q[2], q[3]);
      emit(q[1], q[3], q[0]);
    }
  }
  return out;
}

std::vector<BoundaryTri> prism_boundary(const Prism& p, const std::array<VertexPair, 3>& cuts) {
  std::vector<BoundaryTri> out;
  // caps, outward: bottom seen from below is the reverse of the stored cycle
  out.push_back({{p.bottom[2], p.bottom[1], p.bottom[0]}, 3});
  out.push_back({{p.top[0], p.top[1], p.top[2]}, 4});
  for (int i = 0; i < 3; ++i) {
    auto q = p.side_quad(i);
    const VertexPair d = cuts[static_cast<std::size_t>(i)];
    if (d == VertexPair::of(q[0], q[2])) {
      out.push_back({{q[0], q[1], q[2]}, i});
      out.push_back({{q[0], q[2], q[3]}, i});
    } else if (d == VertexPair::of(q[1], q[3])) {
      out.push_back({{q[1], q[2], q[3]}, i});
      out.push_back({{q[1], q[3], q[0]}, i});
    } else {
      fail(Errc::BadDiagonal, "prism side cut is not a diagonal of side " + std::to_string(i));
    }
  }
  return out;
}

TilingReport certify_region(std::span<const Tetra> tets, std::span<const RPoint> pts,
                            const std::vector<BoundaryTri>& boundary,
                            const std::set<VertexId>& allowed_verts) {
  TilingReport rep;
  rep.volume_ok = rep.face_matching_ok = rep.boundary_match_ok = true;

  // region volume by the divergence theorem over the boundary triangulation
  Rational region_vol = 0;
  std::set<Tri> allowed;
  for (const auto& bt : boundary) {
    region_vol += tri_origin_volume(pts[bt.oriented[0]], pts[bt.oriented[1]], pts[bt.oriented[2]]);
    allowed.insert(tri_key(bt.oriented[0], bt.oriented[1], bt.oriented[2]));
  }

  Rational tet_vol = 0;
  for (const auto& t : tets) {
    for (VertexId v : t.v)
      if (!allowed_verts.count(v)) {
        rep.face_matching_ok = false;
        rep.offending.push_back("tet uses vertex " + std::to_string(v) +
                                " outside the region");
      }
    Rational sv = signed_volume(t, pts);
    if (sv == 0) {
      rep.volume_ok = false;
      rep.offending.push_back("zero-volume tet");
    }
    tet_vol += abs(sv);
  }
  if (tet_vol != region_vol) {
    rep.volume_ok = false;
    rep.offending.push_back("tet volumes do not sum to the region volume");
  }

  std::map<Tri, int> count;
  for (const auto& t : tets)
    for (const auto& tr : tet_tris(t)) ++count[tr];
  for (const auto& [tr, n] : count) {
    const bool on_boundary = allowed.count(tr) > 0;
    if (on_boundary && n != 1) {
      rep.boundary_match_ok = false;
      rep.offending.push_back("boundary triangle " + tri_str(tr) + " used " + std::to_string(n) +
                              " times");
    }
    if (!on_boundary && n != 2) {
      rep.face_matching_ok = false;
      rep.offending.push_back("interior triangle " + tri_str(tr) + " shared by " +
                              std::to_string(n) + " tets");
    }
  }
  for (const auto& tr : allowed)
    if (!count.count(tr)) {
      rep.boundary_match_ok = false;
      rep.offending.push_back("boundary triangle " + tri_str(tr) + " missing");
    }

  for (std::size_t i = 0; i < tets.size(); ++i)
    for (std::size_t j = i + 1; j < tets.size(); ++j)
      if (!tets_interior_disjoint(tets[i], tets[j], pts)) {
        rep.face_matching_ok = false;
        rep.offending.push_back("tets " + std::to_string(i) + " and " + std::to_string(j) +
                                " overlap");
      }
  return rep;
}

}  // namespace

RPoint RPoint::from(const Point3& p) {
  // rational-from-double is exact: every finite double is a dyadic rational
  return RPoint{Rational(p.x), Rational(p.y), Rational(p.z)};
}

Rational signed_volume(const Tetra& t, std::span<const RPoint> points) {
  const RPoint& a = points[t.v[0]];
  RVec e1 = sub(points[t.v[1]], a);
  RVec e2 = sub(points[t.v[2]], a);
  RVec e3 = sub(points[t.v[3]], a);
  return dot(e1, cross(e2, e3)) / 6;
}

bool tets_interior_disjoint(const Tetra& a, const Tetra& b, std::span<const RPoint> points) {
  const std::array<const RPoint*, 4> pa{&points[a.v[0]], &points[a.v[1]], &points[a.v[2]],
                                        &points[a.v[3]]};
  const std::array<const RPoint*, 4> pb{&points[b.v[0]], &points[b.v[1]], &points[b.v[2]],
                                        &points[b.v[3]]};
  auto separated_on = [&](const RVec& axis) {
    if (is_zero(axis)) return false;
    Rational amin, amax, bmin, bmax;
    for (int i = 0; i < 4; ++i) {
      Rational s = axis.x * pa[static_cast<std::size_t>(i)]->x +
                   axis.y * pa[static_cast<std::size_t>(i)]->y +
                   axis.z * pa[static_cast<std::size_t>(i)]->z;
      if (i == 0) amin = amax = s;
      else { amin = std::min(amin, s); amax = std::max(amax, s); }
      Rational r = axis.x * pb[static_cast<std::size_t>(i)]->x +
                   axis.y * pb[static_cast<std::size_t>(i)]->y +
                   axis.z * pb[static_cast<std::size_t>(i)]->z;
      if (i == 0) bmin = bmax = r;
      else { bmin = std::min(bmin, r); bmax = std::max(bmax, r); }
    }
    return amax <= bmin || bmax <= amin;  // touching counts as disjoint interiors
  };

  static constexpr int kFaces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& pv : {pa, pb})
    for (const auto& f : kFaces) {
      RVec n = cross(sub(*pv[f[1]], *pv[f[0]]), sub(*pv[f[2]], *pv[f[0]]));
      if (separated_on(n)) return true;
    }
  static constexpr int kEdges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (const auto& ea : kEdges) {
    RVec da = sub(*pa[ea[1]], *pa[ea[0]]);
    for (const auto& eb : kEdges) {
      RVec db = sub(*pb[eb[1]], *pb[eb[0]]);
      if (separated_on(cross(da, db))) return true;
    }
  }
  return false;
}

TilingReport certify_hex_tiling(std::span<const Tetra> tets, std::span<const RPoint> points,
                                const std::array<VertexId, 8>& hex_verts,
                                const HexCutConfig& completed, std::optional<VertexId> steiner) {
  if (!completed.fully_cut()) fail(Errc::IllegalConfig, "certification needs a fully cut config");
  std::set<VertexId> allowed(hex_verts.begin(), hex_verts.end());
  if (steiner) allowed.insert(*steiner);
  return certify_region(tets, points, hex_boundary(hex_verts, completed), allowed);
}

TilingReport certify_prism_tiling(std::span<const Tetra> tets, std::span<const RPoint> points,
                                  const Prism& prism, const std::array<VertexPair, 3>& cuts) {
  std::set<VertexId> allowed(prism.bottom.begin(), prism.bottom.end());
  allowed.insert(prism.top.begin(), prism.top.end());
  return certify_region(tets, points, prism_boundary(prism, cuts), allowed);
}

// ---- reference-cube oracle ----

namespace {

const std::array<RPoint, 8>& cube_points() {
  static const std::array<RPoint, 8> pts = [] {
    std::array<RPoint, 8> p{};
    constexpr int c[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                             {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    for (int i = 0; i < 8; ++i) p[static_cast<std::size_t>(i)] = {c[i][0], c[i][1], c[i][2]};
    return p;
  }();
  return pts;
}

struct TilingSearch {
  std::span<const RPoint> pts;
  std::vector<Tetra> candidates;
  std::set<Tri> allowed_boundary;
  Rational target_volume;
  std::vector<std::vector<Tetra>> found;

  void run() {
    std::vector<Tetra> chosen;
    std::map<Tri, int> count;
    rec(chosen, count, Rational(0));
  }

  void rec(std::vector<Tetra>& chosen, std::map<Tri, int>& count, Rational vol) {
    // first unmet boundary triangle, else first half-open interior triangle
    const Tri* need = nullptr;
    for (const auto& tr : allowed_boundary)
      if (!count.count(tr)) {
        need = &tr;
        break;
      }
    if (!need)
      for (const auto& [tr, n] : count)
        if (n == 1 && !allowed_boundary.count(tr)) {
          need = &tr;
          break;
        }
    if (!need) {
      if (vol == target_volume) found.push_back(chosen);
      return;
    }
    for (const auto& cand : candidates) {
      bool contains = true;
      for (VertexId v : *need)
        if (std::find(cand.v.begin(), cand.v.end(), v) == cand.v.end()) contains = false;
      if (!contains) continue;
      if (std::find_if(chosen.begin(), chosen.end(), [&](const Tetra& t) {
            return t.v == cand.v;
          }) != chosen.end())
        continue;
      Rational v = abs(signed_volume(cand, pts));
      if (vol + v > target_volume) continue;
      bool ok = true;
      for (const auto& tr : tet_tris(cand)) {
        const int limit = allowed_boundary.count(tr) ? 1 : 2;
        if (count[tr] + 1 > limit) ok = false;
      }
      if (ok)
        for (const auto& t : chosen)
          if (!tets_interior_disjoint(cand, t, pts)) {
            ok = false;
            break;
          }
      if (!ok) continue;
      for (const auto& tr : tet_tris(cand)) ++count[tr];
      chosen.push_back(cand);
      rec(chosen, count, vol + v);
      chosen.pop_back();
      for (const auto& tr : tet_tris(cand)) {
        auto it = count.find(tr);
        if (--it->second == 0) count.erase(it);
      }
    }
  }
};

int face_of_triangle(const Tri& t) {
  for (int f = 0; f < kFacesPerHex; ++f) {
    const auto& q = kFaceCycle[static_cast<std::size_t>(f)];
    int hit = 0;
    for (VertexId v : t)
      for (int x : q)
        if (static_cast<VertexId>(x) == v) ++hit;
    if (hit == 3) return f;
  }
  return -1;
}

}  // namespace

ConfigClass brute_force_cube(int config_bits) {
  const auto& pts = cube_points();
  HexCutConfig cfg = HexCutConfig::from_bits(config_bits);

  std::set<Tri> allowed;
  constexpr std::array<VertexId, 8> ident{0, 1, 2, 3, 4, 5, 6, 7};
  for (const auto& bt : hex_boundary(ident, cfg))
    allowed.insert(tri_key(bt.oriented[0], bt.oriented[1], bt.oriented[2]));

  TilingSearch search;
  search.pts = pts;
  search.allowed_boundary = allowed;
  search.target_volume = 1;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d) {
          Tetra t{{static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c),
                   static_cast<VertexId>(d)}};
          if (signed_volume(t, pts) == 0) continue;  // 12 coplanar quadruples drop out
          bool compatible = true;
          for (const auto& tr : tet_tris(t))
            if (face_of_triangle(tr) >= 0 && !allowed.count(tr)) compatible = false;
          if (compatible) search.candidates.push_back(t);
        }
  search.run();

  ConfigClass out;
  out.config = config_bits;
  for (const auto& tiling : search.found) {
    if (tiling.size() == 5) ++out.five_tilings;
    if (tiling.size() == 6) ++out.six_tilings;
  }
  const bool five = out.five_tilings > 0, six = out.six_tilings > 0;
  out.verdict = five && six ? ConfigVerdict::BothOK
                : five      ? ConfigVerdict::FiveOK
                : six       ? ConfigVerdict::SixOK
                            : ConfigVerdict::DegenerateOnly;
  return out;
}

std::array<ConfigClass, 64> classify_all_64() {
  std::array<ConfigClass, 64> out{};
  for (int c = 0; c < 64; ++c) out[static_cast<std::size_t>(c)] = brute_force_cube(c);
  return out;
}

const char* verdict_name(ConfigVerdict v) {
  switch (v) {
    case ConfigVerdict::FiveOK: return "FiveOK";
    case ConfigVerdict::SixOK: return "SixOK";
    case ConfigVerdict::BothOK: return "BothOK";
    case ConfigVerdict::DegenerateOnly: return "DegenerateOnly";
  }
  return "?";
}

std::string classification_csv() {
  std::ostringstream os;
  os << "config,verdict\n";
  for (const auto& c : classify_all_64()) {
    for (int f = 0; f < 6; ++f) os << ((c.config >> f) & 1);
    os << "," << verdict_name(c.verdict) << "\n";
  }
  return os.str();
}

PrismBruteResult brute_force_prism(std::array<Orientation, 3> orients) {
  static const std::array<RPoint, 6> pts = {RPoint{0, 0, 0}, RPoint{1, 0, 0}, RPoint{0, 1, 0},
                                            RPoint{0, 0, 1}, RPoint{1, 0, 1}, RPoint{0, 1, 1}};
  const Prism local{{0, 1, 2}, {3, 4, 5}};
  std::array<VertexPair, 3> cuts{};
  for (int i = 0; i < 3; ++i)
    cuts[static_cast<std::size_t>(i)] = side_diagonal(local, i, orients[static_cast<std::size_t>(i)]);

  std::set<Tri> allowed;
  for (const auto& bt : prism_boundary(local, cuts))
    allowed.insert(tri_key(bt.oriented[0], bt.oriented[1], bt.oriented[2]));

  TilingSearch search;
  search.pts = pts;
  search.allowed_boundary = allowed;
  search.target_volume = Rational(1) / 2;
  auto on_prism_face = [&](const Tri& t) {
    static const std::array<std::set<VertexId>, 5> faces = [&] {
      std::array<std::set<VertexId>, 5> fs;
      fs[0] = {0, 1, 2};
      fs[1] = {3, 4, 5};
      for (int i = 0; i < 3; ++i) {
        auto q = local.side_quad(i);
        fs[static_cast<std::size_t>(2 + i)] = {q[0], q[1], q[2], q[3]};
      }
      return fs;
    }();
    for (const auto& f : faces)
      if (std::all_of(t.begin(), t.end(), [&](VertexId v) { return f.count(v) > 0; })) return true;
    return false;
  };
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          Tetra t{{static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c),
                   static_cast<VertexId>(d)}};
          if (signed_volume(t, pts) == 0) continue;
          bool compatible = true;
          for (const auto& tr : tet_tris(t))
            if (on_prism_face(tr) && !allowed.count(tr)) compatible = false;
          if (compatible) search.candidates.push_back(t);
        }
  search.run();

  PrismBruteResult out;
  out.verdict = search.found.empty() ? PrismClass::Degenerate : PrismClass::Valid;
  for (const auto& tiling : search.found) {
    std::array<std::array<std::uint8_t, 4>, 3> w{};
    for (std::size_t i = 0; i < 3 && i < tiling.size(); ++i)
      for (int k = 0; k < 4; ++k)
        w[i][static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(tiling[i].v[static_cast<std::size_t>(k)]);
    out.witnesses.push_back(w);
  }
  return out;
}

std::span<const std::array<std::uint8_t, 8>> cube_symmetries() {
  static const std::vector<std::array<std::uint8_t, 8>> perms = [] {
    constexpr int c[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                             {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    auto index_of = [&](int x, int y, int z) {
      for (int i = 0; i < 8; ++i)
        if (c[i][0] == x && c[i][1] == y && c[i][2] == z) return i;
      return -1;
    };
    std::vector<std::array<std::uint8_t, 8>> out;
    int axes[3] = {0, 1, 2};
    std::sort(axes, axes + 3);
    do {
      for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy)
          for (int sz = 0; sz < 2; ++sz) {
            std::array<std::uint8_t, 8> perm{};
            for (int v = 0; v < 8; ++v) {
              int in[3] = {c[v][0], c[v][1], c[v][2]};
              int q[3] = {in[axes[0]], in[axes[1]], in[axes[2]]};
              if (sx) q[0] = 1 - q[0];
              if (sy) q[1] = 1 - q[1];
              if (sz) q[2] = 1 - q[2];
              perm[static_cast<std::size_t>(v)] =
                  static_cast<std::uint8_t>(index_of(q[0], q[1], q[2]));
            }
            out.push_back(perm);
          }
    } while (std::next_permutation(axes, axes + 3));
    return out;
  }();
  return perms;
}

int map_config(int config_bits, const std::array<std::uint8_t, 8>& perm) {
  int out = 0;
  for (int f = 0; f < kFacesPerHex; ++f) {
    auto d = local_diagonal(f, (config_bits >> f) & 1);
    const int a = perm[static_cast<std::size_t>(d[0])];
    const int b = perm[static_cast<std::size_t>(d[1])];
    // the image face is the one containing both image endpoints of the diagonal
    for (int g = 0; g < kFacesPerHex; ++g) {
      const int bit = diagonal_bit(g, a, b);
      if (bit >= 0) out |= bit << g;  // each vertex pair is a diagonal of exactly one face
    }
  }
  return out;
}

MeshCertification certify_mesh(const HexComplex& complex, const TetMesh& mesh) {
  MeshCertification cert;
  cert.conforming = true;

  std::vector<RPoint> pts;
  pts.reserve(mesh.points.size());
  for (const auto& p : mesh.points) pts.push_back(RPoint::from(p));

  // group tets by source hex
  std::vector<std::vector<Tetra>> per_hex(complex.hexes.size());
  std::vector<std::optional<VertexId>> steiner(complex.hexes.size());
  for (std::size_t i = 0; i < mesh.tets.size(); ++i) {
    const std::uint32_t h = mesh.source_hex[i];
    if (h >= complex.hexes.size()) {
      cert.conforming = false;
      cert.failures.push_back("tet with out-of-range source hex");
      continue;
    }
    per_hex[h].push_back(mesh.tets[i]);
    for (VertexId v : mesh.tets[i].v)
      if (v >= mesh.original_point_count) steiner[h] = v;
  }

  cert.tet_volume = 0;
  cert.hex_volume = 0;
  for (std::size_t h = 0; h < complex.hexes.size(); ++h) {
    HexCutConfig cfg;
    bool complete = true;
    for (int f = 0; f < kFacesPerHex; ++f) {
      auto st = complex.cut_state(complex.hexes[h].face_key(f));
      if (!st.is_cut()) {
        complete = false;
        break;
      }
      int bit = complex.hexes[h].bit_of_global_diagonal(f, *st.diagonal);
      if (bit < 0) {
        complete = false;
        break;
      }
      cfg.face[static_cast<std::size_t>(f)] = static_cast<std::int8_t>(bit);
    }
    if (!complete) {
      cert.conforming = false;
      cert.failures.push_back("hex " + std::to_string(h) + " has uncut faces after conversion");
      continue;
    }
    TilingReport rep = certify_hex_tiling(per_hex[h], pts, complex.hexes[h].verts, cfg,
                                          steiner[h]);
    if (!rep.ok()) {
      cert.conforming = false;
      for (const auto& s : rep.offending)
        cert.failures.push_back("hex " + std::to_string(h) + ": " + s);
    }
    for (const auto& t : per_hex[h]) cert.tet_volume += abs(signed_volume(t, pts));
    for (const auto& bt : hex_boundary(complex.hexes[h].verts, cfg))
      cert.hex_volume +=
          tri_origin_volume(pts[bt.oriented[0]], pts[bt.oriented[1]], pts[bt.oriented[2]]);
  }
  cert.volume_ok = cert.tet_volume == cert.hex_volume;

  // global face matching: interior triangles twice, boundary once
  std::map<Tri, int> count;
  for (const auto& t : mesh.tets)
    for (const auto& tr : tet_tris(t)) ++count[tr];
  for (const auto& [tr, n] : count) {
    if (n > 2) {
      cert.conforming = false;
      cert.failures.push_back("triangle " + tri_str(tr) + " incident to " + std::to_string(n) +
                              " tets");
    }
  }
  return cert;
}

}  // namespace hextet
