#include "hextet/core.hpp"

#include <algorithm>
#include <cassert>

namespace hextet {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonManifoldFace: return "NonManifoldFace";
    case Errc::BadDiagonal: return "BadDiagonal";
    case Errc::DanglingVertex: return "DanglingVertex";
    case Errc::NotOpposite: return "NotOpposite";
    case Errc::NotCut: return "NotCut";
    case Errc::DegeneratePrism: return "DegeneratePrism";
    case Errc::DifferentOrientationPair: return "DifferentOrientationPair";
    case Errc::NotFiveEligible: return "NotFiveEligible";
    case Errc::IllegalConfig: return "IllegalConfig";
    case Errc::FlipBreaksMarkedNeighbor: return "FlipBreaksMarkedNeighbor";
    case Errc::UnresolvedDegenerate: return "UnresolvedDegenerate";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedElement: return "UnsupportedElement";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

FaceKey FaceKey::of(std::array<VertexId, 4> ids) {
  std::sort(ids.begin(), ids.end());
  return FaceKey{ids};
}

int opposite_face(int local_face) {
  assert(local_face >= 0 && local_face < kFacesPerHex);
  return kOppositeFace[static_cast<std::size_t>(local_face)];
}

std::array<int, 2> local_diagonal(int local_face, int bit) {
  assert(bit == 0 || bit == 1);
  const auto& q = kFaceCycle[static_cast<std::size_t>(local_face)];
  // the two diagonals join opposite corners of the cycle; both endpoints of a
  // diagonal always fall in the same parity class
  std::array<int, 2> d02{std::min(q[0], q[2]), std::max(q[0], q[2])};
  std::array<int, 2> d13{std::min(q[1], q[3]), std::max(q[1], q[3])};
  const bool d02_is_a = kInClassA[static_cast<std::size_t>(d02[0])];
  if (bit == 0) return d02_is_a ? d02 : d13;
  return d02_is_a ? d13 : d02;
}

int diagonal_bit(int local_face, int va, int vb) {
  for (int bit : {0, 1}) {
    auto d = local_diagonal(local_face, bit);
    if ((d[0] == va && d[1] == vb) || (d[0] == vb && d[1] == va)) return bit;
  }
  return -1;
}

FaceKey HexCell::face_key(int local_face) const {
  const auto& q = kFaceCycle[static_cast<std::size_t>(local_face)];
  return FaceKey::of({verts[static_cast<std::size_t>(q[0])], verts[static_cast<std::size_t>(q[1])],
                      verts[static_cast<std::size_t>(q[2])],
                      verts[static_cast<std::size_t>(q[3])]});
}

VertexPair HexCell::global_diagonal(int local_face, int bit) const {
  auto d = local_diagonal(local_face, bit);
  return VertexPair::of(verts[static_cast<std::size_t>(d[0])],
                        verts[static_cast<std::size_t>(d[1])]);
}

int HexCell::bit_of_global_diagonal(int local_face, VertexPair d) const {
  for (int bit : {0, 1})
    if (global_diagonal(local_face, bit) == d) return bit;
  return -1;
}

CutState HexComplex::cut_state(const FaceKey& key) const {
  auto it = cuts.find(key);
  if (it == cuts.end()) return CutState{};
  return CutState{it->second};
}

void HexComplex::set_cut(const FaceKey& key, VertexPair diagonal) { cuts[key] = diagonal; }

std::vector<FaceKey> HexComplex::face_keys_in_order() const {
  std::vector<FaceKey> keys;
  keys.reserve(adjacency.size());
  for (const auto& hex : hexes) {
    for (int lf = 0; lf < kFacesPerHex; ++lf) {
      FaceKey key = hex.face_key(lf);
      auto it = adjacency.find(key);
      // first-owner test keeps the enumeration deterministic and duplicate free
      if (it != adjacency.end() && it->second.hex[0] == static_cast<std::int32_t>(hex.id) &&
          it->second.local_face[0] == static_cast<std::int8_t>(lf)) {
        keys.push_back(key);
      }
    }
  }
  return keys;
}

std::size_t HexComplex::interior_face_count() const {
  std::size_t n = 0;
  for (const auto& [key, inc] : adjacency)
    if (inc.count == 2) ++n;
  return n;
}

std::optional<std::pair<std::uint32_t, int>> HexComplex::neighbor_across(std::uint32_t hex_id,
                                                                         int local_face) const {
  FaceKey key = hexes[hex_id].face_key(local_face);
  auto it = adjacency.find(key);
  if (it == adjacency.end()) return std::nullopt;
  const FaceIncidence& inc = it->second;
  for (int s = 0; s < inc.count; ++s) {
    if (inc.hex[static_cast<std::size_t>(s)] != static_cast<std::int32_t>(hex_id))
      return std::make_pair(static_cast<std::uint32_t>(inc.hex[static_cast<std::size_t>(s)]),
                            static_cast<int>(inc.local_face[static_cast<std::size_t>(s)]));
  }
  return std::nullopt;
}

HexComplex build_complex(std::vector<Point3> points,
                         const std::vector<std::array<VertexId, 8>>& hex_vertex_lists,
                         const std::vector<CutPrescription>& prescriptions) {
  HexComplex cx;
  cx.points = std::move(points);
  cx.hexes.reserve(hex_vertex_lists.size());
  cx.adjacency.reserve(hex_vertex_lists.size() * 4);

  const VertexId npts = static_cast<VertexId>(cx.points.size());
  for (std::size_t h = 0; h < hex_vertex_lists.size(); ++h) {
    const auto& verts = hex_vertex_lists[h];
    for (VertexId v : verts)
      if (v >= npts)
        fail(Errc::DanglingVertex, "hex " + std::to_string(h) + " references vertex " +
                                       std::to_string(v) + " of " + std::to_string(npts));
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        if (verts[static_cast<std::size_t>(i)] == verts[static_cast<std::size_t>(j)])
          fail(Errc::DanglingVertex, "hex " + std::to_string(h) + " repeats vertex " +
                                         std::to_string(verts[static_cast<std::size_t>(i)]));
    HexCell cell{static_cast<std::uint32_t>(h), verts};
    for (int lf = 0; lf < kFacesPerHex; ++lf) {
      FaceKey key = cell.face_key(lf);
      FaceIncidence& inc = cx.adjacency[key];
      if (inc.count == 2)
        fail(Errc::NonManifoldFace, "face shared by more than two hexes at hex " +
                                        std::to_string(h));
      inc.hex[static_cast<std::size_t>(inc.count)] = static_cast<std::int32_t>(h);
      inc.local_face[static_cast<std::size_t>(inc.count)] = static_cast<std::int8_t>(lf);
      ++inc.count;
    }
    cx.hexes.push_back(cell);
  }

  for (const auto& p : prescriptions) {
    FaceKey key = FaceKey::of(p.face);
    auto it = cx.adjacency.find(key);
    if (it == cx.adjacency.end())
      fail(Errc::BadDiagonal, "prescription names a face that is not in the mesh");
    const FaceIncidence& inc = it->second;
    const HexCell& owner = cx.hexes[static_cast<std::size_t>(inc.hex[0])];
    VertexPair d = VertexPair::of(p.diagonal[0], p.diagonal[1]);
    if (owner.bit_of_global_diagonal(inc.local_face[0], d) < 0)
      fail(Errc::BadDiagonal, "prescribed pair {" + std::to_string(d.a) + "," +
                                  std::to_string(d.b) + "} is not a diagonal of the face");
    auto prev = cx.cuts.find(key);
    if (prev != cx.cuts.end() && prev->second != d)
      fail(Errc::BadDiagonal, "conflicting prescriptions for one face");
    cx.cuts[key] = d;
  }

  cx.marked.assign(cx.hexes.size(), 0);
  return cx;
}

PairRelation pair_orientation_relation(const HexCell& hex, int face_a, VertexPair cut_a,
                                       int face_b, VertexPair cut_b) {
  if (opposite_face(face_a) != face_b)
    fail(Errc::NotOpposite, "faces " + std::to_string(face_a) + " and " + std::to_string(face_b) +
                                " are not opposite");
  int bit_a = hex.bit_of_global_diagonal(face_a, cut_a);
  int bit_b = hex.bit_of_global_diagonal(face_b, cut_b);
  if (bit_a < 0 || bit_b < 0) fail(Errc::BadDiagonal, "cut is not a diagonal of its face");
  // Same <=> the two diagonals lie in different parity classes <=> their four
  // endpoints span a diagonal rectangle of the cube
  return bit_a != bit_b ? PairRelation::Same : PairRelation::Different;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Marching6: return "marching6";
    case Method::PrismSplit6: return "prism_split6";
    case Method::Five: return "five";
    case Method::Steiner12: return "steiner12";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& s) {
  for (Method m : {Method::Marching6, Method::PrismSplit6, Method::Five, Method::Steiner12})
    if (s == method_name(m)) return m;
  return std::nullopt;
}

}  // namespace hextet
