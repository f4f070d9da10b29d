#ifndef HEXTET_CORE_HPP
#define HEXTET_CORE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hextet/error.hpp"

namespace hextet {

using VertexId = std::uint32_t;

struct Point3 {
  double x{}, y{}, z{};
};

/// Unordered vertex pair, stored with a < b.
struct VertexPair {
  VertexId a{}, b{};
  static VertexPair of(VertexId x, VertexId y) {
    return x < y ? VertexPair{x, y} : VertexPair{y, x};
  }
  bool contains(VertexId v) const { return v == a || v == b; }
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Canonical identifier of a quad face: its vertex set, sorted.
/// At most 2 hexes share a key in a manifold complex.
struct FaceKey {
  std::array<VertexId, 4> v{};
  static FaceKey of(std::array<VertexId, 4> ids);
  friend bool operator==(const FaceKey&, const FaceKey&) = default;
  friend auto operator<=>(const FaceKey&, const FaceKey&) = default;
};

struct FaceKeyHash {
  std::size_t operator()(const FaceKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (VertexId x : k.v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Local vertex ordering: unit-cube binary convention.
//   v0=(0,0,0) v1=(1,0,0) v2=(1,1,0) v3=(0,1,0)
//   v4=(0,0,1) v5=(1,0,1) v6=(1,1,1) v7=(0,1,1)
// Local faces, outward-oriented quads.
inline constexpr int kFacesPerHex = 6;
inline constexpr std::array<std::array<int, 4>, 6> kFaceCycle{{
    {0, 3, 2, 1},  // 0 bottom
    {4, 5, 6, 7},  // 1 top
    {0, 1, 5, 4},  // 2 front
    {1, 2, 6, 5},  // 3 right
    {2, 3, 7, 6},  // 4 back
    {3, 0, 4, 7},  // 5 left
}};
inline constexpr std::array<int, 6> kOppositeFace{1, 0, 4, 5, 2, 3};
/// The three opposite face pairs: (bottom,top), (front,back), (right,left).
inline constexpr std::array<std::array<int, 2>, 3> kFacePairs{{{0, 1}, {2, 4}, {3, 5}}};

/// Parity class A = {v0,v2,v5,v7}: the vertex set of one inscribed tetrahedron.
/// Each face has exactly one diagonal inside each class.
inline constexpr std::array<bool, 8> kInClassA{true, false, true, false, false, true, false, true};

/// The unique local face sharing no vertices with the given one.
int opposite_face(int local_face);

/// Local diagonal of a face; bit 0 selects the class-A diagonal, bit 1 class-B.
std::array<int, 2> local_diagonal(int local_face, int bit);

/// Inverse of local_diagonal: -1 if the pair is not a diagonal of the face.
int diagonal_bit(int local_face, int va, int vb);

struct HexCell {
  std::uint32_t id{};
  std::array<VertexId, 8> verts{};

  FaceKey face_key(int local_face) const;
  VertexPair global_diagonal(int local_face, int bit) const;
  /// -1 if the global pair is not a diagonal of that face of this hex.
  int bit_of_global_diagonal(int local_face, VertexPair d) const;
};

/// Uncut, or cut along one of the quad's two diagonals.
struct CutState {
  std::optional<VertexPair> diagonal;
  bool is_cut() const { return diagonal.has_value(); }
};

struct FaceIncidence {
  std::array<std::int32_t, 2> hex{-1, -1};
  std::array<std::int8_t, 2> local_face{-1, -1};
  int count = 0;
};

/// A hexahedral complex: vertices, cells, face adjacency and per-face cut
/// state. Cut state lives on canonical face keys, so two hexes sharing a face
/// always observe the same diagonal (conformity is structural).
class HexComplex {
 public:
  std::vector<Point3> points;
  std::vector<HexCell> hexes;
  std::unordered_map<FaceKey, VertexPair, FaceKeyHash> cuts;
  std::unordered_map<FaceKey, FaceIncidence, FaceKeyHash> adjacency;
  std::vector<std::uint8_t> marked;

  CutState cut_state(const FaceKey& key) const;
  void set_cut(const FaceKey& key, VertexPair diagonal);

  /// Face keys in deterministic order: by (owning hex id, local face), first
  /// occurrence only.  Never iterate the hash maps for output.
  std::vector<FaceKey> face_keys_in_order() const;
  std::size_t interior_face_count() const;

  /// Other hex incident to the face, if any.
  std::optional<std::pair<std::uint32_t, int>> neighbor_across(std::uint32_t hex_id,
                                                               int local_face) const;
};

struct CutPrescription {
  std::array<VertexId, 4> face{};
  std::array<VertexId, 2> diagonal{};
};

/// Assemble a complex: computes adjacency, validates and installs the
/// prescriptions, leaves every other face Uncut and every hex unmarked.
/// Throws NonManifoldFace, DanglingVertex, BadDiagonal.
HexComplex build_complex(std::vector<Point3> points,
                         const std::vector<std::array<VertexId, 8>>& hex_vertex_lists,
                         const std::vector<CutPrescription>& prescriptions = {});

enum class PairRelation { Same, Different };

/// Relation between the cuts of two opposite faces: Same iff the four
/// endpoints form a diagonal rectangle of the cube (pairwise joined by cube
/// edges); equivalently the two diagonals lie in different parity classes.
/// Throws NotOpposite, BadDiagonal.
PairRelation pair_orientation_relation(const HexCell& hex, int face_a, VertexPair cut_a,
                                       int face_b, VertexPair cut_b);

// ---- output mesh ----

struct Tetra {
  std::array<VertexId, 4> v{};
  friend bool operator==(const Tetra&, const Tetra&) = default;
};

enum class Method : std::uint8_t { Marching6, PrismSplit6, Five, Steiner12 };
const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& s);

/// Tetrahedra with per-tet provenance. Steiner vertices are the points at
/// index >= original_point_count.
struct TetMesh {
  std::vector<Point3> points;
  std::size_t original_point_count = 0;
  std::vector<Tetra> tets;
  std::vector<std::uint32_t> source_hex;
  std::vector<Method> method;

  std::size_t size() const { return tets.size(); }
};

}  // namespace hextet

#endif
