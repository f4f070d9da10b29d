#ifndef HEXTET_VERIFY_HPP
#define HEXTET_VERIFY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hextet/core.hpp"
#include "hextet/hex_kernel.hpp"
#include "hextet/prism.hpp"

namespace hextet {

/// Exact arithmetic used throughout this module; no tolerance appears here.
using Rational = boost::multiprecision::cpp_rational;

struct RPoint {
  Rational x, y, z;
  static RPoint from(const Point3& p);  // exact double-to-rational conversion
};

/// One sixth of the scalar triple product of the edge vectors from v[0].
Rational signed_volume(const Tetra& t, std::span<const RPoint> points);

struct TilingReport {
  bool volume_ok = false;
  bool face_matching_ok = false;
  bool boundary_match_ok = false;
  std::vector<std::string> offending;

  bool ok() const { return volume_ok && face_matching_ok && boundary_match_ok; }
};

/// Exact interior-disjointness of two tetrahedra (separating-axis search over
/// facet normals and edge cross products, rational arithmetic).
bool tets_interior_disjoint(const Tetra& a, const Tetra& b, std::span<const RPoint> points);

/// Certify that the tets tile the hex bounded by its (fully cut) faces:
/// volumes sum exactly to the region volume, every triangle is shared by
/// exactly two tets or lies on the boundary, no two tets overlap, and the
/// boundary triangles restricted to each face reproduce its diagonal.
/// An interior Steiner vertex, if present, is passed explicitly.
TilingReport certify_hex_tiling(std::span<const Tetra> tets, std::span<const RPoint> points,
                                const std::array<VertexId, 8>& hex_verts,
                                const HexCutConfig& completed,
                                std::optional<VertexId> steiner = std::nullopt);

/// Same contract for a prism with prescribed side diagonals.
TilingReport certify_prism_tiling(std::span<const Tetra> tets, std::span<const RPoint> points,
                                  const Prism& prism, const std::array<VertexPair, 3>& cuts);

// ---- brute-force decomposition oracle (reference cube / prism) ----

enum class ConfigVerdict : std::uint8_t { FiveOK, SixOK, BothOK, DegenerateOnly };
const char* verdict_name(ConfigVerdict v);

struct ConfigClass {
  int config = 0;  // 6 bits, face 0 = bit 0
  ConfigVerdict verdict = ConfigVerdict::DegenerateOnly;
  int five_tilings = 0;
  int six_tilings = 0;
};

/// Exhaustive search over interior-vertex-free tilings of the reference cube
/// whose boundary matches the fully prescribed config: candidate tets are the
/// 58 non-coplanar 4-subsets of the corners; tilings of size 5 and 6 are
/// enumerated completely.
ConfigClass brute_force_cube(int config_bits);

/// All 64 verdicts. Independent of the production algorithm by construction.
std::array<ConfigClass, 64> classify_all_64();

/// CSV rows "config,verdict" for the 64 classes, ascending config id, with a
/// header line.
std::string classification_csv();

struct PrismBruteResult {
  PrismClass verdict = PrismClass::Valid;
  std::vector<std::array<std::array<std::uint8_t, 4>, 3>> witnesses;  // prism-local tilings
};

/// Exhaustive tiling search over the 6 prism vertices for the given side
/// orientations; exactly RRR and FFF admit none.
PrismBruteResult brute_force_prism(std::array<Orientation, 3> orients);

/// The 48 vertex permutations of the reference cube (full octahedral group),
/// used by the symmetry-invariance checks.
std::span<const std::array<std::uint8_t, 8>> cube_symmetries();
/// Image of a fully-cut config under a cube symmetry.
int map_config(int config_bits, const std::array<std::uint8_t, 8>& perm);

// ---- whole-mesh certification ----

struct MeshCertification {
  bool conforming = false;   // per-hex tilings certified + global face matching
  bool volume_ok = false;    // exact: total tet volume == total hex volume
  Rational tet_volume, hex_volume;
  std::vector<std::string> failures;

  bool ok() const { return conforming && volume_ok; }
};

/// Exact certification of a conversion result against the complex it came
/// from (the complex carries the final, fully-cut face states).
MeshCertification certify_mesh(const HexComplex& complex, const TetMesh& mesh);

}  // namespace hextet

#endif
