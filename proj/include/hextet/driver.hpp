#ifndef HEXTET_DRIVER_HPP
#define HEXTET_DRIVER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hextet/core.hpp"
#include "hextet/hex_kernel.hpp"

namespace hextet {

struct DriverConfig {
  bool allow_flips = true;
  bool allow_steiner = true;
  bool force_six = false;
  /// Pair: flip both diagonals of the Same pair (C, C') in the neighbor —
  /// this changes C as seen by the degenerate hex and resolves it.
  /// Single: flip only C', the literal Algorithm-3 text; it cannot resolve
  /// the degenerate hex, which then falls back to a Steiner point.
  enum class FlipMode : std::uint8_t { Pair, Single } flip_mode = FlipMode::Pair;
  enum class Traversal : std::uint8_t { AscendingId } traversal = Traversal::AscendingId;
};

struct ConversionReport {
  std::size_t hexes = 0;
  std::array<std::size_t, 4> method_count{};  // indexed by Method
  std::vector<std::pair<std::uint32_t, FaceKey>> flips_performed;  // (neighbor hex, face)
  std::vector<std::pair<std::uint32_t, VertexId>> steiner_points;  // (hex, new vertex)
  bool conforming = false;
  std::vector<std::string> failures;

  std::size_t count(Method m) const { return method_count[static_cast<std::size_t>(m)]; }
  std::size_t total_methods() const;
};

struct ConversionResult {
  TetMesh mesh;
  ConversionReport report;
};

/// Algorithm 1 over the whole complex: one pass in ascending hex id, each hex
/// triangulated against the current cut state, completions installed on the
/// shared faces, degenerate hexes resolved by neighbor flips then Steiner
/// points. Marks every hex. Throws UnresolvedDegenerate when both rescues are
/// disabled or unavailable.
ConversionResult hex_to_tet(HexComplex& complex, const DriverConfig& config = {});

enum class DegenerateResolution : std::uint8_t { FlipApplied, SteinerApplied, Unresolved };

struct DegenerateOutcome {
  DegenerateResolution resolution = DegenerateResolution::Unresolved;
  // FlipApplied: cut-state mutations already installed; caller re-triangulates.
  std::vector<std::pair<std::uint32_t, FaceKey>> flips;
  // SteinerApplied: the new vertex (appended to complex.points) and the tets.
  HexCutConfig completed;
  VertexId steiner_vertex = 0;
  std::vector<LocalTet> tets;
};

/// Algorithm 3 for one degenerate hex. Witness faces are tried in ascending
/// local-face order; a cut C is flip-eligible when the neighbor H' across it
/// is unmarked and either (a) the face of H' opposite C carries a cut C' with
/// C,C' a Same pair and the hex H'' behind C' is unmarked or absent — then
/// the pair (C, C') is flipped — or (b) that face is uncut, in which case C
/// alone is flipped (nothing in H' constrains it yet). The flip must resolve
/// this hex's degeneracy. Steiner fallback otherwise.
DegenerateOutcome degenerate_case(std::uint32_t hex_id, HexComplex& complex,
                                  const DriverConfig& config, const std::vector<int>& witness);

/// Observation-3.1 pair flip: replace both diagonals of the Same-orientation
/// opposite pair (face_c, face_c_opp) of the given hex. Throws NotOpposite,
/// NotCut, DifferentOrientationPair, FlipBreaksMarkedNeighbor.
void apply_flip(HexComplex& complex, std::uint32_t hex_id, int face_c, int face_c_opp);

/// Planning context wired to the complex: global-id tie-breaks plus the
/// neighbor-harm score for completions (see hex_kernel.hpp).
PlanningContext make_context(const HexComplex& complex, std::uint32_t hex_id, bool force_six);

/// Current cut assignment of a hex's six faces, as local diagonal bits.
HexCutConfig local_config(const HexComplex& complex, std::uint32_t hex_id);

}  // namespace hextet

#endif
