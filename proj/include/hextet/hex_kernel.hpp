#ifndef HEXTET_HEX_KERNEL_HPP
#define HEXTET_HEX_KERNEL_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "hextet/core.hpp"
#include "hextet/prism.hpp"

namespace hextet {

/// Per-local-face cut assignment: -1 uncut, else the diagonal bit
/// (0 = class-A diagonal, 1 = class-B; see kInClassA).
struct HexCutConfig {
  std::array<std::int8_t, 6> face{-1, -1, -1, -1, -1, -1};

  int cut_count() const;
  bool fully_cut() const;
  /// Encode a fully-cut config as 6 bits, face 0 = bit 0.
  int bits() const;
  static HexCutConfig from_bits(int bits);
  friend bool operator==(const HexCutConfig&, const HexCutConfig&) = default;
};

/// Pair structure of a (possibly partial) config.
enum class PairState : std::uint8_t { NoneCut, HalfCut, Same, Different };
PairState pair_state(const HexCutConfig& c, int pair);

/// Ambient-mesh hooks for deterministic planning. Without a cell the local
/// vertex ids order the tie-breaks; harm defaults to zero, which reduces the
/// plan choice to: lowest split-pair face index, then lexicographically
/// smallest main diagonal, then smallest completion.
struct PlanningContext {
  const HexCell* cell = nullptr;
  /// Cost of installing the given diagonal on an uncut face (used to avoid
  /// manufacturing Different pairs in unmarked neighbors). 0 or 1.
  std::function<int(int local_face, int bit)> harm;
  bool force_six = false;

  VertexPair order_key(int local_face, int bit) const;
  int harm_of(int local_face, int bit) const { return harm ? harm(local_face, bit) : 0; }
};

using LocalTet = std::array<std::uint8_t, 4>;  // 0..7 hex corners, 8 = Steiner point

struct SixPlan {
  HexCutConfig completed;
  int split_pair = -1;
  VertexPair main_diagonal;  // local vertex ids
  std::array<LocalTet, 6> tets;
  bool marching = false;  // completed config has all three pairs Same
};

/// Search the prism-split space: every splittable pair, Same assignment, main
/// diagonal and free-face completion, in deterministic order; returns the
/// valid plan with minimal harm (ties: enumeration order), or nullopt when no
/// prism split exists (fully-cut configs with no Same pair).
std::optional<SixPlan> plan_six(const HexCutConfig& config, const PlanningContext& ctx = {});

struct HexOutcome {
  enum class Kind : std::uint8_t { Six, Five, Degenerate } kind;
  std::vector<LocalTet> tets;  // 6 or 5 entries; empty for Degenerate
  HexCutConfig completed;      // fully-cut for Six/Five
  Method method = Method::PrismSplit6;
  std::vector<int> witness;  // Degenerate: the offending cut faces
};

/// Algorithm-1 dispatch for one hex: Five when two (or more) same-class
/// Different pairs are prescribed and every cut lies in that parity class;
/// Degenerate when Different pairs of both classes are prescribed; otherwise
/// Six by prism split. Never alters a prescribed cut. Throws IllegalConfig.
HexOutcome triangulate_hex(const HexCutConfig& config, const PlanningContext& ctx = {});

struct FiveResult {
  std::array<LocalTet, 5> tets;  // four corner tets then the central one
  HexCutConfig completed;
};

/// The inscribed-tetrahedron decomposition; requires every cut diagonal in a
/// single parity class. Throws NotFiveEligible.
FiveResult five_tet_decompose(const HexCutConfig& config);

struct SteinerResult {
  std::array<LocalTet, 12> tets;  // local label 8 is the Steiner point
  HexCutConfig completed;
};

/// Centroid Steiner point, six pyramids, two tets per face. Uncut faces are
/// completed in the same orientation as their opposite face. Works for any
/// config.
SteinerResult steiner_decompose(const HexCutConfig& config, const PlanningContext& ctx = {});

/// True iff neither endpoint of the face's diagonal touches any other
/// prescribed diagonal. Throws NotCut.
bool is_isolated_cut(const HexCutConfig& config, int local_face);

/// Combinatorial split of the reference cube across one opposite pair whose
/// Same-orientation diagonals are fixed by the low face's bit.
struct LocalPrismSplit {
  std::array<Prism, 2> prism;                     // local vertex ids 0..7
  std::array<int, 2> main_side;                   // side index of the shared rectangle
  std::array<std::array<int, 3>, 2> side_face;    // local hex face per side, -1 = main
  std::array<VertexPair, 2> main_options;         // the rectangle's two diagonals
};
LocalPrismSplit split_hex_local(int pair, int bit_low);

struct HexPrismSplit {
  Prism a, b;               // global vertex ids
  VertexPair main_diagonal;  // global
};

/// Spec-facing split: validates that the pair is opposite, both faces cut
/// with Same orientation, and the chosen main diagonal belongs to the
/// interior rectangle. Throws NotOpposite, NotCut, DifferentOrientationPair,
/// BadDiagonal.
HexPrismSplit split_hex_into_prisms(const HexCell& hex, const HexCutConfig& config, int face_a,
                                    int face_b, VertexPair shared_diagonal_choice);

}  // namespace hextet

#endif
