#ifndef HEXTET_PRISM_HPP
#define HEXTET_PRISM_HPP

#include <array>
#include <span>

#include "hextet/core.hpp"

namespace hextet {

/// Triangular prism. bottom[i] sits directly beneath top[i]; side quad i is
/// the loop bottom[i] -> bottom[i+1] -> top[i+1] -> top[i] (indices mod 3),
/// counterclockwise as seen from outside.
struct Prism {
  std::array<VertexId, 3> bottom{};
  std::array<VertexId, 3> top{};

  std::array<VertexId, 4> side_quad(int i) const;
};

/// Rising/falling label of a side-quad diagonal, relative to this prism's
/// traversal. Derived, never stored.
enum class Orientation : std::uint8_t { R, F };

enum class PrismClass : std::uint8_t { Valid, Degenerate };

/// The diagonal of side quad i carrying the given orientation:
/// R = {bottom[i], top[i+1]}, F = {bottom[i+1], top[i]}.
VertexPair side_diagonal(const Prism& p, int side, Orientation o);

/// Throws BadDiagonal if the pair is not a diagonal of that side quad.
Orientation side_orientation(const Prism& p, int side, VertexPair diagonal);

/// Degenerate iff all three orientations agree (RRR or FFF).
PrismClass classify_prism(Orientation o0, Orientation o1, Orientation o2);

/// One row of the static decomposition table, in prism-local labels
/// 0,1,2 = bottom and 3,4,5 = top. Tets are positively oriented for any
/// positively embedded prism.
struct PrismTableEntry {
  std::array<Orientation, 3> orientation;
  std::array<std::array<std::uint8_t, 4>, 3> tets;
};

/// The six valid orientation triples and their canonical 3-tet decompositions.
std::span<const PrismTableEntry, 6> prism_decomposition_table();

/// Constructive fallback rule behind the table: find a cap vertex incident to
/// two side diagonals (exists exactly when the triple is valid), peel the tet
/// joining it to the opposite cap, split the remaining pyramid by the third
/// diagonal. Must agree with the table entry; kept as an independent
/// derivation path for tests. Throws DegeneratePrism.
std::array<std::array<std::uint8_t, 4>, 3> peel_prism(std::array<Orientation, 3> o);

/// Decompose a prism whose side diagonals are given. Throws DegeneratePrism
/// on RRR/FFF, BadDiagonal on malformed cuts.
std::array<Tetra, 3> triangulate_prism(const Prism& p, const std::array<VertexPair, 3>& cuts);

}  // namespace hextet

#endif
