#include "hextet/prism.hpp"

#include <algorithm>

namespace hextet {

std::array<VertexId, 4> Prism::side_quad(int i) const {
  const int j = (i + 1) % 3;
  return {bottom[static_cast<std::size_t>(i)], bottom[static_cast<std::size_t>(j)],
          top[static_cast<std::size_t>(j)], top[static_cast<std::size_t>(i)]};
}

VertexPair side_diagonal(const Prism& p, int side, Orientation o) {
  const int j = (side + 1) % 3;
  if (o == Orientation::R)
    return VertexPair::of(p.bottom[static_cast<std::size_t>(side)],
                          p.top[static_cast<std::size_t>(j)]);
  return VertexPair::of(p.bottom[static_cast<std::size_t>(j)],
                        p.top[static_cast<std::size_t>(side)]);
}

Orientation side_orientation(const Prism& p, int side, VertexPair diagonal) {
  if (diagonal == side_diagonal(p, side, Orientation::R)) return Orientation::R;
  if (diagonal == side_diagonal(p, side, Orientation::F)) return Orientation::F;
  fail(Errc::BadDiagonal, "pair {" + std::to_string(diagonal.a) + "," +
                              std::to_string(diagonal.b) + "} is not a diagonal of side " +
                              std::to_string(side));
}

PrismClass classify_prism(Orientation o0, Orientation o1, Orientation o2) {
  return (o0 == o1 && o1 == o2) ? PrismClass::Degenerate : PrismClass::Valid;
}

namespace {

constexpr Orientation R = Orientation::R;
constexpr Orientation F = Orientation::F;

// Derived with the peel rule and certified against the exhaustive tiling
// oracle; each valid triple admits exactly one 3-tet decomposition.
// Labels: 0,1,2 bottom; 3,4,5 top. Positively oriented.
constexpr std::array<PrismTableEntry, 6> kPrismTable{{
    {{R, R, F}, {{{0, 3, 4, 5}, {0, 1, 2, 5}, {0, 1, 5, 4}}}},
    {{R, F, R}, {{{2, 3, 4, 5}, {0, 1, 2, 4}, {0, 2, 3, 4}}}},
    {{R, F, F}, {{{0, 3, 4, 5}, {0, 1, 2, 4}, {0, 2, 5, 4}}}},
    {{F, R, R}, {{{1, 3, 4, 5}, {0, 1, 2, 3}, {1, 2, 3, 5}}}},
    {{F, R, F}, {{{1, 3, 4, 5}, {0, 1, 2, 5}, {0, 1, 5, 3}}}},
    {{F, F, R}, {{{2, 3, 4, 5}, {0, 1, 2, 3}, {1, 2, 3, 4}}}},
}};

// reference prism for local-label orientation bookkeeping
constexpr Prism kLocalPrism{{0, 1, 2}, {3, 4, 5}};

std::array<std::uint8_t, 4> oriented(std::array<std::uint8_t, 4> t) {
  // normalize to positive orientation in the canonical right prism
  // bottom (0,0,0),(1,0,0),(0,1,0), top lifted by +z
  static constexpr int px[6] = {0, 1, 0, 0, 1, 0};
  static constexpr int py[6] = {0, 0, 1, 0, 0, 1};
  static constexpr int pz[6] = {0, 0, 0, 1, 1, 1};
  auto det = [&](const std::array<std::uint8_t, 4>& q) {
    int e[3][3];
    for (int i = 0; i < 3; ++i) {
      e[i][0] = px[q[static_cast<std::size_t>(i + 1)]] - px[q[0]];
      e[i][1] = py[q[static_cast<std::size_t>(i + 1)]] - py[q[0]];
      e[i][2] = pz[q[static_cast<std::size_t>(i + 1)]] - pz[q[0]];
    }
    return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
           e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
           e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
  };
  if (det(t) < 0) std::swap(t[2], t[3]);
  return t;
}

}  // namespace

std::span<const PrismTableEntry, 6> prism_decomposition_table() {
  return std::span<const PrismTableEntry, 6>(kPrismTable);
}

std::array<std::array<std::uint8_t, 4>, 3> peel_prism(std::array<Orientation, 3> o) {
  if (classify_prism(o[0], o[1], o[2]) == PrismClass::Degenerate)
    fail(Errc::DegeneratePrism, "RRR/FFF prism admits no decomposition");

  // a bottom vertex b_i sees the whole top cap iff side i is R and side i-1
  // is F; a top vertex t_i sees the whole bottom cap iff side i is F and side
  // i-1 is R. Peel the apex tet, then split the remaining pyramid (over the
  // side quad not touching the apex) by its prescribed diagonal.
  auto build = [&](std::uint8_t apex, bool apex_on_bottom,
                   int q) -> std::array<std::array<std::uint8_t, 4>, 3> {
    std::array<std::array<std::uint8_t, 4>, 3> out{};
    out[0] = apex_on_bottom ? std::array<std::uint8_t, 4>{apex, 3, 4, 5}
                            : std::array<std::uint8_t, 4>{apex, 0, 1, 2};
    const std::uint8_t bq = static_cast<std::uint8_t>(q);
    const std::uint8_t bq1 = static_cast<std::uint8_t>((q + 1) % 3);
    const std::uint8_t tq = static_cast<std::uint8_t>(q + 3);
    const std::uint8_t tq1 = static_cast<std::uint8_t>((q + 1) % 3 + 3);
    VertexPair d = side_diagonal(kLocalPrism, q, o[static_cast<std::size_t>(q)]);
    if (d == VertexPair::of(bq, tq1)) {
      out[1] = {apex, bq, bq1, tq1};
      out[2] = {apex, bq, tq1, tq};
    } else {
      out[1] = {apex, bq, bq1, tq};
      out[2] = {apex, bq1, tq1, tq};
    }
    for (auto& t : out) t = oriented(t);
    return out;
  };

  for (int i = 0; i < 3; ++i) {
    const int prev = (i + 2) % 3;
    if (o[static_cast<std::size_t>(i)] == R && o[static_cast<std::size_t>(prev)] == F)
      return build(static_cast<std::uint8_t>(i), true, (i + 1) % 3);
  }
  for (int i = 0; i < 3; ++i) {
    const int prev = (i + 2) % 3;
    if (o[static_cast<std::size_t>(i)] == F && o[static_cast<std::size_t>(prev)] == R)
      return build(static_cast<std::uint8_t>(i + 3), false, (i + 1) % 3);
  }
  fail(Errc::DegeneratePrism, "unreachable");
}

std::array<Tetra, 3> triangulate_prism(const Prism& p, const std::array<VertexPair, 3>& cuts) {
  std::array<Orientation, 3> o{};
  for (int i = 0; i < 3; ++i)
    o[static_cast<std::size_t>(i)] = side_orientation(p, i, cuts[static_cast<std::size_t>(i)]);
  if (classify_prism(o[0], o[1], o[2]) == PrismClass::Degenerate)
    fail(Errc::DegeneratePrism, "side cuts are all rising or all falling");

  const PrismTableEntry* entry = nullptr;
  for (const auto& e : kPrismTable)
    if (e.orientation == o) entry = &e;

  std::array<VertexId, 6> label{p.bottom[0], p.bottom[1], p.bottom[2],
                                p.top[0], p.top[1], p.top[2]};
  std::array<Tetra, 3> out{};
  for (int t = 0; t < 3; ++t)
    for (int k = 0; k < 4; ++k)
      out[static_cast<std::size_t>(t)].v[static_cast<std::size_t>(k)] =
          label[entry->tets[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)]];
  return out;
}

}  // namespace hextet
