#include "hextet/hex_kernel.hpp"

#include <algorithm>
#include <cassert>

namespace hextet {

int HexCutConfig::cut_count() const {
  int n = 0;
  for (auto b : face) n += (b >= 0);
  return n;
}

bool HexCutConfig::fully_cut() const { return cut_count() == 6; }

int HexCutConfig::bits() const {
  assert(fully_cut());
  int b = 0;
  for (int f = 0; f < 6; ++f) b |= (face[static_cast<std::size_t>(f)] & 1) << f;
  return b;
}

HexCutConfig HexCutConfig::from_bits(int bits) {
  HexCutConfig c;
  for (int f = 0; f < 6; ++f) c.face[static_cast<std::size_t>(f)] = (bits >> f) & 1;
  return c;
}

PairState pair_state(const HexCutConfig& c, int pair) {
  const auto [f, g] = kFacePairs[static_cast<std::size_t>(pair)];
  const int a = c.face[static_cast<std::size_t>(f)];
  const int b = c.face[static_cast<std::size_t>(g)];
  if (a < 0 && b < 0) return PairState::NoneCut;
  if (a < 0 || b < 0) return PairState::HalfCut;
  return a == b ? PairState::Different : PairState::Same;
}

VertexPair PlanningContext::order_key(int local_face, int bit) const {
  if (cell) return cell->global_diagonal(local_face, bit);
  auto d = local_diagonal(local_face, bit);
  return VertexPair::of(static_cast<VertexId>(d[0]), static_cast<VertexId>(d[1]));
}

namespace {

// vertical edges between the faces of each opposite pair
constexpr std::array<std::array<std::int8_t, 8>, 3> kPairPartner{{
    {4, 5, 6, 7, 0, 1, 2, 3},        // bottom <-> top
    {3, 2, -1, -1, 7, 6, -1, -1},    // front <-> back (only front verts used)
    {-1, 0, 3, -1, -1, 4, 7, -1},    // right <-> left (only right verts used)
}};

std::array<std::array<int, 3>, 2> face_halves(int face, int bit) {
  const auto& q = kFaceCycle[static_cast<std::size_t>(face)];
  auto d = local_diagonal(face, bit);
  if ((d[0] == std::min(q[0], q[2]) && d[1] == std::max(q[0], q[2])))
    return {{{q[0], q[1], q[2]}, {q[0], q[2], q[3]}}};
  return {{{q[1], q[2], q[3]}, {q[1], q[3], q[0]}}};
}

int partner_of(int pair, int v) {
  int w = kPairPartner[static_cast<std::size_t>(pair)][static_cast<std::size_t>(v)];
  assert(w >= 0);
  return w;
}

int face_of_vertex_set(std::uint8_t mask) {
  for (int f = 0; f < kFacesPerHex; ++f) {
    std::uint8_t m = 0;
    for (int v : kFaceCycle[static_cast<std::size_t>(f)]) m |= static_cast<std::uint8_t>(1u << v);
    if (m == mask) return f;
  }
  return -1;
}

constexpr std::array<LocalTet, 5> kFiveA{{
    {0, 1, 2, 5}, {0, 2, 3, 7}, {0, 4, 5, 7}, {2, 5, 6, 7}, {0, 2, 7, 5}}};
constexpr std::array<LocalTet, 5> kFiveB{{
    {1, 2, 3, 6}, {0, 1, 3, 4}, {1, 4, 5, 6}, {3, 4, 6, 7}, {1, 3, 4, 6}}};

bool all_pairs_same(const HexCutConfig& c) {
  for (int p = 0; p < 3; ++p)
    if (pair_state(c, p) != PairState::Same) return false;
  return true;
}

}  // namespace

LocalPrismSplit split_hex_local(int pair, int bit_low) {
  const int low = kFacePairs[static_cast<std::size_t>(pair)][0];
  LocalPrismSplit out;
  auto halves = face_halves(low, bit_low);
  for (int s = 0; s < 2; ++s) {
    const auto& h = halves[static_cast<std::size_t>(s)];
    Prism& pr = out.prism[static_cast<std::size_t>(s)];
    // bottom cap counterclockwise as seen from the opposite cap: reverse the
    // outward-oriented half of the low face
    pr.bottom = {static_cast<VertexId>(h[2]), static_cast<VertexId>(h[1]),
                 static_cast<VertexId>(h[0])};
    for (int i = 0; i < 3; ++i)
      pr.top[static_cast<std::size_t>(i)] = static_cast<VertexId>(
          partner_of(pair, static_cast<int>(pr.bottom[static_cast<std::size_t>(i)])));
    out.main_side[static_cast<std::size_t>(s)] = -1;
    for (int i = 0; i < 3; ++i) {
      std::uint8_t mask = 0;
      for (VertexId v : pr.side_quad(i)) mask |= static_cast<std::uint8_t>(1u << v);
      int f = face_of_vertex_set(mask);
      out.side_face[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] = f;
      if (f < 0) out.main_side[static_cast<std::size_t>(s)] = i;
    }
    assert(out.main_side[static_cast<std::size_t>(s)] >= 0);
  }
  const Prism& p0 = out.prism[0];
  out.main_options = {side_diagonal(p0, out.main_side[0], Orientation::R),
                      side_diagonal(p0, out.main_side[0], Orientation::F)};
  if (out.main_options[1] < out.main_options[0])
    std::swap(out.main_options[0], out.main_options[1]);
  return out;
}

std::optional<SixPlan> plan_six(const HexCutConfig& config, const PlanningContext& ctx) {
  struct PrismChoice {
    std::array<Orientation, 3> labels;
    int harm;
    std::array<std::int8_t, 3> completion;  // chosen bit per side, -1 if fixed
  };

  bool have_best = false;
  int best_harm = 0;
  SixPlan best;

  for (int p = 0; p < 3; ++p) {
    const int f = kFacePairs[static_cast<std::size_t>(p)][0];
    const int g = kFacePairs[static_cast<std::size_t>(p)][1];
    const int cf = config.face[static_cast<std::size_t>(f)];
    const int cg = config.face[static_cast<std::size_t>(g)];
    if (cf >= 0 && cg >= 0 && cf == cg) continue;  // Different pair: no split here

    std::array<std::array<int, 2>, 2> assigns{};
    int n_assign = 0;
    if (cf >= 0 && cg >= 0) {
      assigns[static_cast<std::size_t>(n_assign++)] = {cf, cg};
    } else if (cf >= 0) {
      assigns[static_cast<std::size_t>(n_assign++)] = {cf, 1 - cf};
    } else if (cg >= 0) {
      assigns[static_cast<std::size_t>(n_assign++)] = {1 - cg, cg};
    } else {
      const int b0 = ctx.order_key(f, 0) < ctx.order_key(f, 1) ? 0 : 1;
      assigns[static_cast<std::size_t>(n_assign++)] = {b0, 1 - b0};
      assigns[static_cast<std::size_t>(n_assign++)] = {1 - b0, b0};
    }

    for (int ai = 0; ai < n_assign; ++ai) {
      const int bf = assigns[static_cast<std::size_t>(ai)][0];
      const int bg = assigns[static_cast<std::size_t>(ai)][1];
      LocalPrismSplit split = split_hex_local(p, bf);

      int base_harm = 0;
      if (cf < 0) base_harm += ctx.harm_of(f, bf);
      if (cg < 0) base_harm += ctx.harm_of(g, bg);

      std::array<VertexPair, 2> mains = split.main_options;
      auto global_pair = [&](const VertexPair& mp) {
        if (!ctx.cell) return mp;
        return VertexPair::of(ctx.cell->verts[mp.a], ctx.cell->verts[mp.b]);
      };
      if (global_pair(mains[1]) < global_pair(mains[0])) std::swap(mains[0], mains[1]);

      for (const VertexPair& m : mains) {
        std::array<PrismChoice, 2> choice{};
        bool feasible = true;
        for (int s = 0; s < 2 && feasible; ++s) {
          const Prism& pr = split.prism[static_cast<std::size_t>(s)];
          std::array<Orientation, 3> labels{};
          std::array<int, 2> free_side{};
          int n_free = 0;
          for (int i = 0; i < 3; ++i) {
            const int hf = split.side_face[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
            if (hf < 0) {
              labels[static_cast<std::size_t>(i)] = side_orientation(pr, i, m);
            } else if (config.face[static_cast<std::size_t>(hf)] >= 0) {
              auto d = local_diagonal(hf, config.face[static_cast<std::size_t>(hf)]);
              labels[static_cast<std::size_t>(i)] = side_orientation(
                  pr, i, VertexPair::of(static_cast<VertexId>(d[0]), static_cast<VertexId>(d[1])));
            } else {
              free_side[static_cast<std::size_t>(n_free++)] = i;
            }
          }
          // enumerate free-side bit combos in order-key order, keep minimal harm
          bool found = false;
          PrismChoice bestc{};
          const int combos = 1 << n_free;
          std::array<std::array<int, 2>, 2> opts{};  // per free side, bits in order
          for (int k = 0; k < n_free; ++k) {
            const int hf =
                split.side_face[static_cast<std::size_t>(s)]
                               [static_cast<std::size_t>(free_side[static_cast<std::size_t>(k)])];
            const bool zero_first = ctx.order_key(hf, 0) < ctx.order_key(hf, 1);
            opts[static_cast<std::size_t>(k)] = {zero_first ? 0 : 1, zero_first ? 1 : 0};
          }
          for (int mask = 0; mask < combos; ++mask) {
            auto lab = labels;
            int harm = 0;
            std::array<std::int8_t, 3> comp{-1, -1, -1};
            for (int k = 0; k < n_free; ++k) {
              const int i = free_side[static_cast<std::size_t>(k)];
              const int hf = split.side_face[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
              const int bit = opts[static_cast<std::size_t>(k)]
                                  [static_cast<std::size_t>((mask >> k) & 1)];
              auto d = local_diagonal(hf, bit);
              lab[static_cast<std::size_t>(i)] = side_orientation(
                  pr, i, VertexPair::of(static_cast<VertexId>(d[0]), static_cast<VertexId>(d[1])));
              harm += ctx.harm_of(hf, bit);
              comp[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(bit);
            }
            if (classify_prism(lab[0], lab[1], lab[2]) == PrismClass::Degenerate) continue;
            if (!found || harm < bestc.harm) {
              bestc = PrismChoice{lab, harm, comp};
              found = true;
            }
          }
          if (!found) {
            feasible = false;
            break;
          }
          choice[static_cast<std::size_t>(s)] = bestc;
        }
        if (!feasible) continue;
        const int harm = base_harm + choice[0].harm + choice[1].harm;
        if (!have_best || harm < best_harm) {
          HexCutConfig completed = config;
          completed.face[static_cast<std::size_t>(f)] = static_cast<std::int8_t>(bf);
          completed.face[static_cast<std::size_t>(g)] = static_cast<std::int8_t>(bg);
          SixPlan plan;
          int t_out = 0;
          for (int s = 0; s < 2; ++s) {
            const Prism& pr = split.prism[static_cast<std::size_t>(s)];
            for (int i = 0; i < 3; ++i) {
              const int bit = choice[static_cast<std::size_t>(s)].completion[static_cast<std::size_t>(i)];
              if (bit >= 0) {
                const int hf =
                    split.side_face[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
                completed.face[static_cast<std::size_t>(hf)] = static_cast<std::int8_t>(bit);
              }
            }
            const auto& lab = choice[static_cast<std::size_t>(s)].labels;
            const PrismTableEntry* entry = nullptr;
            for (const auto& e : prism_decomposition_table())
              if (e.orientation == lab) entry = &e;
            assert(entry);
            const std::array<VertexId, 6> map{pr.bottom[0], pr.bottom[1], pr.bottom[2],
                                              pr.top[0], pr.top[1], pr.top[2]};
            for (const auto& lt : entry->tets) {
              LocalTet t{};
              for (int k = 0; k < 4; ++k)
                t[static_cast<std::size_t>(k)] =
                    static_cast<std::uint8_t>(map[lt[static_cast<std::size_t>(k)]]);
              plan.tets[static_cast<std::size_t>(t_out++)] = t;
            }
          }
          plan.completed = completed;
          plan.split_pair = p;
          plan.main_diagonal = m;
          plan.marching = all_pairs_same(completed);
          best = plan;
          best_harm = harm;
          have_best = true;
        }
      }
    }
  }
  if (!have_best) return std::nullopt;
  return best;
}

HexOutcome triangulate_hex(const HexCutConfig& config, const PlanningContext& ctx) {
  for (auto b : config.face)
    if (b < -1 || b > 1) fail(Errc::IllegalConfig, "face entry out of range");

  std::vector<std::pair<int, int>> diff;  // (pair, class bit)
  for (int p = 0; p < 3; ++p)
    if (pair_state(config, p) == PairState::Different)
      diff.emplace_back(p, config.face[static_cast<std::size_t>(
                               kFacePairs[static_cast<std::size_t>(p)][0])]);

  if (diff.size() >= 2) {
    bool has_a = false, has_b = false;
    for (auto [p, c] : diff) (c == 0 ? has_a : has_b) = true;
    if (has_a && has_b) {
      HexOutcome out;
      out.kind = HexOutcome::Kind::Degenerate;
      for (auto [p, c] : diff)
        for (int f : kFacePairs[static_cast<std::size_t>(p)]) out.witness.push_back(f);
      std::sort(out.witness.begin(), out.witness.end());
      return out;
    }
    const int cls = diff.front().second;
    bool all_in_class = true;
    for (auto b : config.face)
      if (b >= 0 && b != cls) all_in_class = false;
    if (all_in_class) {
      if (ctx.force_six && !config.fully_cut()) {
        if (auto plan = plan_six(config, ctx)) {
          HexOutcome out;
          out.kind = HexOutcome::Kind::Six;
          out.tets.assign(plan->tets.begin(), plan->tets.end());
          out.completed = plan->completed;
          out.method = plan->marching ? Method::Marching6 : Method::PrismSplit6;
          return out;
        }
      }
      FiveResult five = five_tet_decompose(config);
      HexOutcome out;
      out.kind = HexOutcome::Kind::Five;
      out.tets.assign(five.tets.begin(), five.tets.end());
      out.completed = five.completed;
      out.method = Method::Five;
      return out;
    }
    // some prescribed cut lies outside the class: a Same(able) pair exists
  }

  auto plan = plan_six(config, ctx);
  if (!plan) fail(Errc::IllegalConfig, "no prism split exists for a non-degenerate config");
  HexOutcome out;
  out.kind = HexOutcome::Kind::Six;
  out.tets.assign(plan->tets.begin(), plan->tets.end());
  out.completed = plan->completed;
  out.method = plan->marching ? Method::Marching6 : Method::PrismSplit6;
  return out;
}

FiveResult five_tet_decompose(const HexCutConfig& config) {
  int cls = -1;
  for (int f = 0; f < 6; ++f) {
    const int b = config.face[static_cast<std::size_t>(f)];
    if (b < 0) continue;
    if (cls < 0) cls = b;
    if (b != cls)
      fail(Errc::NotFiveEligible, "cut diagonals span both parity classes");
  }
  if (cls < 0) cls = 0;
  FiveResult out;
  out.tets = (cls == 0) ? kFiveA : kFiveB;
  for (int f = 0; f < 6; ++f) out.completed.face[static_cast<std::size_t>(f)] = static_cast<std::int8_t>(cls);
  return out;
}

SteinerResult steiner_decompose(const HexCutConfig& config, const PlanningContext& ctx) {
  SteinerResult out;
  out.completed = config;
  for (int p = 0; p < 3; ++p) {
    const int f = kFacePairs[static_cast<std::size_t>(p)][0];
    const int g = kFacePairs[static_cast<std::size_t>(p)][1];
    auto& cf = out.completed.face[static_cast<std::size_t>(f)];
    auto& cg = out.completed.face[static_cast<std::size_t>(g)];
    if (cf < 0 && cg < 0) {
      cf = static_cast<std::int8_t>(ctx.order_key(f, 0) < ctx.order_key(f, 1) ? 0 : 1);
      cg = static_cast<std::int8_t>(1 - cf);  // same orientation as the opposite face
    } else if (cf < 0) {
      cf = static_cast<std::int8_t>(1 - cg);
    } else if (cg < 0) {
      cg = static_cast<std::int8_t>(1 - cf);
    }
  }
  int n = 0;
  for (int f = 0; f < 6; ++f) {
    auto halves = face_halves(f, out.completed.face[static_cast<std::size_t>(f)]);
    for (const auto& h : halves) {
      // outward triangle (x,y,z) plus the interior point: swap to positive
      out.tets[static_cast<std::size_t>(n++)] = {static_cast<std::uint8_t>(h[0]),
                                                 static_cast<std::uint8_t>(h[2]),
                                                 static_cast<std::uint8_t>(h[1]), 8};
    }
  }
  return out;
}

bool is_isolated_cut(const HexCutConfig& config, int local_face) {
  const int bit = config.face[static_cast<std::size_t>(local_face)];
  if (bit < 0) fail(Errc::NotCut, "face " + std::to_string(local_face) + " is not cut");
  auto d = local_diagonal(local_face, bit);
  for (int f = 0; f < 6; ++f) {
    if (f == local_face || config.face[static_cast<std::size_t>(f)] < 0) continue;
    auto e = local_diagonal(f, config.face[static_cast<std::size_t>(f)]);
    for (int x : d)
      for (int y : e)
        if (x == y) return false;
  }
  return true;
}

HexPrismSplit split_hex_into_prisms(const HexCell& hex, const HexCutConfig& config, int face_a,
                                    int face_b, VertexPair shared_diagonal_choice) {
  if (opposite_face(face_a) != face_b)
    fail(Errc::NotOpposite, "faces are not an opposite pair");
  int pair = -1;
  for (int p = 0; p < 3; ++p) {
    const auto& fp = kFacePairs[static_cast<std::size_t>(p)];
    if ((fp[0] == face_a && fp[1] == face_b) || (fp[0] == face_b && fp[1] == face_a)) pair = p;
  }
  assert(pair >= 0);
  const int low = kFacePairs[static_cast<std::size_t>(pair)][0];
  const int high = kFacePairs[static_cast<std::size_t>(pair)][1];
  const int bl = config.face[static_cast<std::size_t>(low)];
  const int bh = config.face[static_cast<std::size_t>(high)];
  if (bl < 0 || bh < 0) fail(Errc::NotCut, "both faces of the pair must be cut");
  if (bl == bh)
    fail(Errc::DifferentOrientationPair,
         "pair diagonals have different orientation; no diagonal plane exists");

  LocalPrismSplit split = split_hex_local(pair, bl);
  auto to_global = [&](VertexId local) { return hex.verts[static_cast<std::size_t>(local)]; };
  VertexPair main_global{};
  bool matched = false;
  for (const auto& m : split.main_options) {
    VertexPair g = VertexPair::of(to_global(m.a), to_global(m.b));
    if (g == shared_diagonal_choice) {
      main_global = g;
      matched = true;
    }
  }
  if (!matched)
    fail(Errc::BadDiagonal, "chosen main diagonal is not a diagonal of the interior rectangle");

  HexPrismSplit out;
  Prism* dst[2] = {&out.a, &out.b};
  for (int s = 0; s < 2; ++s) {
    const Prism& pr = split.prism[static_cast<std::size_t>(s)];
    for (int i = 0; i < 3; ++i) {
      dst[s]->bottom[static_cast<std::size_t>(i)] = to_global(pr.bottom[static_cast<std::size_t>(i)]);
      dst[s]->top[static_cast<std::size_t>(i)] = to_global(pr.top[static_cast<std::size_t>(i)]);
    }
  }
  out.main_diagonal = main_global;
  return out;
}

}  // namespace hextet
