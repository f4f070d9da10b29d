#include "hextet/driver.hpp"

#include <algorithm>
#include <cassert>

namespace hextet {

std::size_t ConversionReport::total_methods() const {
  std::size_t n = 0;
  for (auto c : method_count) n += c;
  return n;
}

HexCutConfig local_config(const HexComplex& complex, std::uint32_t hex_id) {
  const HexCell& cell = complex.hexes[hex_id];
  HexCutConfig cfg;
  for (int lf = 0; lf < kFacesPerHex; ++lf) {
    CutState st = complex.cut_state(cell.face_key(lf));
    if (!st.is_cut()) continue;
    int bit = cell.bit_of_global_diagonal(lf, *st.diagonal);
    if (bit < 0) fail(Errc::BadDiagonal, "stored cut is not a diagonal of the face");
    cfg.face[static_cast<std::size_t>(lf)] = static_cast<std::int8_t>(bit);
  }
  return cfg;
}

PlanningContext make_context(const HexComplex& complex, std::uint32_t hex_id, bool force_six) {
  PlanningContext ctx;
  ctx.cell = &complex.hexes[hex_id];
  ctx.force_six = force_six;
  ctx.harm = [&complex, hex_id](int local_face, int bit) -> int {
    auto nb = complex.neighbor_across(hex_id, local_face);
    if (!nb) return 0;
    const auto [n, nlf] = *nb;
    if (complex.marked[n]) return 0;
    const HexCell& ncell = complex.hexes[n];
    CutState opp = complex.cut_state(ncell.face_key(opposite_face(nlf)));
    if (!opp.is_cut()) return 0;
    VertexPair gd = complex.hexes[hex_id].global_diagonal(local_face, bit);
    const int our_bit = ncell.bit_of_global_diagonal(nlf, gd);
    const int opp_bit = ncell.bit_of_global_diagonal(opposite_face(nlf), *opp.diagonal);
    // equal bits in the neighbor's frame would complete a Different pair there
    return (our_bit >= 0 && our_bit == opp_bit) ? 1 : 0;
  };
  return ctx;
}

namespace {

VertexPair other_diagonal(const HexComplex& cx, std::uint32_t hex_id, int local_face) {
  const HexCell& cell = cx.hexes[hex_id];
  CutState st = cx.cut_state(cell.face_key(local_face));
  assert(st.is_cut());
  const int bit = cell.bit_of_global_diagonal(local_face, *st.diagonal);
  return cell.global_diagonal(local_face, 1 - bit);
}

void install_completed(HexComplex& cx, std::uint32_t hex_id, const HexCutConfig& completed) {
  const HexCell& cell = cx.hexes[hex_id];
  for (int lf = 0; lf < kFacesPerHex; ++lf) {
    FaceKey key = cell.face_key(lf);
    VertexPair d = cell.global_diagonal(lf, completed.face[static_cast<std::size_t>(lf)]);
    auto st = cx.cut_state(key);
    if (st.is_cut()) {
      assert(*st.diagonal == d && "completion may not alter a prescribed cut");
    } else {
      cx.set_cut(key, d);
    }
  }
}

}  // namespace

void apply_flip(HexComplex& complex, std::uint32_t hex_id, int face_c, int face_c_opp) {
  if (opposite_face(face_c) != face_c_opp) fail(Errc::NotOpposite, "flip needs an opposite pair");
  const HexCell& cell = complex.hexes[hex_id];
  FaceKey key_c = cell.face_key(face_c);
  FaceKey key_o = cell.face_key(face_c_opp);
  CutState sc = complex.cut_state(key_c);
  CutState so = complex.cut_state(key_o);
  if (!sc.is_cut() || !so.is_cut()) fail(Errc::NotCut, "both faces of the pair must be cut");
  if (pair_orientation_relation(cell, face_c, *sc.diagonal, face_c_opp, *so.diagonal) !=
      PairRelation::Same)
    fail(Errc::DifferentOrientationPair, "only Same-orientation pairs may be flipped");
  if (complex.marked[hex_id])
    fail(Errc::FlipBreaksMarkedNeighbor, "hex " + std::to_string(hex_id) + " is already marked");
  for (int f : {face_c, face_c_opp}) {
    auto nb = complex.neighbor_across(hex_id, f);
    if (nb && complex.marked[nb->first])
      fail(Errc::FlipBreaksMarkedNeighbor,
           "neighbor " + std::to_string(nb->first) + " already holds a final decomposition");
  }

  const HexOutcome::Kind before = triangulate_hex(local_config(complex, hex_id)).kind;
  complex.set_cut(key_c, other_diagonal(complex, hex_id, face_c));
  complex.set_cut(key_o, other_diagonal(complex, hex_id, face_c_opp));
  const HexOutcome::Kind after = triangulate_hex(local_config(complex, hex_id)).kind;
  assert(!(after == HexOutcome::Kind::Degenerate && before != HexOutcome::Kind::Degenerate) &&
         "pair flip preserved decomposability (Observation 3.1)");
  (void)before;
  (void)after;
}

DegenerateOutcome degenerate_case(std::uint32_t hex_id, HexComplex& complex,
                                  const DriverConfig& config, const std::vector<int>& witness) {
  DegenerateOutcome out;
  const HexCell& cell = complex.hexes[hex_id];
  HexCutConfig cfg = local_config(complex, hex_id);

  if (config.allow_flips) {
    for (int lf : witness) {
      FaceKey key = cell.face_key(lf);
      auto nb = complex.neighbor_across(hex_id, lf);
      if (!nb) continue;
      const auto [h2, lf2] = *nb;
      if (complex.marked[h2]) continue;
      const int lf2_opp = opposite_face(lf2);
      const HexCell& ncell = complex.hexes[h2];
      FaceKey key2 = ncell.face_key(lf2_opp);
      CutState c2 = complex.cut_state(key2);

      if (config.flip_mode == DriverConfig::FlipMode::Single) {
        // literal Algorithm 3: flip only C'; this leaves C unchanged, so the
        // hex stays degenerate and falls through to the Steiner branch
        if (!c2.is_cut()) continue;
        HexCutConfig ncfg = local_config(complex, h2);
        if (ncfg.face[static_cast<std::size_t>(lf2)] ==
            ncfg.face[static_cast<std::size_t>(lf2_opp)])
          continue;  // Different pair in H'
        auto h3 = complex.neighbor_across(h2, lf2_opp);
        if (h3 && complex.marked[h3->first]) continue;
        complex.set_cut(key2, other_diagonal(complex, h2, lf2_opp));
        out.flips.emplace_back(h2, key2);
        break;
      }

      // pair mode: the flip must actually resolve this hex
      HexCutConfig flipped = cfg;
      flipped.face[static_cast<std::size_t>(lf)] =
          static_cast<std::int8_t>(1 - flipped.face[static_cast<std::size_t>(lf)]);
      if (triangulate_hex(flipped).kind == HexOutcome::Kind::Degenerate) continue;

      if (c2.is_cut()) {
        HexCutConfig ncfg = local_config(complex, h2);
        if (ncfg.face[static_cast<std::size_t>(lf2)] ==
            ncfg.face[static_cast<std::size_t>(lf2_opp)])
          continue;  // (C, C') not a Same pair in H'
        auto h3 = complex.neighbor_across(h2, lf2_opp);
        if (h3 && complex.marked[h3->first]) continue;
        apply_flip(complex, h2, lf2, lf2_opp);
        out.flips.emplace_back(h2, key);
        out.flips.emplace_back(h2, key2);
      } else {
        // the opposite face of H' is free: flipping C alone disturbs nothing
        complex.set_cut(key, other_diagonal(complex, hex_id, lf));
        out.flips.emplace_back(h2, key);
      }
      out.resolution = DegenerateResolution::FlipApplied;
      return out;
    }
  }

  if (config.allow_steiner) {
    PlanningContext ctx = make_context(complex, hex_id, config.force_six);
    SteinerResult s = steiner_decompose(local_config(complex, hex_id), ctx);
    Point3 centroid{};
    for (VertexId v : cell.verts) {
      centroid.x += complex.points[v].x;
      centroid.y += complex.points[v].y;
      centroid.z += complex.points[v].z;
    }
    centroid.x /= 8;
    centroid.y /= 8;
    centroid.z /= 8;
    out.steiner_vertex = static_cast<VertexId>(complex.points.size());
    complex.points.push_back(centroid);
    out.completed = s.completed;
    out.tets.assign(s.tets.begin(), s.tets.end());
    out.resolution = DegenerateResolution::SteinerApplied;
    return out;
  }

  out.resolution = DegenerateResolution::Unresolved;
  return out;
}

ConversionResult hex_to_tet(HexComplex& complex, const DriverConfig& config) {
  ConversionResult result;
  TetMesh& mesh = result.mesh;
  ConversionReport& report = result.report;

  mesh.points = complex.points;
  mesh.original_point_count = complex.points.size();
  mesh.tets.reserve(complex.hexes.size() * 6);
  mesh.source_hex.reserve(complex.hexes.size() * 6);
  mesh.method.reserve(complex.hexes.size() * 6);
  report.hexes = complex.hexes.size();

  auto emit = [&](std::uint32_t hex_id, const LocalTet& lt, Method m, VertexId steiner) {
    const HexCell& cell = complex.hexes[hex_id];
    Tetra t;
    for (int k = 0; k < 4; ++k) {
      const std::uint8_t local = lt[static_cast<std::size_t>(k)];
      t.v[static_cast<std::size_t>(k)] = local == 8 ? steiner : cell.verts[local];
    }
    mesh.tets.push_back(t);
    mesh.source_hex.push_back(hex_id);
    mesh.method.push_back(m);
  };

  for (std::uint32_t hid = 0; hid < complex.hexes.size(); ++hid) {
    PlanningContext ctx = make_context(complex, hid, config.force_six);
    HexCutConfig cfg = local_config(complex, hid);
    HexOutcome outcome = triangulate_hex(cfg, ctx);

    if (outcome.kind == HexOutcome::Kind::Degenerate) {
      DegenerateOutcome degen = degenerate_case(hid, complex, config, outcome.witness);
      for (const auto& f : degen.flips) report.flips_performed.push_back(f);
      switch (degen.resolution) {
        case DegenerateResolution::FlipApplied:
          cfg = local_config(complex, hid);
          outcome = triangulate_hex(cfg, ctx);
          assert(outcome.kind != HexOutcome::Kind::Degenerate);
          break;
        case DegenerateResolution::SteinerApplied: {
          mesh.points.push_back(complex.points.back());
          install_completed(complex, hid, degen.completed);
          for (const auto& lt : degen.tets)
            emit(hid, lt, Method::Steiner12, degen.steiner_vertex);
          report.method_count[static_cast<std::size_t>(Method::Steiner12)] += 1;
          report.steiner_points.emplace_back(hid, degen.steiner_vertex);
          complex.marked[hid] = 1;
          continue;
        }
        case DegenerateResolution::Unresolved:
          report.failures.push_back("hex " + std::to_string(hid) +
                                    ": degenerate, flips failed and Steiner disabled");
          fail(Errc::UnresolvedDegenerate,
               "hex " + std::to_string(hid) + " cannot be resolved under this configuration");
      }
    }

    install_completed(complex, hid, outcome.completed);
    for (const auto& lt : outcome.tets) emit(hid, lt, outcome.method, 0);
    report.method_count[static_cast<std::size_t>(outcome.method)] += 1;
    complex.marked[hid] = 1;
  }

  report.conforming = report.failures.empty();
  return result;
}

}  // namespace hextet
