// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "hextet/driver.hpp"
#include "hextet/io.hpp"
#include "hextet/verify.hpp"
#include "support.hpp"

using namespace hextet;
using namespace hextet::testing;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const char* text, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, text,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<RPoint>& cube_pts() {
  static const std::vector<RPoint> pts = [] {
    std::vector<RPoint> p;
    constexpr int c[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                             {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
    for (auto& q : c) p.push_back(RPoint{q[0], q[1], q[2]});
    return p;
  }();
  return pts;
}

constexpr std::array<VertexId, 8> kIdent{0, 1, 2, 3, 4, 5, 6, 7};

double double_volume(const TetMesh& m) {
  double sum = 0;
  for (const auto& t : m.tets) {
    const Point3& a = m.points[t.v[0]];
    double e[3][3];
    for (int i = 0; i < 3; ++i) {
      const Point3& p = m.points[t.v[static_cast<std::size_t>(i + 1)]];
      e[i][0] = p.x - a.x;
      e[i][1] = p.y - a.y;
      e[i][2] = p.z - a.z;
    }
    sum += std::abs(e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
                    e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                    e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])) /
           6.0;
  }
  return sum;
}

// 1. Prism classification: exactly RRR and FFF degenerate; the other six
//    triples give 3 tets tiling the unit right prism exactly (volume 1/2).
void criterion1() {
  auto t0 = Clock::now();
  const Prism local{{0, 1, 2}, {3, 4, 5}};
  const std::vector<RPoint> pts = {RPoint{0, 0, 0}, RPoint{1, 0, 0}, RPoint{0, 1, 0},
                                   RPoint{0, 0, 1}, RPoint{1, 0, 1}, RPoint{0, 1, 1}};
  bool ok = true;
  int degenerate = 0;
  for (int bits = 0; bits < 8; ++bits) {
    std::array<Orientation, 3> o{};
    for (int i = 0; i < 3; ++i)
      o[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? Orientation::F : Orientation::R;
    const bool degen = classify_prism(o[0], o[1], o[2]) == PrismClass::Degenerate;
    PrismBruteResult brute = brute_force_prism(o);
    ok = ok && (degen == (brute.verdict == PrismClass::Degenerate));
    if (degen) {
      ++degenerate;
      ok = ok && brute.witnesses.empty();
      continue;
    }
    std::array<VertexPair, 3> cuts{};
    for (int i = 0; i < 3; ++i)
      cuts[static_cast<std::size_t>(i)] = side_diagonal(local, i, o[static_cast<std::size_t>(i)]);
    auto tets = triangulate_prism(local, cuts);
    ok = ok && tets.size() == 3;
    Rational sum = 0;
    for (const auto& t : tets) sum += abs(signed_volume(t, pts));
    ok = ok && sum == Rational(1) / 2;
    ok = ok && certify_prism_tiling(tets, pts, local, cuts).ok();
  }
  ok = ok && degenerate == 2;
  const double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3fs", dt);
  report(1, "prism classification (2 of 8 degenerate, 6 exact tilings of volume 1/2)", ok, buf);
}

// 2. All 64 fully prescribed configs: production verdict agrees with the
//    brute-force oracle; verdicts invariant under the 48 cube symmetries.
void criterion2() {
  auto t0 = Clock::now();
  bool ok = true;
  auto table = classify_all_64();
  for (int bits = 0; bits < 64; ++bits) {
    const ConfigClass& oracle = table[static_cast<std::size_t>(bits)];
    HexOutcome out = triangulate_hex(HexCutConfig::from_bits(bits));
    switch (out.kind) {
      case HexOutcome::Kind::Six: ok = ok && oracle.six_tilings > 0; break;
      case HexOutcome::Kind::Five: ok = ok && oracle.five_tilings > 0; break;
      case HexOutcome::Kind::Degenerate:
        ok = ok && oracle.verdict == ConfigVerdict::DegenerateOnly;
        break;
    }
    if (oracle.verdict == ConfigVerdict::DegenerateOnly)
      ok = ok && out.kind == HexOutcome::Kind::Degenerate;
  }
  for (const auto& c : table)
    for (const auto& perm : cube_symmetries())
      ok = ok && table[static_cast<std::size_t>(map_config(c.config, perm))].verdict == c.verdict;
  const double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3fs", dt);
  report(2, "64-config oracle agreement and 48-symmetry invariance", ok, buf);
}

// 3. Tet counts and exact unit-cube volumes for the 6-, 5- and 12-tet paths.
void criterion3() {
  bool ok = true;

  HexOutcome six = triangulate_hex(HexCutConfig{});
  ok = ok && six.kind == HexOutcome::Kind::Six && six.tets.size() == 6;
  for (const auto& t : to_tetras(six.tets, kIdent))
    ok = ok && abs(signed_volume(t, cube_pts())) == Rational(1) / 6;

  HexOutcome five = triangulate_hex(HexCutConfig::from_bits(0));
  ok = ok && five.kind == HexOutcome::Kind::Five && five.tets.size() == 5;
  {
    auto tets = to_tetras(five.tets, kIdent);
    int sixths = 0, thirds = 0;
    Rational sum = 0;
    for (const auto& t : tets) {
      Rational v = abs(signed_volume(t, cube_pts()));
      sum += v;
      if (v == Rational(1) / 6) ++sixths;
      if (v == Rational(1) / 3) ++thirds;
    }
    ok = ok && sixths == 4 && thirds == 1 && sum == 1;
  }

  HexComplex cx = unit_cube_complex(fig8_cuts());
  ConversionResult res = hex_to_tet(cx);
  ok = ok && res.mesh.tets.size() == 12 && res.report.steiner_points.size() == 1;
  {
    std::vector<RPoint> pts = to_rpoints(res.mesh.points);
    Rational sum = 0;
    for (const auto& t : res.mesh.tets) {
      Rational v = abs(signed_volume(t, pts));
      ok = ok && v == Rational(1) / 12;
      sum += v;
    }
    ok = ok && sum == 1;
  }
  report(3, "tet counts 6/5/12 with exact volumes 6x1/6, 4x1/6+1/3, 12x1/12", ok);
}

// 4. Flip invariance: every Six outcome via a Same-pair split stays Six after
//    flipping that pair, with a certified tiling.
void criterion4() {
  bool ok = true;
  int applicable = 0;
  for (int bits = 0; bits < 64; ++bits) {
    HexCutConfig cfg = HexCutConfig::from_bits(bits);
    auto plan = plan_six(cfg);
    if (!plan) continue;
    ++applicable;
    HexCutConfig flipped = cfg;
    for (int f : kFacePairs[static_cast<std::size_t>(plan->split_pair)])
      flipped.face[static_cast<std::size_t>(f)] =
          static_cast<std::int8_t>(1 - flipped.face[static_cast<std::size_t>(f)]);
    HexOutcome out = triangulate_hex(flipped);
    ok = ok && out.kind == HexOutcome::Kind::Six;
    if (out.kind == HexOutcome::Kind::Six) {
      auto tets = to_tetras(out.tets, kIdent);
      ok = ok && certify_hex_tiling(tets, cube_pts(), kIdent, out.completed).ok();
    }
  }
  ok = ok && applicable == 44;  // every config with a prism split
  report(4, "flip invariance over all applicable configurations", ok,
         std::to_string(applicable) + " configs");
}

// 5. The four-cube torus with the flip-defeating cut pattern: flips fail,
//    exactly one Steiner point, certified conforming.
void criterion5() {
  TorusInput t = make_torus4();
  HexComplex cx = build_complex(t.points, t.hexes, torus_ring_cuts(t));
  int ring_pair = -1;
  for (int p = 0; p < 3; ++p)
    if (pair_state(local_config(cx, 0), p) == PairState::Different) ring_pair = p;
  bool ok = ring_pair >= 0;
  if (ok) {
    const int rc = local_config(cx, 0).face[static_cast<std::size_t>(
        kFacePairs[static_cast<std::size_t>(ring_pair)][0])];
    int other = -1;
    for (int p = 0; p < 3; ++p)
      if (p != ring_pair && kFacePairs[static_cast<std::size_t>(p)][0] != 0) other = p;
    for (int f : kFacePairs[static_cast<std::size_t>(other)])
      cx.set_cut(cx.hexes[0].face_key(f), cx.hexes[0].global_diagonal(f, 1 - rc));
    ok = triangulate_hex(local_config(cx, 0)).kind == HexOutcome::Kind::Degenerate;
  }
  ConversionResult res;
  if (ok) {
    res = hex_to_tet(cx);
    ok = res.report.flips_performed.empty() && res.report.steiner_points.size() == 1 &&
         res.report.count(Method::Steiner12) == 1;
    MeshCertification cert = certify_mesh(cx, res.mesh);
    ok = ok && cert.ok();
  }
  report(5, "torus counterexample: flips fail, exactly 1 Steiner point, certified", ok);
}

// 6. Whole-mesh conformity and conservation on a 4x4x4 grid, with and without
//    random prescriptions.
void criterion6() {
  bool ok = true;
  std::string detail;
  for (int scenario = 0; scenario < 2; ++scenario) {
    GridInput g = make_grid(4, 4, 4);
    std::vector<CutPrescription> cuts;
    if (scenario == 1) cuts = random_cuts(build_complex(g.points, g.hexes), 50, 20240801);
    HexComplex cx = build_complex(g.points, g.hexes, cuts);
    ConversionResult res = hex_to_tet(cx);
    const std::size_t n = 64;
    ok = ok && res.mesh.tets.size() >= 5 * n && res.mesh.tets.size() <= 6 * n;
    ok = ok && res.report.steiner_points.empty();
    MeshCertification cert = certify_mesh(cx, res.mesh);
    ok = ok && cert.ok() && cert.tet_volume == 64;
    ok = ok && std::abs(double_volume(res.mesh) - 64.0) / 64.0 <= 1e-12;
    detail += (scenario ? " prescribed:" : "clean:") + std::to_string(res.mesh.tets.size()) +
              " tets";
  }
  report(6, "4x4x4 conformity, exact conservation, zero Steiner", ok, detail);
}

// 7. 50x50x50 structured grid converts in under 10 seconds in double mode,
//    with memory linear in the output size.
std::size_t peak_rss_mb() {
  std::size_t kb = 0;
  if (FILE* f = std::fopen("/proc/self/status", "r")) {
    char line[128];
    while (std::fgets(line, sizeof(line), f))
      if (std::sscanf(line, "VmHWM: %zu kB", &kb) == 1) break;
    std::fclose(f);
  }
  return kb / 1024;
}

void criterion7() {
  GridInput g = make_grid(50, 50, 50);
  auto t0 = Clock::now();
  HexComplex cx = build_complex(std::move(g.points), g.hexes);
  ConversionResult res = hex_to_tet(cx);
  const double dt = seconds_since(t0);
  bool ok = res.mesh.tets.size() >= 5 * 125000 && res.mesh.tets.size() <= 6 * 125000;
  ok = ok && res.report.steiner_points.empty();
  ok = ok && dt < 10.0;
  const std::size_t rss = peak_rss_mb();
  if (rss) ok = ok && rss < 2048;  // ~100 bytes/tet would be ~75 MB; allow generous slack
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%zu tets in %.2fs, peak rss %zu MB", res.mesh.tets.size(), dt,
                rss);
  report(7, "125k-hex grid converts in under 10 s (double mode)", ok, buf);
}

// 8. Determinism: identical input and configuration give byte-identical
//    meshes and reports.
void criterion8() {
  auto run = [] {
    GridInput g = make_grid(4, 4, 4);
    auto cuts = random_cuts(build_complex(g.points, g.hexes), 50, 20240801);
    HexComplex cx = build_complex(g.points, g.hexes, cuts);
    ConversionResult res = hex_to_tet(cx);
    std::ostringstream mesh_out, rep_out;
    write_native_tets(res.mesh, mesh_out);
    write_report(res.report, res.mesh, rep_out);
    return mesh_out.str() + rep_out.str();
  };
  std::string a = run(), b = run();
  report(8, "byte-identical output meshes and reports across runs", a == b);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
