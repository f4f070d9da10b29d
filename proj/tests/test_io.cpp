#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hextet/driver.hpp"
#include "hextet/io.hpp"
#include "hextet/verify.hpp"
#include "support.hpp"

using namespace hextet;
using namespace hextet::testing;

namespace {

std::string gmsh_text(const GridInput& g) {
  std::ostringstream os;
  os << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n$Nodes\n" << g.points.size() << "\n";
  for (std::size_t i = 0; i < g.points.size(); ++i)
    os << (i + 1) << " " << g.points[i].x << " " << g.points[i].y << " " << g.points[i].z << "\n";
  os << "$EndNodes\n$Elements\n" << g.hexes.size() << "\n";
  for (std::size_t i = 0; i < g.hexes.size(); ++i) {
    os << (i + 1) << " 5 2 0 1";
    for (VertexId v : g.hexes[i]) os << " " << (v + 1);
    os << "\n";
  }
  os << "$EndElements\n";
  return os.str();
}

std::string scratch(const std::string& name) {
  static const std::string dir = [] {
    std::filesystem::create_directories("io_scratch");
    return std::string("io_scratch/");
  }();
  return dir + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out);
  out << text;
}

int run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"hex2tet"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("gmsh reader: one hexahedron") {
  std::istringstream in(gmsh_text(make_grid(1, 1, 1)));
  HexComplex cx = read_gmsh_hex(in);
  CHECK(cx.hexes.size() == 1);
  CHECK(cx.points.size() == 8);
  CHECK(cx.adjacency.size() == 6);
}

TEST_CASE("gmsh reader: tetrahedron elements are rejected") {
  std::string text =
      "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n"
      "$Nodes\n4\n1 0 0 0\n2 1 0 0\n3 0 1 0\n4 0 0 1\n$EndNodes\n"
      "$Elements\n1\n1 4 2 0 1 1 2 3 4\n$EndElements\n";
  std::istringstream in(text);
  try {
    read_gmsh_hex(in);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedElement);
  }
}

TEST_CASE("gmsh reader: malformed input reports a parse error") {
  std::istringstream in("$MeshFormat\n2.2 0 8\n$EndMeshFormat\n$Nodes\n2\n1 0 0 0\n$EndNodes\n");
  try {
    read_gmsh_hex(in);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
}

TEST_CASE("gmsh reader: 2x2x2 structured grid") {
  std::istringstream in(gmsh_text(make_grid(2, 2, 2)));
  HexComplex cx = read_gmsh_hex(in);
  CHECK(cx.hexes.size() == 8);
  // combinatorial count: 3 directions x 1 interior plane x 4 faces
  CHECK(cx.interior_face_count() == 12);
  CHECK(cx.adjacency.size() == 36);
}

TEST_CASE("gmsh writer emits one type-4 element per tet") {
  HexComplex cx = unit_cube_complex();
  ConversionResult res = hex_to_tet(cx);
  std::ostringstream out;
  write_gmsh_tets(res.mesh, out);
  std::istringstream in(out.str());
  std::string line;
  int type4 = 0;
  bool in_elements = false;
  while (std::getline(in, line)) {
    if (line == "$Elements") { in_elements = true; std::getline(in, line); continue; }
    if (line == "$EndElements") in_elements = false;
    if (in_elements) {
      std::istringstream ls(line);
      long id, type;
      ls >> id >> type;
      if (type == 4) ++type4;
    }
  }
  CHECK(type4 == 6);
}

TEST_CASE("vtk writer: Steiner cube has 9 points and 12 cells with provenance") {
  HexComplex cx = unit_cube_complex(fig8_cuts());
  ConversionResult res = hex_to_tet(cx);
  std::ostringstream out;
  write_vtk_tets(res.mesh, out);
  std::string text = out.str();
  CHECK(text.find("POINTS 9 double") != std::string::npos);
  CHECK(text.find("CELLS 12 60") != std::string::npos);
  CHECK(text.find("CELL_DATA 12") != std::string::npos);
  CHECK(text.find("SCALARS source_hex int 1") != std::string::npos);
  CHECK(text.find("SCALARS method int 1") != std::string::npos);
}

TEST_CASE("native tet mesh round-trips exactly") {
  GridInput g = make_grid(2, 1, 1);
  HexComplex cx = build_complex(g.points, g.hexes,
                                {{{0, 4, 3, 1}, {0, 4}}});  // one prescribed cut, odd coords below
  // nudge coordinates to exercise lossless doubles
  cx.points[0].x = 0.1;
  cx.points[5].z = -1.0 / 3.0;
  ConversionResult res = hex_to_tet(cx);

  std::ostringstream out;
  write_native_tets(res.mesh, out);
  std::istringstream in(out.str());
  TetMesh back = read_native_tets(in);

  REQUIRE(back.tets.size() == res.mesh.tets.size());
  CHECK(back.original_point_count == res.mesh.original_point_count);
  for (std::size_t i = 0; i < back.tets.size(); ++i) {
    CHECK(back.tets[i] == res.mesh.tets[i]);
    CHECK(back.source_hex[i] == res.mesh.source_hex[i]);
    CHECK(back.method[i] == res.mesh.method[i]);
  }
  for (std::size_t i = 0; i < back.points.size(); ++i) {
    CHECK(back.points[i].x == res.mesh.points[i].x);
    CHECK(back.points[i].y == res.mesh.points[i].y);
    CHECK(back.points[i].z == res.mesh.points[i].z);
  }
}

TEST_CASE("native hex mesh round-trips including cut states") {
  GridInput g = make_grid(2, 2, 1);
  HexComplex probe = build_complex(g.points, g.hexes);
  HexComplex cx = build_complex(g.points, g.hexes, random_cuts(probe, 5, 31));
  std::ostringstream out;
  write_native_hex(cx, out);
  std::istringstream in(out.str());
  HexComplex back = read_native_hex(in);
  CHECK(back.hexes.size() == cx.hexes.size());
  CHECK(back.cuts.size() == cx.cuts.size());
  for (const auto& [key, d] : cx.cuts) CHECK(back.cuts.at(key) == d);
  std::ostringstream again;
  write_native_hex(back, again);
  CHECK(again.str() == out.str());
}

TEST_CASE("cuts file parsing") {
  std::istringstream good(R"({"cuts":[{"face":[0,3,2,1],"diagonal":[0,2]}]})");
  auto cuts = read_cuts(good);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].diagonal == std::array<VertexId, 2>{0, 2});

  std::istringstream bad1("not json at all {");
  CHECK_THROWS_AS(read_cuts(bad1), Error);
  std::istringstream bad2(R"({"cuts":[{"face":[0,3,2],"diagonal":[0,2]}]})");
  CHECK_THROWS_AS(read_cuts(bad2), Error);
}

TEST_CASE("cli: gmsh to vtk conversion with verification and report") {
  spit(scratch("io_cube.msh"), gmsh_text(make_grid(1, 1, 1)));
  int rc = run_cli({"--input", scratch("io_cube.msh"), "--output", scratch("io_cube.vtk"), "--verify", "--report",
                    scratch("io_cube_report.json")});
  CHECK(rc == 0);
  std::string vtk = slurp(scratch("io_cube.vtk"));
  CHECK(vtk.find("CELL_TYPES 6") != std::string::npos);
  std::string report = slurp(scratch("io_cube_report.json"));
  CHECK(report.find("\"conforming\": true") != std::string::npos);
  CHECK(report.find("\"tets\": 6") != std::string::npos);
}

TEST_CASE("cli: degenerate prescription without rescue exits 3") {
  spit(scratch("io_fig8.msh"), gmsh_text(make_grid(1, 1, 1)));
  std::ostringstream cuts;
  cuts << R"({"cuts":[)";
  auto presc = fig8_cuts();
  for (std::size_t i = 0; i < presc.size(); ++i) {
    const auto& p = presc[i];
    cuts << (i ? "," : "") << "{\"face\":[" << p.face[0] << "," << p.face[1] << ","
         << p.face[2] << "," << p.face[3] << "],\"diagonal\":[" << p.diagonal[0] << ","
         << p.diagonal[1] << "]}";
  }
  cuts << "]}";
  spit(scratch("io_fig8.cuts"), cuts.str());
  int rc = run_cli({"--input", scratch("io_fig8.msh"), "--cuts", scratch("io_fig8.cuts"), "--output", scratch("io_fig8.vtk"),
                    "--no-steiner", "--no-flips"});
  CHECK(rc == 3);
  // with the Steiner fallback the same input succeeds
  rc = run_cli({"--input", scratch("io_fig8.msh"), "--cuts", scratch("io_fig8.cuts"), "--output", scratch("io_fig8.vtk"),
                "--verify"});
  CHECK(rc == 0);
}

TEST_CASE("cli: classify-configs emits 64 data rows") {
  int rc = run_cli({"--classify-configs", "--output", scratch("io_classes.csv")});
  CHECK(rc == 0);
  std::istringstream in(slurp(scratch("io_classes.csv")));
  std::string line;
  int data = 0;
  while (std::getline(in, line)) {
    bool bits = line.size() > 7 && line[6] == ',';
    for (int i = 0; i < 6 && bits; ++i) bits = line[static_cast<std::size_t>(i)] == '0' ||
                                               line[static_cast<std::size_t>(i)] == '1';
    if (bits) ++data;
  }
  CHECK(data == 64);
}

TEST_CASE("cli: bad inputs exit 2") {
  CHECK(run_cli({"--input", "does_not_exist.msh", "--output", "x.vtk"}) == 2);
  spit(scratch("io_garbage.msh"), "this is not a mesh\n");
  CHECK(run_cli({"--input", scratch("io_garbage.msh"), "--output", "x.vtk"}) == 2);
  CHECK(run_cli({"--output", "x.vtk"}) == 2);
}

TEST_CASE("cli: force-six turns an eligible five-tet hex into six tets") {
  spit(scratch("io_parity.msh"), gmsh_text(make_grid(1, 1, 1)));
  // two class-A Different pairs prescribed: the five-tet case with freedom left
  GridInput g = make_grid(1, 1, 1);
  HexCell cell{0, g.hexes[0]};
  std::ostringstream cuts;
  cuts << R"({"cuts":[)";
  const int faces[4] = {0, 1, 2, 4};
  for (int i = 0; i < 4; ++i) {
    VertexPair d = cell.global_diagonal(faces[i], 0);
    FaceKey key = cell.face_key(faces[i]);
    cuts << (i ? "," : "") << "{\"face\":[" << key.v[0] << "," << key.v[1] << "," << key.v[2]
         << "," << key.v[3] << "],\"diagonal\":[" << d.a << "," << d.b << "]}";
  }
  cuts << "]}";
  spit(scratch("io_parity.cuts"), cuts.str());

  REQUIRE(run_cli({"--input", scratch("io_parity.msh"), "--cuts", scratch("io_parity.cuts"), "--output",
                   scratch("io_parity5.vtk"), "--verify", "--report", scratch("io_parity5.json")}) == 0);
  CHECK(slurp(scratch("io_parity5.json")).find("\"five\": 1") != std::string::npos);
  REQUIRE(run_cli({"--input", scratch("io_parity.msh"), "--cuts", scratch("io_parity.cuts"), "--output",
                   scratch("io_parity6.vtk"), "--force-six", "--verify", "--report",
                   scratch("io_parity6.json")}) == 0);
  CHECK(slurp(scratch("io_parity6.json")).find("\"five\": 0") != std::string::npos);
}

TEST_CASE("cli: identical invocations produce byte-identical outputs") {
  spit(scratch("io_det.msh"), gmsh_text(make_grid(2, 2, 2)));
  REQUIRE(run_cli({"--input", scratch("io_det.msh"), "--output", scratch("io_det_a.msh"), "--report",
                   scratch("io_det_a.json")}) == 0);
  REQUIRE(run_cli({"--input", scratch("io_det.msh"), "--output", scratch("io_det_b.msh"), "--report",
                   scratch("io_det_b.json")}) == 0);
  CHECK(slurp(scratch("io_det_a.msh")) == slurp(scratch("io_det_b.msh")));
  CHECK(slurp(scratch("io_det_a.json")) == slurp(scratch("io_det_b.json")));
}
