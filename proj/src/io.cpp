#include "hextet/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hextet {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);  // shortest round-trip form
  return std::string(buf, res.ptr);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

struct LineReader {
  std::istream& in;
  std::size_t line_no = 0;
  bool next(std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (!out.empty()) return true;
    }
    return false;
  }
  std::string expect(const char* what) {
    std::string s;
    if (!next(s)) parse_fail(line_no, std::string("unexpected end of file, expected ") + what);
    return s;
  }
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path + " for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::IoError, "cannot open " + path + " for writing");
  return out;
}

}  // namespace

std::optional<MeshFormat> format_from_name(const std::string& s) {
  if (s == "gmsh") return MeshFormat::GmshMsh22Ascii;
  if (s == "vtk") return MeshFormat::VtkLegacyAscii;
  if (s == "native") return MeshFormat::NativeStructuredText;
  return std::nullopt;
}

std::optional<MeshFormat> format_from_path(const std::string& path) {
  auto dot = path.rfind('.');
  if (dot == std::string::npos) return std::nullopt;
  std::string ext = path.substr(dot + 1);
  if (ext == "msh") return MeshFormat::GmshMsh22Ascii;
  if (ext == "vtk") return MeshFormat::VtkLegacyAscii;
  if (ext == "hexmesh" || ext == "tetmesh" || ext == "txt") return MeshFormat::NativeStructuredText;
  return std::nullopt;
}

// ---- Gmsh MSH 2.2 ASCII ----

HexComplex read_gmsh_hex(std::istream& in) {
  LineReader lr{in};
  std::string s;
  std::vector<Point3> points;
  std::unordered_map<long long, VertexId> node_index;
  std::vector<std::array<VertexId, 8>> hexes;
  bool saw_nodes = false, saw_elements = false;

  while (lr.next(s)) {
    if (s == "$MeshFormat") {
      std::istringstream is(lr.expect("version line"));
      double version = 0;
      int file_type = 1;
      is >> version >> file_type;
      if (!(version >= 2.0 && version < 3.0))
        parse_fail(lr.line_no, "unsupported MSH version (need 2.x ASCII)");
      if (file_type != 0) parse_fail(lr.line_no, "binary MSH is not supported");
      while (lr.next(s) && s != "$EndMeshFormat") {}
    } else if (s == "$Nodes") {
      saw_nodes = true;
      std::istringstream is(lr.expect("node count"));
      std::size_t n = 0;
      is >> n;
      points.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::istringstream ls(lr.expect("node line"));
        long long id;
        Point3 p;
        if (!(ls >> id >> p.x >> p.y >> p.z)) parse_fail(lr.line_no, "malformed node line");
        node_index[id] = static_cast<VertexId>(points.size());
        points.push_back(p);
      }
      if (lr.expect("$EndNodes") != "$EndNodes") parse_fail(lr.line_no, "expected $EndNodes");
    } else if (s == "$Elements") {
      saw_elements = true;
      std::istringstream is(lr.expect("element count"));
      std::size_t n = 0;
      is >> n;
      for (std::size_t i = 0; i < n; ++i) {
        std::istringstream ls(lr.expect("element line"));
        long long id;
        int type = 0, ntags = 0;
        if (!(ls >> id >> type >> ntags)) parse_fail(lr.line_no, "malformed element line");
        for (int t = 0; t < ntags; ++t) {
          long long tag;
          if (!(ls >> tag)) parse_fail(lr.line_no, "missing element tag");
        }
        if (type != 5)
          fail(Errc::UnsupportedElement,
               "element type " + std::to_string(type) + " (only 8-node hexahedra are accepted)");
        std::array<VertexId, 8> hv{};
        for (int k = 0; k < 8; ++k) {
          long long nid;
          if (!(ls >> nid)) parse_fail(lr.line_no, "hexahedron needs 8 nodes");
          auto it = node_index.find(nid);
          if (it == node_index.end()) parse_fail(lr.line_no, "element references unknown node");
          hv[static_cast<std::size_t>(k)] = it->second;
        }
        hexes.push_back(hv);
      }
      if (lr.expect("$EndElements") != "$EndElements") parse_fail(lr.line_no, "expected $EndElements");
    }
    // other sections are skipped silently
  }
  if (!saw_nodes || !saw_elements) parse_fail(lr.line_no, "missing $Nodes or $Elements section");
  if (hexes.empty()) fail(Errc::UnsupportedElement, "no hexahedral elements in file");
  return build_complex(std::move(points), hexes);
}

HexComplex read_gmsh_hex_file(const std::string& path) {
  auto in = open_in(path);
  return read_gmsh_hex(in);
}

// ---- native structured text ----

HexComplex read_native_hex(std::istream& in) {
  LineReader lr{in};
  std::string s = lr.expect("header");
  if (s != "hextet hexmesh 1") parse_fail(lr.line_no, "expected 'hextet hexmesh 1' header");
  std::istringstream ps(lr.expect("points"));
  std::string word;
  std::size_t n = 0;
  ps >> word >> n;
  if (word != "points") parse_fail(lr.line_no, "expected 'points <n>'");
  std::vector<Point3> points(n);
  for (auto& p : points) {
    std::istringstream ls(lr.expect("point"));
    if (!(ls >> p.x >> p.y >> p.z)) parse_fail(lr.line_no, "malformed point");
  }
  std::istringstream hs(lr.expect("hexes"));
  std::size_t h = 0;
  hs >> word >> h;
  if (word != "hexes") parse_fail(lr.line_no, "expected 'hexes <n>'");
  std::vector<std::array<VertexId, 8>> hexes(h);
  for (auto& hv : hexes) {
    std::istringstream ls(lr.expect("hex"));
    for (auto& v : hv)
      if (!(ls >> v)) parse_fail(lr.line_no, "hex needs 8 vertex ids");
  }
  std::istringstream cs(lr.expect("cuts"));
  std::size_t c = 0;
  cs >> word >> c;
  if (word != "cuts") parse_fail(lr.line_no, "expected 'cuts <n>'");
  std::vector<CutPrescription> cuts(c);
  for (auto& cut : cuts) {
    std::istringstream ls(lr.expect("cut"));
    for (auto& v : cut.face)
      if (!(ls >> v)) parse_fail(lr.line_no, "cut needs 4 face ids");
    for (auto& v : cut.diagonal)
      if (!(ls >> v)) parse_fail(lr.line_no, "cut needs 2 diagonal ids");
  }
  return build_complex(std::move(points), hexes, cuts);
}

HexComplex read_native_hex_file(const std::string& path) {
  auto in = open_in(path);
  return read_native_hex(in);
}

HexComplex read_mesh(const std::string& path, MeshFormat format) {
  switch (format) {
    case MeshFormat::GmshMsh22Ascii: return read_gmsh_hex_file(path);
    case MeshFormat::NativeStructuredText: return read_native_hex_file(path);
    case MeshFormat::VtkLegacyAscii: break;
  }
  fail(Errc::UnsupportedElement, "VTK is an output format only");
}

void write_native_hex(const HexComplex& cx, std::ostream& out) {
  out << "hextet hexmesh 1\n";
  out << "points " << cx.points.size() << "\n";
  for (const auto& p : cx.points)
    out << fmt_double(p.x) << " " << fmt_double(p.y) << " " << fmt_double(p.z) << "\n";
  out << "hexes " << cx.hexes.size() << "\n";
  for (const auto& h : cx.hexes) {
    for (int k = 0; k < 8; ++k) out << h.verts[static_cast<std::size_t>(k)] << (k == 7 ? "" : " ");
    out << "\n";
  }
  std::vector<std::pair<FaceKey, VertexPair>> cuts;
  for (const FaceKey& key : cx.face_keys_in_order()) {
    auto st = cx.cut_state(key);
    if (st.is_cut()) cuts.emplace_back(key, *st.diagonal);
  }
  out << "cuts " << cuts.size() << "\n";
  for (const auto& [key, d] : cuts)
    out << key.v[0] << " " << key.v[1] << " " << key.v[2] << " " << key.v[3] << " " << d.a << " "
        << d.b << "\n";
}

// ---- cut prescription sidecar (JSON) ----

std::vector<CutPrescription> read_cuts(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("cuts file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cuts") || !doc["cuts"].is_array())
    fail(Errc::ParseError, "cuts file must be an object with a 'cuts' array");
  std::vector<CutPrescription> out;
  for (const auto& e : doc["cuts"]) {
    if (!e.contains("face") || !e.contains("diagonal") || e["face"].size() != 4 ||
        e["diagonal"].size() != 2)
      fail(Errc::ParseError, "each cut needs 'face' (4 ids) and 'diagonal' (2 ids)");
    CutPrescription p;
    for (int k = 0; k < 4; ++k) p.face[static_cast<std::size_t>(k)] = e["face"][static_cast<std::size_t>(k)].get<VertexId>();
    for (int k = 0; k < 2; ++k)
      p.diagonal[static_cast<std::size_t>(k)] = e["diagonal"][static_cast<std::size_t>(k)].get<VertexId>();
    out.push_back(p);
  }
  return out;
}

std::vector<CutPrescription> read_cuts_file(const std::string& path) {
  auto in = open_in(path);
  return read_cuts(in);
}

// ---- tet mesh writers ----

void write_gmsh_tets(const TetMesh& mesh, std::ostream& out) {
  out << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n";
  out << "$Nodes\n" << mesh.points.size() << "\n";
  for (std::size_t i = 0; i < mesh.points.size(); ++i) {
    const auto& p = mesh.points[i];
    out << (i + 1) << " " << fmt_double(p.x) << " " << fmt_double(p.y) << " " << fmt_double(p.z)
        << "\n";
  }
  out << "$EndNodes\n$Elements\n" << mesh.tets.size() << "\n";
  for (std::size_t i = 0; i < mesh.tets.size(); ++i) {
    const auto& t = mesh.tets[i];
    out << (i + 1) << " 4 2 0 1";
    for (VertexId v : t.v) out << " " << (v + 1);
    out << "\n";
  }
  out << "$EndElements\n";
}

void write_vtk_tets(const TetMesh& mesh, std::ostream& out) {
  out << "# vtk DataFile Version 3.0\n";
  out << "hextet tetrahedral mesh\n";
  out << "ASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << mesh.points.size() << " double\n";
  for (const auto& p : mesh.points)
    out << fmt_double(p.x) << " " << fmt_double(p.y) << " " << fmt_double(p.z) << "\n";
  out << "CELLS " << mesh.tets.size() << " " << mesh.tets.size() * 5 << "\n";
  for (const auto& t : mesh.tets) {
    out << "4";
    for (VertexId v : t.v) out << " " << v;
    out << "\n";
  }
  out << "CELL_TYPES " << mesh.tets.size() << "\n";
  for (std::size_t i = 0; i < mesh.tets.size(); ++i) out << "10\n";
  out << "CELL_DATA " << mesh.tets.size() << "\n";
  out << "SCALARS source_hex int 1\nLOOKUP_TABLE default\n";
  for (auto h : mesh.source_hex) out << h << "\n";
  out << "SCALARS method int 1\nLOOKUP_TABLE default\n";
  for (auto m : mesh.method) out << static_cast<int>(m) << "\n";
}

void write_native_tets(const TetMesh& mesh, std::ostream& out) {
  out << "hextet tetmesh 1\n";
  out << "points " << mesh.points.size() << "\n";
  for (const auto& p : mesh.points)
    out << fmt_double(p.x) << " " << fmt_double(p.y) << " " << fmt_double(p.z) << "\n";
  out << "original_points " << mesh.original_point_count << "\n";
  out << "tets " << mesh.tets.size() << "\n";
  for (std::size_t i = 0; i < mesh.tets.size(); ++i) {
    const auto& t = mesh.tets[i];
    out << t.v[0] << " " << t.v[1] << " " << t.v[2] << " " << t.v[3] << " " << mesh.source_hex[i]
        << " " << method_name(mesh.method[i]) << "\n";
  }
}

TetMesh read_native_tets(std::istream& in) {
  LineReader lr{in};
  std::string s = lr.expect("header");
  if (s != "hextet tetmesh 1") parse_fail(lr.line_no, "expected 'hextet tetmesh 1' header");
  std::string word;
  TetMesh mesh;
  std::istringstream ps(lr.expect("points"));
  std::size_t n = 0;
  ps >> word >> n;
  if (word != "points") parse_fail(lr.line_no, "expected 'points <n>'");
  mesh.points.resize(n);
  for (auto& p : mesh.points) {
    std::istringstream ls(lr.expect("point"));
    if (!(ls >> p.x >> p.y >> p.z)) parse_fail(lr.line_no, "malformed point");
  }
  std::istringstream os(lr.expect("original_points"));
  os >> word >> mesh.original_point_count;
  if (word != "original_points") parse_fail(lr.line_no, "expected 'original_points <n>'");
  std::istringstream ts(lr.expect("tets"));
  std::size_t t = 0;
  ts >> word >> t;
  if (word != "tets") parse_fail(lr.line_no, "expected 'tets <n>'");
  mesh.tets.resize(t);
  mesh.source_hex.resize(t);
  mesh.method.resize(t);
  for (std::size_t i = 0; i < t; ++i) {
    std::istringstream ls(lr.expect("tet"));
    std::string mname;
    for (auto& v : mesh.tets[i].v)
      if (!(ls >> v)) parse_fail(lr.line_no, "tet needs 4 vertex ids");
    if (!(ls >> mesh.source_hex[i] >> mname)) parse_fail(lr.line_no, "tet needs provenance");
    auto m = method_from_name(mname);
    if (!m) parse_fail(lr.line_no, "unknown method tag '" + mname + "'");
    mesh.method[i] = *m;
  }
  return mesh;
}

TetMesh read_native_tets_file(const std::string& path) {
  auto in = open_in(path);
  return read_native_tets(in);
}

void write_tetmesh(const TetMesh& mesh, const std::string& path, MeshFormat format) {
  auto out = open_out(path);
  switch (format) {
    case MeshFormat::GmshMsh22Ascii: write_gmsh_tets(mesh, out); break;
    case MeshFormat::VtkLegacyAscii: write_vtk_tets(mesh, out); break;
    case MeshFormat::NativeStructuredText: write_native_tets(mesh, out); break;
  }
  if (!out) fail(Errc::IoError, "write failed: " + path);
}

void write_report(const ConversionReport& report, const TetMesh& mesh, std::ostream& out) {
  json doc;
  doc["hexes"] = report.hexes;
  doc["tets"] = mesh.tets.size();
  doc["points"] = mesh.points.size();
  doc["original_points"] = mesh.original_point_count;
  json methods;
  for (Method m : {Method::Marching6, Method::PrismSplit6, Method::Five, Method::Steiner12})
    methods[method_name(m)] = report.count(m);
  doc["methods"] = methods;
  json flips = json::array();
  for (const auto& [hex, key] : report.flips_performed)
    flips.push_back({{"hex", hex}, {"face", key.v}});
  doc["flips"] = flips;
  json steiner = json::array();
  for (const auto& [hex, v] : report.steiner_points)
    steiner.push_back({{"hex", hex}, {"vertex", v}});
  doc["steiner_points"] = steiner;
  doc["conforming"] = report.conforming;
  doc["failures"] = report.failures;
  out << doc.dump(2) << "\n";
}

void write_report_file(const ConversionReport& report, const TetMesh& mesh,
                       const std::string& path) {
  auto out = open_out(path);
  write_report(report, mesh, out);
}

}  // namespace hextet
