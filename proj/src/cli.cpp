#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hextet/driver.hpp"
#include "hextet/io.hpp"
#include "hextet/verify.hpp"

namespace hextet {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitUnresolved = 3;
constexpr int kExitVerify = 4;

int exit_code_for(const Error& e) {
  return e.code() == Errc::UnresolvedDegenerate ? kExitUnresolved : kExitConfig;
}

void warn_inverted(const HexComplex& cx) {
  std::size_t inverted = 0;
  for (const auto& h : cx.hexes) {
    const Point3& a = cx.points[h.verts[0]];
    const Point3& b = cx.points[h.verts[1]];
    const Point3& c = cx.points[h.verts[3]];
    const Point3& d = cx.points[h.verts[4]];
    const double e1[3] = {b.x - a.x, b.y - a.y, b.z - a.z};
    const double e2[3] = {c.x - a.x, c.y - a.y, c.z - a.z};
    const double e3[3] = {d.x - a.x, d.y - a.y, d.z - a.z};
    const double det = e1[0] * (e2[1] * e3[2] - e2[2] * e3[1]) -
                       e1[1] * (e2[0] * e3[2] - e2[2] * e3[0]) +
                       e1[2] * (e2[0] * e3[1] - e2[1] * e3[0]);
    if (det <= 0) {
      if (inverted == 0)
        std::cerr << "warning: hex " << h.id << " looks inverted (non-positive corner volume)\n";
      ++inverted;
    }
  }
  if (inverted > 1)
    std::cerr << "warning: " << inverted << " hexes look inverted in total\n";
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"hex2tet: conforming tetrahedralization of hexahedral meshes with prescribed face cuts"};

  std::string input, input_format_name, cuts_path, output, output_format_name, report_path;
  bool no_flips = false, no_steiner = false, force_six = false, verify = false,
       classify_configs = false;
  std::string flip_mode = "pair";

  app.add_option("--input", input, "input hex mesh");
  app.add_option("--input-format", input_format_name, "gmsh|native (default: by extension)");
  app.add_option("--cuts", cuts_path, "cut prescription file (JSON sidecar)");
  app.add_option("--output", output, "output tet mesh (or CSV for --classify-configs)");
  app.add_option("--output-format", output_format_name, "gmsh|vtk|native (default: by extension)");
  app.add_flag("--no-flips", no_flips, "disable neighbor flips for degenerate hexes");
  app.add_flag("--no-steiner", no_steiner, "disable Steiner points (conversion may fail)");
  app.add_flag("--force-six", force_six, "prefer 6-tet decompositions over 5-tet where possible");
  app.add_option("--flip-mode", flip_mode, "pair|single (default pair)")
      ->check(CLI::IsMember({"pair", "single"}));
  app.add_flag("--verify", verify, "run exact certification on the result");
  app.add_option("--report", report_path, "write a JSON conversion report");
  app.add_flag("--classify-configs", classify_configs,
               "emit the 64-configuration oracle classification as CSV and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (classify_configs) {
      std::string csv = classification_csv();
      if (output.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(output);
        if (!out) fail(Errc::IoError, "cannot open " + output);
        out << csv;
      }
      return kExitOk;
    }

    if (input.empty() || output.empty()) {
      std::cerr << "error: --input and --output are required (see --help)\n";
      return kExitConfig;
    }
    auto in_fmt = input_format_name.empty() ? format_from_path(input)
                                            : format_from_name(input_format_name);
    if (!in_fmt || *in_fmt == MeshFormat::VtkLegacyAscii) {
      std::cerr << "error: input format must be gmsh or native\n";
      return kExitConfig;
    }
    auto out_fmt = output_format_name.empty() ? format_from_path(output)
                                              : format_from_name(output_format_name);
    if (!out_fmt) {
      std::cerr << "error: cannot determine output format; use --output-format\n";
      return kExitConfig;
    }

    HexComplex cx = read_mesh(input, *in_fmt);
    if (!cuts_path.empty()) {
      // rebuild with the prescriptions so they are validated as a unit
      std::vector<std::array<VertexId, 8>> hv;
      hv.reserve(cx.hexes.size());
      for (const auto& h : cx.hexes) hv.push_back(h.verts);
      std::vector<CutPrescription> presc = read_cuts_file(cuts_path);
      // native inputs may already carry cuts; keep them
      for (const FaceKey& key : cx.face_keys_in_order()) {
        auto st = cx.cut_state(key);
        if (st.is_cut())
          presc.push_back(CutPrescription{key.v, {st.diagonal->a, st.diagonal->b}});
      }
      cx = build_complex(std::move(cx.points), hv, presc);
    }
    warn_inverted(cx);

    DriverConfig cfg;
    cfg.allow_flips = !no_flips;
    cfg.allow_steiner = !no_steiner;
    cfg.force_six = force_six;
    cfg.flip_mode =
        flip_mode == "single" ? DriverConfig::FlipMode::Single : DriverConfig::FlipMode::Pair;

    ConversionResult result;
    try {
      result = hex_to_tet(cx, cfg);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_code_for(e);
    }

    bool verified_ok = true;
    if (verify) {
      MeshCertification cert = certify_mesh(cx, result.mesh);
      verified_ok = cert.ok();
      result.report.conforming = result.report.conforming && cert.ok();
      for (const auto& f : cert.failures) result.report.failures.push_back(f);
      if (!cert.volume_ok) result.report.failures.push_back("volume conservation failed");
    }

    write_tetmesh(result.mesh, output, *out_fmt);
    if (!report_path.empty()) write_report_file(result.report, result.mesh, report_path);

    const auto& r = result.report;
    std::cout << "hexes " << r.hexes << " -> tets " << result.mesh.tets.size() << " (marching6 "
              << r.count(Method::Marching6) << ", prism_split6 " << r.count(Method::PrismSplit6)
              << ", five " << r.count(Method::Five) << ", steiner12 "
              << r.count(Method::Steiner12) << "); flips " << r.flips_performed.size()
              << ", steiner points " << r.steiner_points.size() << "\n";
    if (verify)
      std::cout << "verification: " << (verified_ok ? "certified conforming" : "FAILED") << "\n";
    return verified_ok ? kExitOk : kExitVerify;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace hextet
