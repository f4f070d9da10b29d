#ifndef HEXTET_IO_HPP
#define HEXTET_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hextet/core.hpp"
#include "hextet/driver.hpp"

namespace hextet {

enum class MeshFormat : std::uint8_t { GmshMsh22Ascii, VtkLegacyAscii, NativeStructuredText };

/// Formats: "gmsh" (.msh), "vtk" (.vtk), "native" (.hexmesh/.tetmesh/.txt).
std::optional<MeshFormat> format_from_name(const std::string& s);
std::optional<MeshFormat> format_from_path(const std::string& path);

// ---- input ----

/// Gmsh MSH 2.2 ASCII; only 8-node hexahedra (element type 5) are accepted.
/// Throws ParseError, UnsupportedElement; the complex is built with
/// build_complex (NonManifoldFace etc. propagate).
HexComplex read_gmsh_hex(std::istream& in);
HexComplex read_gmsh_hex_file(const std::string& path);

/// Native structured text, lossless round trip including cut states.
HexComplex read_native_hex(std::istream& in);
HexComplex read_native_hex_file(const std::string& path);

HexComplex read_mesh(const std::string& path, MeshFormat format);

/// Native hex-complex writer (round-trip counterpart of read_native_hex).
void write_native_hex(const HexComplex& cx, std::ostream& out);

/// Sidecar cut prescription file (JSON): {"cuts":[{"face":[4 ids],"diagonal":[2 ids]},...]}.
std::vector<CutPrescription> read_cuts(std::istream& in);
std::vector<CutPrescription> read_cuts_file(const std::string& path);

// ---- output ----

void write_gmsh_tets(const TetMesh& mesh, std::ostream& out);
void write_vtk_tets(const TetMesh& mesh, std::ostream& out);  // provenance as cell data
void write_native_tets(const TetMesh& mesh, std::ostream& out);
void write_tetmesh(const TetMesh& mesh, const std::string& path, MeshFormat format);

/// Reader for the native tet format (round-trip tests and downstream tools).
TetMesh read_native_tets(std::istream& in);
TetMesh read_native_tets_file(const std::string& path);

/// Structured-text (JSON) conversion report.
void write_report(const ConversionReport& report, const TetMesh& mesh, std::ostream& out);
void write_report_file(const ConversionReport& report, const TetMesh& mesh,
                       const std::string& path);

// ---- CLI ----

/// Flags: --input, --input-format, --cuts, --output, --output-format,
/// --no-flips, --no-steiner, --force-six, --flip-mode, --verify, --report,
/// --classify-configs. Exit codes: 0 ok, 2 parse/config error,
/// 3 unresolved degeneracy, 4 verification failure.
int cli_main(int argc, const char* const* argv);

}  // namespace hextet

#endif
