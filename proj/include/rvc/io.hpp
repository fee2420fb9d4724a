#ifndef RVC_IO_HPP
#define RVC_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rvc/digraph.hpp"
#include "rvc/verify.hpp"

namespace rvc {

// Raised on malformed input files; the CLI maps it to its parse exit code.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Digraph files: a header line "n m" followed by m lines "u v", one arc
// each. '#' starts a comment anywhere on a line; blank lines are skipped.
// Writing then reading gives back an identical digraph.
Digraph read_digraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& d);
void write_digraph_file(const std::string& path, const Digraph& d);

// Colouring files: a header line "count K" followed by count colour ids, one
// per line. Vertex files list vertices 0..n-1 in order; arc files follow the
// sorted arc order of the host digraph.
VertexColouring read_vertex_colouring(std::istream& in);
VertexColouring read_vertex_colouring_file(const std::string& path);
ArcColouring read_arc_colouring(std::istream& in);
ArcColouring read_arc_colouring_file(const std::string& path);
void write_vertex_colouring(std::ostream& out, const VertexColouring& c);
void write_vertex_colouring_file(const std::string& path, const VertexColouring& c);
void write_arc_colouring(std::ostream& out, const ArcColouring& c);
void write_arc_colouring_file(const std::string& path, const ArcColouring& c);

}  // namespace rvc

#endif
