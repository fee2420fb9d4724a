#include "rvc/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rvc {

namespace {

// Next line with content after stripping comments, tokenized into ints.
bool next_int_line(std::istream& in, std::vector<long long>& out) {
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        out.clear();
        long long x;
        while (ss >> x) out.push_back(x);
        if (!ss.eof()) throw parse_error("unexpected token: " + line);
        if (!out.empty()) return true;
    }
    return false;
}

std::vector<long long> expect_ints(std::istream& in, size_t count, const char* what) {
    std::vector<long long> vals;
    if (!next_int_line(in, vals)) throw parse_error(std::string("missing ") + what);
    if (vals.size() != count)
        throw parse_error(std::string("expected ") + std::to_string(count) + " values for " +
                          what);
    return vals;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    return out;
}

std::pair<int, std::vector<int>> read_colouring_body(std::istream& in, const char* kind) {
    auto head = expect_ints(in, 2, "colouring header");
    long long count = head[0], k = head[1];
    if (count < 1 || count > 1000000) throw parse_error("colouring size out of range");
    if (k < 0 || k > count) throw parse_error("colour count out of range");
    std::vector<int> ids;
    ids.reserve(count);
    for (long long i = 0; i < count; ++i) {
        auto v = expect_ints(in, 1, kind);
        ids.push_back(static_cast<int>(v[0]));
    }
    std::vector<long long> rest;
    if (next_int_line(in, rest)) throw parse_error("trailing data after colouring");
    return {static_cast<int>(k), std::move(ids)};
}

}  // namespace

Digraph read_digraph(std::istream& in) {
    auto head = expect_ints(in, 2, "digraph header");
    long long n = head[0], m = head[1];
    if (n < 1 || n > 1000000) throw parse_error("vertex count out of range");
    if (m < 0 || m > 10000000) throw parse_error("arc count out of range");
    std::vector<Arc> arcs;
    arcs.reserve(m);
    for (long long i = 0; i < m; ++i) {
        auto uv = expect_ints(in, 2, "arc line");
        if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n)
            throw parse_error("arc endpoint out of range");
        arcs.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    std::vector<long long> rest;
    if (next_int_line(in, rest)) throw parse_error("trailing data after arc list");
    try {
        Digraph d(static_cast<int>(n), std::move(arcs));
        if (d.arc_count() != static_cast<int>(m))
            throw parse_error("duplicate arcs in input");
        return d;
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Digraph read_digraph_file(const std::string& path) {
    auto in = open_in(path);
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

void write_digraph_file(const std::string& path, const Digraph& d) {
    auto out = open_out(path);
    write_digraph(out, d);
}

VertexColouring read_vertex_colouring(std::istream& in) {
    auto [k, ids] = read_colouring_body(in, "vertex colour line");
    int n = static_cast<int>(ids.size());
    try {
        return VertexColouring(n, k, std::move(ids));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

VertexColouring read_vertex_colouring_file(const std::string& path) {
    auto in = open_in(path);
    return read_vertex_colouring(in);
}

ArcColouring read_arc_colouring(std::istream& in) {
    auto [k, ids] = read_colouring_body(in, "arc colour line");
    int m = static_cast<int>(ids.size());
    try {
        return ArcColouring(m, k, std::move(ids));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

ArcColouring read_arc_colouring_file(const std::string& path) {
    auto in = open_in(path);
    return read_arc_colouring(in);
}

void write_vertex_colouring(std::ostream& out, const VertexColouring& c) {
    out << c.n << ' ' << c.K << '\n';
    for (int id : c.colour) out << id << '\n';
}

void write_vertex_colouring_file(const std::string& path, const VertexColouring& c) {
    auto out = open_out(path);
    write_vertex_colouring(out, c);
}

void write_arc_colouring(std::ostream& out, const ArcColouring& c) {
    out << c.m << ' ' << c.K << '\n';
    for (int id : c.colour) out << id << '\n';
}

void write_arc_colouring_file(const std::string& path, const ArcColouring& c) {
    auto out = open_out(path);
    write_arc_colouring(out, c);
}

}  // namespace rvc
