#include "core/dump.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace beliefnet {

namespace {

// Shortest decimal form that round-trips a double.
std::string fmt_double(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

struct LineReader {
    std::istream& in;
    int line_no = 0;
    std::string line{};

    bool next() {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            return true;
        }
        return false;
    }
};

double parse_double(std::istringstream& ss, int line_no, const char* what) {
    double v;
    if (!(ss >> v)) throw ParseError(line_no, std::string("expected ") + what);
    return v;
}

std::uint64_t parse_u64(std::istringstream& ss, int line_no, const char* what) {
    std::int64_t v;
    if (!(ss >> v) || v < 0) throw ParseError(line_no, std::string("expected ") + what);
    return static_cast<std::uint64_t>(v);
}

void expect_end(std::istringstream& ss, int line_no) {
    std::string rest;
    if (ss >> rest) throw ParseError(line_no, "trailing content '" + rest + "'");
}

}  // namespace

void save_network(const SignedNetwork& net, std::ostream& out) {
    out << "N " << net.n_vertices() << " H " << fmt_double(net.tolerance()) << "\n";
    for (VertexId id : net.vertex_ids_sorted()) {
        const VertexAttrs& a = net.attrs(id);
        out << "V " << id << ' ' << fmt_double(a.fitness) << ' ' << fmt_double(a.g) << ' '
            << fmt_double(a.h) << ' ' << a.ordinal << "\n";
    }
    std::vector<SignedNetwork::Edge> edges = net.edges();
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        return x.u != y.u ? x.u < y.u : x.v < y.v;
    });
    for (const auto& e : edges)
        out << "E " << e.u << ' ' << e.v << ' ' << sign_value(e.sign) << "\n";
}

std::string dump_network(const SignedNetwork& net) {
    std::ostringstream ss;
    save_network(net, ss);
    return ss.str();
}

void save_network_file(const SignedNetwork& net, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    save_network(net, out);
    if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

SignedNetwork load_network(std::istream& in) {
    LineReader reader{in};
    if (!reader.next()) throw ParseError(1, "empty input, expected header");

    std::istringstream header(reader.line);
    std::string tag, htag;
    header >> tag;
    if (tag != "N") throw ParseError(reader.line_no, "expected header 'N <count> H <tolerance>'");
    const std::uint64_t declared = parse_u64(header, reader.line_no, "vertex count");
    header >> htag;
    if (htag != "H") throw ParseError(reader.line_no, "expected 'H <tolerance>' in header");
    const double tolerance = parse_double(header, reader.line_no, "tolerance");
    expect_end(header, reader.line_no);
    if (tolerance < 0.0 || tolerance > 1.0)
        throw ParseError(reader.line_no, "tolerance must lie in [0, 1]");

    SignedNetwork net(tolerance);
    std::uint64_t n_vertices = 0;
    while (reader.next()) {
        std::istringstream ss(reader.line);
        ss >> tag;
        if (tag == "V") {
            const VertexId id = parse_u64(ss, reader.line_no, "vertex id");
            VertexAttrs a;
            a.fitness = parse_double(ss, reader.line_no, "fitness");
            a.g = parse_double(ss, reader.line_no, "g");
            a.h = parse_double(ss, reader.line_no, "h");
            a.ordinal = parse_u64(ss, reader.line_no, "ordinal");
            expect_end(ss, reader.line_no);
            if (!a.valid())
                throw ParseError(reader.line_no,
                                 "invalid vertex attributes (need f >= 0, g,h >= 0, g+h <= 1)");
            try {
                net.add_vertex(id, a);
            } catch (const ContractViolation& e) {
                throw ParseError(reader.line_no, e.what());
            }
            ++n_vertices;
        } else if (tag == "E") {
            const VertexId u = parse_u64(ss, reader.line_no, "vertex id");
            const VertexId v = parse_u64(ss, reader.line_no, "vertex id");
            std::int64_t sv;
            if (!(ss >> sv)) throw ParseError(reader.line_no, "expected sign");
            expect_end(ss, reader.line_no);
            if (sv < -1 || sv > 1) throw ParseError(reader.line_no, "sign must be -1, 0 or 1");
            try {
                net.add_edge(u, v, sign_from_int(static_cast<int>(sv)));
            } catch (const ContractViolation& e) {
                throw ParseError(reader.line_no, e.what());
            }
        } else {
            throw ParseError(reader.line_no, "unknown line tag '" + tag + "'");
        }
    }
    if (n_vertices != declared)
        throw ParseError(reader.line_no,
                         "header declares " + std::to_string(declared) + " vertices, found " +
                             std::to_string(n_vertices));
    return net;
}

SignedNetwork load_network_string(const std::string& text) {
    std::istringstream ss(text);
    return load_network(ss);
}

SignedNetwork load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_network(in);
}

}  // namespace beliefnet
