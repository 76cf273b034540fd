#include "ohba/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace ohba {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

// Reads the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, int& line_no, Line& out) {
    std::string s;
    while (std::getline(in, s)) {
        ++line_no;
        std::size_t i = s.find_first_not_of(" \t\r");
        if (i == std::string::npos || s[i] == '#') continue;
        out = {line_no, s};
        return true;
    }
    return false;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

long long parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) fail(line_no, "bad integer '" + tok + "'");
        return v;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        fail(line_no, "bad integer '" + tok + "'");
    }
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

} // namespace

ParsedGraph read_graph(std::istream& in) {
    int line_no = 0;
    Line line;
    if (!next_content_line(in, line_no, line)) throw InputError("empty graph file");
    auto toks = tokens_of(line.text);

    if (toks[0] == "join") {
        if (toks.size() != 4) fail(line.number, "expected 'join <p> <a> <b>'");
        const int p = static_cast<int>(parse_int(toks[1], line.number));
        const int a = static_cast<int>(parse_int(toks[2], line.number));
        const int b = static_cast<int>(parse_int(toks[3], line.number));
        try {
            return JoinGraph(p, a, b);
        } catch (const ParamError& e) {
            fail(line.number, e.what());
        }
    }

    if (toks[0] == "n") {
        if (toks.size() != 2) fail(line.number, "expected 'n <count>'");
        const long long n = parse_int(toks[1], line.number);
        if (n < 0 || n > GenericGraph::kMaxVertices)
            fail(line.number, "vertex count must be in [0, 64]");
        GenericGraph g(static_cast<int>(n));
        while (next_content_line(in, line_no, line)) {
            toks = tokens_of(line.text);
            if (toks[0] != "e" || toks.size() != 3)
                fail(line.number, "expected 'e <u> <v>'");
            const long long u = parse_int(toks[1], line.number);
            const long long v = parse_int(toks[2], line.number);
            if (u < 0 || v < 0 || u >= n || v >= n)
                fail(line.number, "edge endpoint out of range");
            if (u == v) fail(line.number, "self-loop");
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
        return g;
    }

    fail(line.number, "expected 'join ...' or 'n ...' header, got '" + toks[0] + "'");
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const ParsedGraph& g) {
    if (const auto* j = std::get_if<JoinGraph>(&g)) {
        out << "join " << j->p() << ' ' << j->a() << ' ' << j->b() << '\n';
        return;
    }
    const auto& gg = std::get<GenericGraph>(g);
    out << "n " << gg.vertex_count() << '\n';
    for (Vertex u = 0; u < gg.vertex_count(); ++u)
        for (Vertex v = u + 1; v < gg.vertex_count(); ++v)
            if (gg.adjacent(u, v)) out << "e " << u << ' ' << v << '\n';
}

int graph_vertex_count(const ParsedGraph& g) {
    return std::visit([](const auto& gr) { return gr.vertex_count(); }, g);
}

std::string graph_vertex_name(const ParsedGraph& g, Vertex v) {
    return std::visit([&](const auto& gr) { return gr.vertex_name(v); }, g);
}

namespace {

Vertex resolve_vertex(const ParsedGraph& g, const std::string& id, int line_no) {
    if (const auto* j = std::get_if<JoinGraph>(&g)) {
        try {
            return j->vertex_by_name(id);
        } catch (const InputError& e) {
            fail(line_no, e.what());
        }
    }
    const auto& gg = std::get<GenericGraph>(g);
    const long long v = parse_int(id, line_no);
    if (v < 0 || v >= gg.vertex_count()) fail(line_no, "vertex " + id + " out of range");
    return static_cast<Vertex>(v);
}

} // namespace

ListAssignment read_lists(std::istream& in, const ParsedGraph& g) {
    const int n = graph_vertex_count(g);
    std::vector<ColorSet> lists(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::optional<int> k;

    int line_no = 0;
    Line line;
    bool first = true;
    while (next_content_line(in, line_no, line)) {
        auto toks = tokens_of(line.text);
        if (first && toks[0] == "k") {
            if (toks.size() != 2) fail(line.number, "expected 'k <int>'");
            const long long kk = parse_int(toks[1], line.number);
            if (kk < 1) fail(line.number, "k must be positive");
            k = static_cast<int>(kk);
            first = false;
            continue;
        }
        first = false;

        // "<id>: c1 c2 ..." with the colon attached to the id or standalone.
        std::string id = toks[0];
        std::size_t color_from = 1;
        if (!id.empty() && id.back() == ':') {
            id.pop_back();
        } else if (toks.size() > 1 && toks[1] == ":") {
            color_from = 2;
        } else {
            fail(line.number, "expected '<id>: c1 c2 ...'");
        }
        if (id.empty()) fail(line.number, "missing vertex id");

        const Vertex v = resolve_vertex(g, id, line.number);
        if (seen[static_cast<std::size_t>(v)])
            fail(line.number, "duplicate list for vertex " + id);
        seen[static_cast<std::size_t>(v)] = true;

        ColorSet cs;
        for (std::size_t i = color_from; i < toks.size(); ++i) {
            const long long c = parse_int(toks[i], line.number);
            if (c < 0) fail(line.number, "colors must be nonnegative");
            cs.push_back(static_cast<Color>(c));
        }
        if (cs.empty()) fail(line.number, "empty list for vertex " + id);
        cs = canonical_color_set(std::move(cs));
        if (k && static_cast<int>(cs.size()) != *k)
            fail(line.number, "list for vertex " + id + " has " +
                                  std::to_string(cs.size()) + " colors, expected k=" +
                                  std::to_string(*k));
        lists[static_cast<std::size_t>(v)] = std::move(cs);
    }

    for (Vertex v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw InputError("no list given for vertex " + graph_vertex_name(g, v));
    return ListAssignment(std::move(lists));
}

ListAssignment read_lists_file(const std::string& path, const ParsedGraph& g) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open lists file '" + path + "'");
    return read_lists(in, g);
}

void write_lists(std::ostream& out, const ParsedGraph& g, const ListAssignment& L) {
    if (auto k = L.uniform_size()) out << "k " << *k << '\n';
    for (Vertex v = 0; v < L.vertex_count(); ++v) {
        out << graph_vertex_name(g, v) << ':';
        for (Color c : L.list(v)) out << ' ' << c;
        out << '\n';
    }
}

void write_coloring(std::ostream& out, const ParsedGraph& g, const Coloring& f) {
    for (Vertex v = 0; v < static_cast<int>(f.assignment.size()); ++v)
        out << graph_vertex_name(g, v) << ": " << f.at(v) << '\n';
}

} // namespace ohba
