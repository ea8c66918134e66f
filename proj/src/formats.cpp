#include "gpgraph/formats.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gpgraph {

namespace {

constexpr const char* kHeader = ">>graph6<<";

std::string strip(const std::string& text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s = text.substr(b, e - b);
    if (s.rfind(kHeader, 0) == 0) s = s.substr(std::string(kHeader).size());
    return s;
}

int sixbit(char c) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = sixbit(s[0]);
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6: order beyond supported range");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated order field");
        n = (static_cast<long long>(sixbit(s[1])) << 12) |
            (static_cast<long long>(sixbit(s[2])) << 6) | sixbit(s[3]);
        pos = 4;
    }
    if (n < 1) throw std::invalid_argument("graph6: order must be >= 1");

    const long long bits = n * (n - 1) / 2;
    const std::size_t expect = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != expect)
        throw std::invalid_argument("graph6: body length mismatch");

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int group = sixbit(s[pos + static_cast<std::size_t>(k / 6)]);
            if ((group >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (; k < static_cast<long long>(expect) * 6; ++k) {
        int group = sixbit(s[pos + static_cast<std::size_t>(k / 6)]);
        if ((group >> (5 - k % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding");
    }
    return build_graph(static_cast<int>(n), edges, BuildMode::relaxed);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("write_graph6: order beyond supported range");
    }

    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph json: missing integer field 'n'");
    int n = j["n"].get<int>();
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw std::invalid_argument("graph json: 'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw std::invalid_argument("graph json: each edge must be [u,v]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    Graph g = build_graph(n, edges, BuildMode::relaxed);
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
            throw std::invalid_argument("graph json: 'labels' must list one string per vertex");
        std::vector<std::string> labels;
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
        g = with_labels(std::move(g), std::move(labels));
    }
    return g;
}

std::string write_graph_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j.dump();
}

std::string to_dot(const Graph& g, const VertexSet& highlight) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        bool hi = highlight.universe() > 0 && highlight.test(v);
        if (!g.labels().empty() || hi) {
            out << " [";
            if (!g.labels().empty()) {
                out << "label=\"" << g.labels()[static_cast<std::size_t>(v)] << "\"";
                if (hi) out << ", ";
            }
            if (hi) out << "style=filled, fillcolor=gold";
            out << "]";
        }
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const Graph& g) { return to_dot(g, VertexSet(g.order())); }

}  // namespace gpgraph
