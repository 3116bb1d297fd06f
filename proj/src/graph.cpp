#include "evg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace evg {

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Graph Graph::build(int n,
                   std::vector<std::pair<int, int>> edges,
                   std::vector<std::pair<int, int>> thresholds) {
    if (n < 0) throw ParseError("negative node count");
    if (static_cast<int>(thresholds.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " threshold pairs, got " +
                         std::to_string(thresholds.size()));

    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.t_inf_.resize(n);
    g.t_evg_.resize(n);
    for (int v = 0; v < n; ++v) {
        g.t_inf_[v] = thresholds[v].first;
        g.t_evg_[v] = thresholds[v].second;
    }

    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw ParseError("self-loop at node " + std::to_string(u));
        if (u < 0 || v >= n) throw ParseError("edge endpoint out of range: " +
                                              std::to_string(u) + " " + std::to_string(v));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw ParseError("duplicate edge " + std::to_string(edges[i].first) + " " +
                             std::to_string(edges[i].second));

    for (auto [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = edges.size();

    for (int v = 0; v < n; ++v) {
        const int ti = g.t_inf_[v], te = g.t_evg_[v];
        if (ti < 0 || ti > te || te > g.degree(v) + 1)
            throw ParseError("node " + std::to_string(v) + ": thresholds (" +
                             std::to_string(ti) + "," + std::to_string(te) +
                             ") violate 0 <= t_I <= t_E <= d+1 with d=" +
                             std::to_string(g.degree(v)));
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_complete() const {
    return m_ == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

bool Graph::is_forest() const {
    // union-find; a cycle shows up as an edge inside one component
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u]) {
            if (u >= v) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
    return true;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (!toks.empty()) lines.push_back({number, std::move(toks)});
    }
    return lines;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + tok + "'", line);
    }
}

} // namespace

Graph parse_graph(const std::string& text) {
    auto lines = tokenize(text);
    std::size_t i = 0;

    if (i >= lines.size() || lines[i].tokens != std::vector<std::string>{"evg-graph", "v1"})
        throw ParseError("missing 'evg-graph v1' header", i < lines.size() ? lines[i].number : 1);
    ++i;

    if (i >= lines.size() || lines[i].tokens.size() != 2 || lines[i].tokens[0] != "n")
        throw ParseError("expected 'n <N>'", i < lines.size() ? lines[i].number : 1);
    const int n = parse_int(lines[i].tokens[1], lines[i].number);
    if (n < 0) throw ParseError("negative node count", lines[i].number);
    ++i;

    std::vector<std::pair<int, int>> thresholds(n, {-1, -1});
    std::vector<bool> have_threshold(n, false);
    std::vector<std::pair<int, int>> edges;

    for (; i < lines.size(); ++i) {
        const auto& [number, toks] = lines[i];
        if (toks[0] == "t") {
            if (toks.size() != 4) throw ParseError("expected 't <id> <tI> <tE>'", number);
            int id = parse_int(toks[1], number);
            if (id < 0 || id >= n) throw ParseError("node id " + std::to_string(id) + " out of range", number);
            if (have_threshold[id]) throw ParseError("duplicate threshold line for node " + std::to_string(id), number);
            have_threshold[id] = true;
            thresholds[id] = {parse_int(toks[2], number), parse_int(toks[3], number)};
        } else if (toks[0] == "e") {
            if (toks.size() != 3) throw ParseError("expected 'e <u> <v>'", number);
            int u = parse_int(toks[1], number);
            int v = parse_int(toks[2], number);
            if (u == v) throw ParseError("self-loop at node " + std::to_string(u), number);
            if (u > v) throw ParseError("edge must satisfy u < v", number);
            if (u < 0 || v >= n) throw ParseError("edge endpoint out of range", number);
            edges.emplace_back(u, v);
        } else {
            throw ParseError("unknown directive '" + toks[0] + "'", number);
        }
    }

    for (int v = 0; v < n; ++v)
        if (!have_threshold[v])
            throw ParseError("missing threshold line for node " + std::to_string(v));

    return Graph::build(n, std::move(edges), std::move(thresholds));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "evg-graph v1\n";
    out << "n " << g.node_count() << "\n";
    for (int v = 0; v < g.node_count(); ++v)
        out << "t " << v << " " << g.threshold_influence(v) << " " << g.threshold_evangelize(v) << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << serialize_graph(g);
}

} // namespace evg
