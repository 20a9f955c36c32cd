#include "disect/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace disect {

namespace {

void validate_vertex(int v, int n, int line) {
    if (v < 0 || v >= n) {
        throw ParseError(ParseError::Kind::VertexOutOfRange, line,
                         "vertex index " + std::to_string(v) +
                             " out of range [0, " + std::to_string(n) + ") at line " +
                             std::to_string(line));
    }
}

// Parses "a b" with optional surrounding whitespace; returns false on
// anything else (missing token, trailing garbage, non-integer).
bool parse_int_pair(std::string_view s, long long& a, long long& b) {
    const char* p = s.data();
    const char* end = s.data() + s.size();
    auto skip_ws = [&] {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    };
    skip_ws();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc()) return false;
    p = r1.ptr;
    skip_ws();
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc()) return false;
    p = r2.ptr;
    skip_ws();
    return p == end;
}

} // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw GuardError("digraph: negative vertex count");
    std::sort(arcs_.begin(), arcs_.end());
    out_.assign(n_, {});
    in_.assign(n_, {});
    arc_set_.reserve(arcs_.size() * 2);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        auto [u, v] = arcs_[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw GuardError("digraph: arc endpoint out of range");
        if (u == v) throw GuardError("digraph: self-loop");
        if (i > 0 && arcs_[i] == arcs_[i - 1])
            throw GuardError("digraph: duplicate arc");
        out_[u].push_back(v);
        in_[v].push_back(u);
        arc_set_.insert(key(u, v));
    }
    // arcs_ is sorted, so out_ lists are already ascending; in_ needs a sort.
    for (auto& lst : in_) std::sort(lst.begin(), lst.end());
}

UndirectedGraph::UndirectedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw GuardError("graph: negative vertex count");
    for (auto& e : edges_) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            throw GuardError("graph: edge endpoint out of range");
        if (e.first == e.second) throw GuardError("graph: self-loop");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1]) throw GuardError("graph: duplicate edge");
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
}

bool UndirectedGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& lst = adj_[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

long long DegreeProfile::min_semidegree() const {
    long long best = semidegree.empty() ? 0 : semidegree[0];
    for (int x : semidegree) best = std::min<long long>(best, x);
    return best;
}

long long DegreeProfile::min_outdegree() const {
    long long best = out.empty() ? 0 : out[0];
    for (int x : out) best = std::min<long long>(best, x);
    return best;
}

long long DegreeProfile::max_degree() const {
    long long best = 0;
    for (std::size_t v = 0; v < out.size(); ++v)
        best = std::max<long long>(best, out[v] + in[v]);
    return best;
}

Digraph parse_digraph(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        if (nl == text.size()) break;
        pos = nl + 1;
    }

    long long n = -1, m = -1;
    std::vector<Arc> arcs;
    long long seen = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lineno = static_cast<int>(i) + 1;
        std::string_view line = lines[i];
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;  // blank
        if (line[first] == '#') continue;               // comment
        long long a, b;
        if (n < 0) {
            if (!parse_int_pair(line, a, b) || a < 0 || b < 0)
                throw ParseError(ParseError::Kind::MalformedHeader, lineno,
                                 "malformed header at line " + std::to_string(lineno) +
                                     ": expected \"n m\"");
            n = a;
            m = b;
            arcs.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (!parse_int_pair(line, a, b))
            throw ParseError(ParseError::Kind::MalformedLine, lineno,
                             "malformed arc line " + std::to_string(lineno));
        if (seen == m)
            throw ParseError(ParseError::Kind::ArcCountMismatch, lineno,
                             "more than " + std::to_string(m) + " arc lines");
        validate_vertex(static_cast<int>(a), static_cast<int>(n), lineno);
        validate_vertex(static_cast<int>(b), static_cast<int>(n), lineno);
        if (a == b)
            throw ParseError(ParseError::Kind::SelfLoop, lineno,
                             "self-loop at line " + std::to_string(lineno));
        arcs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        ++seen;
    }
    if (n < 0)
        throw ParseError(ParseError::Kind::MalformedHeader, 0, "missing header");
    if (seen != m)
        throw ParseError(ParseError::Kind::ArcCountMismatch, 0,
                         "expected " + std::to_string(m) + " arcs, found " +
                             std::to_string(seen));
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (arcs[i] == arcs[i - 1])
            throw ParseError(ParseError::Kind::DuplicateArc, 0,
                             "duplicate arc " + std::to_string(arcs[i].first) + " " +
                                 std::to_string(arcs[i].second));
    }
    return Digraph(static_cast<int>(n), std::move(arcs));
}

std::string serialize(const Digraph& d) {
    std::ostringstream out;
    out << d.n() << ' ' << d.m() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

DegreeProfile degree_profile(const Digraph& d) {
    DegreeProfile p;
    int n = d.n();
    p.out.resize(n);
    p.in.resize(n);
    p.splus.resize(n);
    p.s.resize(n);
    p.semidegree.resize(n);
    for (int v = 0; v < n; ++v) {
        p.out[v] = d.out_degree(v);
        p.in[v] = d.in_degree(v);
        p.splus[v] = p.out[v] - p.in[v];
        p.s[v] = p.splus[v] < 0 ? -p.splus[v] : p.splus[v];
        p.semidegree[v] = std::min(p.out[v], p.in[v]);
    }
    return p;
}

CutStats cut_sizes(const Digraph& d, const std::vector<int>& part1,
                   const std::vector<int>& part2) {
    std::vector<signed char> side(d.n(), -1);
    for (int v : part1) {
        if (v < 0 || v >= d.n() || side[v] != -1)
            throw GuardError("cut_sizes: invalid or overlapping parts");
        side[v] = 0;
    }
    for (int v : part2) {
        if (v < 0 || v >= d.n() || side[v] != -1)
            throw GuardError("cut_sizes: invalid or overlapping parts");
        side[v] = 1;
    }
    for (int v = 0; v < d.n(); ++v)
        if (side[v] == -1)
            throw GuardError("cut_sizes: vertex " + std::to_string(v) +
                             " missing from both parts");
    CutStats cs;
    for (auto [u, v] : d.arcs()) {
        if (side[u] == 0)
            (side[v] == 0 ? cs.internal1 : cs.e12) += 1;
        else
            (side[v] == 1 ? cs.internal2 : cs.e21) += 1;
    }
    return cs;
}

UndirectedGraph underlying_graph(const Digraph& d) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(d.m()));
    for (auto [u, v] : d.arcs()) {
        if (u < v || !d.has_arc(v, u)) {
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return UndirectedGraph(d.n(), std::move(edges));
}

std::pair<Digraph, std::vector<int>> induced_subdigraph(const Digraph& d,
                                                        const std::vector<int>& s) {
    std::vector<int> map = s;
    std::sort(map.begin(), map.end());
    map.erase(std::unique(map.begin(), map.end()), map.end());
    std::vector<int> inverse(d.n(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] < 0 || map[i] >= d.n())
            throw GuardError("induced_subdigraph: vertex out of range");
        inverse[map[i]] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs())
        if (inverse[u] >= 0 && inverse[v] >= 0)
            arcs.emplace_back(inverse[u], inverse[v]);
    return {Digraph(static_cast<int>(map.size()), std::move(arcs)), std::move(map)};
}

std::pair<UndirectedGraph, std::vector<int>> induced_subgraph(
    const UndirectedGraph& g, const std::vector<int>& s) {
    std::vector<int> map = s;
    std::sort(map.begin(), map.end());
    map.erase(std::unique(map.begin(), map.end()), map.end());
    std::vector<int> inverse(g.n(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] < 0 || map[i] >= g.n())
            throw GuardError("induced_subgraph: vertex out of range");
        inverse[map[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (inverse[u] >= 0 && inverse[v] >= 0)
            edges.emplace_back(inverse[u], inverse[v]);
    return {UndirectedGraph(static_cast<int>(map.size()), std::move(edges)),
            std::move(map)};
}

} // namespace disect
