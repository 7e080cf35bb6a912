#include "pbsurf/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

namespace pbsurf {

int WeightedGraph::add_vertex(long long w) {
    int id = next_id++;
    weights.emplace(id, w);
    return id;
}

void WeightedGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
    if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("add_edge: no such vertex");
    edges.insert({std::min(u, v), std::max(u, v)});
}

bool WeightedGraph::has_edge(int u, int v) const {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<int> WeightedGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

int WeightedGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool WeightedGraph::connected() const {
    if (weights.empty()) return true;
    std::set<int> seen;
    std::queue<int> work;
    work.push(weights.begin()->first);
    seen.insert(weights.begin()->first);
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        for (int u : neighbors(v))
            if (seen.insert(u).second) work.push(u);
    }
    return seen.size() == weights.size();
}

int blow_up_vertex(WeightedGraph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("blow_up_vertex: no such vertex");
    g.weights[v] -= 1;
    int x = g.add_vertex(-1);
    g.add_edge(v, x);
    return x;
}

int blow_up_edge(WeightedGraph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("blow_up_edge: no such edge");
    g.edges.erase({std::min(u, v), std::max(u, v)});
    g.weights[u] -= 1;
    g.weights[v] -= 1;
    int x = g.add_vertex(-1);
    g.add_edge(u, x);
    g.add_edge(v, x);
    return x;
}

bool is_superfluous(const WeightedGraph& g, int v) {
    if (!g.has_vertex(v)) return false;
    if (g.weights.at(v) != -1) return false;
    auto nb = g.neighbors(v);
    if (nb.size() == 1) return true;
    if (nb.size() == 2) return !g.has_edge(nb[0], nb[1]);
    return false;
}

void blow_down(WeightedGraph& g, int v) {
    if (!is_superfluous(g, v)) throw std::invalid_argument("blow_down: vertex not superfluous");
    auto nb = g.neighbors(v);
    for (int u : nb) {
        g.edges.erase({std::min(u, v), std::max(u, v)});
        g.weights[u] += 1;
    }
    g.weights.erase(v);
    if (nb.size() == 2) g.add_edge(nb[0], nb[1]);
}

WeightedGraph minimalize(WeightedGraph g) {
    for (;;) {
        int found = -1;
        for (const auto& [id, w] : g.weights) {
            (void)w;
            if (is_superfluous(g, id)) {
                found = id;
                break;
            }
        }
        if (found < 0) return g;
        blow_down(g, found);
    }
}

// Joint color refinement: both graphs share one color dictionary, so equal
// colors mean equal (weight, degree) and recursively equal neighborhoods.
static std::array<std::map<int, int>, 2> refine_colors(const WeightedGraph& a,
                                                       const WeightedGraph& b) {
    const WeightedGraph* gs[2] = {&a, &b};
    std::array<std::map<int, int>, 2> color;
    {
        std::map<std::pair<long long, int>, int> dict;
        for (int s = 0; s < 2; ++s)
            for (const auto& [id, w] : gs[s]->weights) {
                auto key = std::make_pair(w, gs[s]->degree(id));
                auto [it, _] = dict.emplace(key, static_cast<int>(dict.size()));
                color[s][id] = it->second;
            }
    }
    std::size_t n_colors = 0;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> dict;
        std::array<std::map<int, int>, 2> next;
        for (int s = 0; s < 2; ++s)
            for (const auto& [id, w] : gs[s]->weights) {
                (void)w;
                std::vector<int> nc;
                for (int u : gs[s]->neighbors(id)) nc.push_back(color[s].at(u));
                std::sort(nc.begin(), nc.end());
                auto key = std::make_pair(color[s].at(id), std::move(nc));
                auto [it, _] = dict.emplace(key, static_cast<int>(dict.size()));
                next[s][id] = it->second;
            }
        color = std::move(next);
        if (dict.size() == n_colors) return color;
        n_colors = dict.size();
    }
}

static bool extend_mapping(const WeightedGraph& a, const WeightedGraph& b,
                           const std::vector<int>& order, std::size_t pos,
                           const std::array<std::map<int, int>, 2>& color,
                           std::map<int, int>& mapping, std::set<int>& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (const auto& [cand, w] : b.weights) {
        (void)w;
        if (used.count(cand)) continue;
        if (color[1].at(cand) != color[0].at(v)) continue;
        bool ok = true;
        for (const auto& [av, bv] : mapping)
            if (a.has_edge(v, av) != b.has_edge(cand, bv)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        mapping[v] = cand;
        used.insert(cand);
        if (extend_mapping(a, b, order, pos + 1, color, mapping, used)) return true;
        mapping.erase(v);
        used.erase(cand);
    }
    return false;
}

bool graphs_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.size() != b.size() || a.edges.size() != b.edges.size()) return false;
    if (a.weights.empty()) return true;
    auto color = refine_colors(a, b);
    std::map<int, int> hist_a, hist_b;
    for (const auto& [id, c] : color[0]) {
        (void)id;
        ++hist_a[c];
    }
    for (const auto& [id, c] : color[1]) {
        (void)id;
        ++hist_b[c];
    }
    if (hist_a != hist_b) return false;

    // Map vertices in search order: rarest color first, then spreading along
    // edges so each candidate is constrained by already-mapped neighbors.
    int start = -1;
    for (const auto& [id, c] : color[0])
        if (start < 0 || hist_a[c] < hist_a[color[0].at(start)]) start = id;
    std::vector<int> order;
    std::set<int> visited;
    std::queue<int> work;
    work.push(start);
    visited.insert(start);
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        order.push_back(v);
        for (int u : a.neighbors(v))
            if (visited.insert(u).second) work.push(u);
    }
    for (const auto& [id, w] : a.weights) {
        (void)w;
        if (visited.insert(id).second) order.push_back(id);
    }
    std::map<int, int> mapping;
    std::set<int> used;
    return extend_mapping(a, b, order, 0, color, mapping, used);
}

std::string to_dot(const WeightedGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& [id, w] : g.weights)
        os << "  v" << id << " [label=\"v" << id << " (" << w << ")\"];\n";
    for (const auto& [u, v] : g.edges) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_json(const WeightedGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& [id, w] : g.weights)
        j["vertices"].push_back({{"id", "v" + std::to_string(id)}, {"weight", w}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges)
        j["edges"].push_back({"v" + std::to_string(u), "v" + std::to_string(v)});
    return j.dump(2) + "\n";
}

static int parse_vertex_id(const std::string& s) {
    if (s.size() < 2 || s[0] != 'v') throw std::invalid_argument("graph_from_json: bad vertex id");
    std::size_t used = 0;
    int id = std::stoi(s.substr(1), &used);
    if (used + 1 != s.size() || id < 0) throw std::invalid_argument("graph_from_json: bad vertex id");
    return id;
}

WeightedGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw std::invalid_argument("graph_from_json: not valid JSON");
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph_from_json: need vertices and edges");
    WeightedGraph g;
    for (const auto& v : j["vertices"]) {
        int id = parse_vertex_id(v.at("id").get<std::string>());
        if (g.has_vertex(id)) throw std::invalid_argument("graph_from_json: duplicate vertex id");
        g.weights[id] = v.at("weight").get<long long>();
        g.next_id = std::max(g.next_id, id + 1);
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph_from_json: bad edge");
        g.add_edge(parse_vertex_id(e[0].get<std::string>()),
                   parse_vertex_id(e[1].get<std::string>()));
    }
    return g;
}

static long long chain_entry(const Int& v) {
    if (v > std::numeric_limits<long long>::max())
        throw internal_error("boundary_star: chain entry out of range");
    return v.convert_to<long long>();
}

BoundaryStar boundary_star(const ExponentTuple& t) {
    BoundaryStar s;
    s.central_genus = boundary_genus(t);
    for (const auto& rec : singular_locus(t)) {
        HJChain chain = hj_expand(rec.type.n, rec.type.m);
        std::vector<long long> branch;
        branch.reserve(chain.size());
        for (const Int& a : chain) branch.push_back(-chain_entry(a));
        for (long long c = 0; c < rec.count; ++c) s.branches.push_back(branch);
    }
    std::sort(s.branches.begin(), s.branches.end());
    return s;
}

WeightedGraph star_to_graph(const BoundaryStar& s, long long central_weight) {
    WeightedGraph g;
    int center = g.add_vertex(central_weight);
    for (const auto& branch : s.branches) {
        int prev = center;
        for (long long w : branch) {
            int x = g.add_vertex(w);
            g.add_edge(prev, x);
            prev = x;
        }
    }
    return g;
}

std::string star_to_dot(const BoundaryStar& s, long long central_weight) {
    WeightedGraph g = star_to_graph(s, central_weight);
    std::ostringstream os;
    os << "graph boundary_star {\n";
    os << "  v0 [label=\"center genus=" << s.central_genus << " w=" << central_weight
       << " (display-only)\"];\n";
    bool first = true;
    for (const auto& [id, w] : g.weights) {
        if (first) {  // center already printed
            first = false;
            continue;
        }
        os << "  v" << id << " [label=\"v" << id << " (" << w << ")\"];\n";
    }
    for (const auto& [u, v] : g.edges) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string star_to_json(const BoundaryStar& s, long long central_weight) {
    WeightedGraph g = star_to_graph(s, central_weight);
    nlohmann::ordered_json j;
    j["central_genus"] = s.central_genus.convert_to<long long>();
    j["central_weight"] = central_weight;
    j["central_weight_display_only"] = true;
    nlohmann::ordered_json inner = nlohmann::ordered_json::parse(graph_to_json(g));
    j["vertices"] = inner["vertices"];
    j["edges"] = inner["edges"];
    return j.dump(2) + "\n";
}

}  // namespace pbsurf
