#pragma once

// Weighted-graph calculus for boundary dual graphs: blow-ups and their exact
// inverses, reduction to a minimal representative, weight-preserving
// isomorphism, and the star-shaped boundary graph of a tuple with DOT and
// JSON renderings.

#include "pbsurf/singular.hpp"

#include <set>
#include <string>

namespace pbsurf {

// Finite simple graph with integer vertex weights.  Ids are opaque; ids of
// deleted vertices are never reused.  Equality compares weights and edges
// only, never next_id.
struct WeightedGraph {
    std::map<int, long long> weights;     // id -> self-intersection weight
    std::set<std::pair<int, int>> edges;  // stored with first < second
    int next_id = 0;

    int add_vertex(long long w);
    void add_edge(int u, int v);
    bool has_vertex(int v) const { return weights.count(v) > 0; }
    bool has_edge(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    std::size_t size() const { return weights.size(); }
    bool connected() const;  // vacuously true when empty

    bool operator==(const WeightedGraph& o) const {
        return weights == o.weights && edges == o.edges;
    }
};

// Adds a (-1)-vertex x joined to v and drops v's weight by one; returns x.
int blow_up_vertex(WeightedGraph& g, int v);

// Replaces the edge {u,v} by the path u - x - v with x of weight -1 and
// drops both endpoint weights by one; returns x.
int blow_up_edge(WeightedGraph& g, int u, int v);

// Weight -1, degree 1 or 2, and in the degree-2 case non-adjacent neighbors;
// exactly the vertices a blow-up can have produced.
bool is_superfluous(const WeightedGraph& g, int v);

// Exact inverse of the blow-up that created v; v must be superfluous.
void blow_down(WeightedGraph& g, int v);

// Blows down the smallest-id superfluous vertex until none remains.
WeightedGraph minimalize(WeightedGraph g);

bool graphs_isomorphic(const WeightedGraph& a, const WeightedGraph& b);

// Deterministic DOT text; vertices in id order labeled "v<id> (<weight>)".
std::string to_dot(const WeightedGraph& g);

// {"vertices": [{"id": "v0", "weight": -1}, ...], "edges": [["v0","v1"], ...]}
std::string graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const std::string& text);

// Star-shaped boundary dual graph: a central curve of genus central_genus
// carrying one branch per singular point.  A branch is the negated
// Hirzebruch-Jung chain of that point's type, central end first; branches are
// kept lexicographically sorted.  No central self-intersection is computed;
// renderings take an explicit display-only value.
struct BoundaryStar {
    Int central_genus;
    std::vector<std::vector<long long>> branches;  // entries <= -2
    bool operator==(const BoundaryStar&) const = default;
};

BoundaryStar boundary_star(const ExponentTuple& t);

// Center gets the smallest id; branch chains attach central end inward.
WeightedGraph star_to_graph(const BoundaryStar& s, long long central_weight);

std::string star_to_dot(const BoundaryStar& s, long long central_weight);
std::string star_to_json(const BoundaryStar& s, long long central_weight);

}  // namespace pbsurf
