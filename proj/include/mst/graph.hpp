#ifndef MST_GRAPH_HPP_
#define MST_GRAPH_HPP_

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace mst {

using Vertex = int; // 1-based ids
using VertexSet = std::vector<Vertex>; // kept sorted and duplicate-free
using DistanceMap = std::vector<double>; // index 0 unused, INF = unreachable

inline constexpr double INF = std::numeric_limits<double>::infinity();

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    double w = 0.0; // >= 0; INF marks a structural edge that never carries distance
};

/// Undirected edge-weighted graph. Weights are nonnegative; an INF weight
/// keeps the edge structurally present but unusable by shortest paths.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> &edges() const { return edges_; }

    void add_edge(Vertex u, Vertex v, double w);
    bool has_edge(Vertex u, Vertex v) const;

    // neighbors of u as (vertex, weight), sorted by vertex id
    const std::vector<std::pair<Vertex, double>> &neighbors(Vertex u) const;

    void check_vertex(Vertex v) const; // throws std::invalid_argument when out of range

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, double>>> adj_;
};

// ---- vertex set helpers ----

VertexSet make_vertex_set(std::vector<Vertex> ids);
bool set_contains(const VertexSet &s, Vertex v);
bool is_subset(const VertexSet &a, const VertexSet &b);
VertexSet set_union(const VertexSet &a, const VertexSet &b);
VertexSet set_minus(const VertexSet &a, const VertexSet &b);

// ---- core metric operations ----

/// Exact multi-source Dijkstra in G[restrict_to] (whole graph when null).
DistanceMap sssp_distances(const WeightedGraph &g, const VertexSet &sources,
                           const VertexSet *restrict_to = nullptr,
                           double cutoff = INF);

enum class DiameterMode { weak, strong };

/// Weak mode: max pairwise distance in G; strong mode: in G[A].
double set_diameter(const WeightedGraph &g, const VertexSet &a, DiameterMode mode);

/// True iff all distinct u,v in A are at distance > r (unreachable counts as > r).
bool is_scattered(const WeightedGraph &g, const VertexSet &a, double r,
                  const VertexSet *restrict_to = nullptr);

/// Greedy maximal r-scattered subset of A, scanning A in increasing id order.
VertexSet greedy_maximal_scattered(const WeightedGraph &g, const VertexSet &a, double r,
                                   const VertexSet *restrict_to = nullptr);

} // namespace mst

#endif
