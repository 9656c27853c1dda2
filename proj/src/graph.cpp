#include "mst/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace mst {

WeightedGraph::WeightedGraph(int n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    adj_.assign(static_cast<size_t>(n) + 1, {});
}

void WeightedGraph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
}

void WeightedGraph::add_edge(Vertex u, Vertex v, double w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    if (std::isnan(w) || w < 0.0)
        throw std::invalid_argument("edge weight must be nonnegative");
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    edges_.push_back({u, v, w});
    auto insert_sorted = [](std::vector<std::pair<Vertex, double>> &lst, Vertex x, double ww) {
        auto it = std::lower_bound(lst.begin(), lst.end(), x,
                                   [](const auto &p, Vertex y) { return p.first < y; });
        lst.insert(it, {x, ww});
    };
    insert_sorted(adj_[u], v, w);
    insert_sorted(adj_[v], u, w);
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto &lst = adj_[u];
    auto it = std::lower_bound(lst.begin(), lst.end(), v,
                               [](const auto &p, Vertex y) { return p.first < y; });
    return it != lst.end() && it->first == v;
}

const std::vector<std::pair<Vertex, double>> &WeightedGraph::neighbors(Vertex u) const {
    check_vertex(u);
    return adj_[u];
}

VertexSet make_vertex_set(std::vector<Vertex> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool set_contains(const VertexSet &s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet &a, const VertexSet &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(const VertexSet &a, const VertexSet &b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet &a, const VertexSet &b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

DistanceMap sssp_distances(const WeightedGraph &g, const VertexSet &sources,
                           const VertexSet *restrict_to, double cutoff) {
    if (sources.empty())
        throw std::invalid_argument("sssp_distances: empty source set");
    for (Vertex s : sources)
        g.check_vertex(s);
    std::vector<char> allowed;
    if (restrict_to) {
        for (Vertex v : *restrict_to)
            g.check_vertex(v);
        if (!is_subset(sources, *restrict_to))
            throw std::invalid_argument("sssp_distances: sources must lie in restrict_to");
        allowed.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
        for (Vertex v : *restrict_to)
            allowed[v] = 1;
    }

    DistanceMap dist(static_cast<size_t>(g.vertex_count()) + 1, INF);
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (Vertex s : sources) {
        dist[s] = 0.0;
        heap.push({0.0, s});
    }
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u])
            continue;
        if (d > cutoff)
            break;
        for (const auto &[v, w] : g.neighbors(u)) {
            if (restrict_to && !allowed[v])
                continue;
            const double nd = d + w;
            if (nd < dist[v]) {
                dist[v] = nd;
                heap.push({nd, v});
            }
        }
    }
    return dist;
}

double set_diameter(const WeightedGraph &g, const VertexSet &a, DiameterMode mode) {
    if (a.empty())
        throw std::invalid_argument("set_diameter: empty set");
    for (Vertex v : a)
        g.check_vertex(v);
    double diam = 0.0;
    for (Vertex u : a) {
        VertexSet src{u};
        DistanceMap dist = mode == DiameterMode::strong ? sssp_distances(g, src, &a)
                                                        : sssp_distances(g, src);
        for (Vertex v : a)
            diam = std::max(diam, dist[v]);
    }
    return diam;
}

bool is_scattered(const WeightedGraph &g, const VertexSet &a, double r,
                  const VertexSet *restrict_to) {
    for (Vertex v : a)
        g.check_vertex(v);
    if (a.size() < 2)
        return true;
    for (size_t i = 0; i < a.size(); ++i) {
        VertexSet src{a[i]};
        DistanceMap dist = sssp_distances(g, src, restrict_to, r);
        for (size_t j = i + 1; j < a.size(); ++j)
            if (dist[a[j]] <= r)
                return false;
    }
    return true;
}

VertexSet greedy_maximal_scattered(const WeightedGraph &g, const VertexSet &a, double r,
                                   const VertexSet *restrict_to) {
    for (Vertex v : a)
        g.check_vertex(v);
    VertexSet out;
    DistanceMap best(static_cast<size_t>(g.vertex_count()) + 1, INF);
    for (Vertex cand : a) { // a is sorted, so this is id order
        if (best[cand] <= r)
            continue;
        out.push_back(cand);
        VertexSet src{cand};
        DistanceMap dist = sssp_distances(g, src, restrict_to, r);
        for (Vertex v = 1; v <= g.vertex_count(); ++v)
            best[v] = std::min(best[v], dist[v]);
    }
    return out;
}

} // namespace mst
