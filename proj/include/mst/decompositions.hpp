#ifndef MST_DECOMPOSITIONS_HPP_
#define MST_DECOMPOSITIONS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "mst/graph.hpp"

namespace mst {

/// Rooted tree (or forest) of bags. Nodes are 1-based; parent 0 marks a root.
struct TreeDecomposition {
    std::vector<VertexSet> bags; // bags[0] unused
    std::vector<int> parent;     // parent[0] unused

    int node_count() const { return static_cast<int>(bags.size()) - 1; }
    int max_bag_size() const;
};

struct TdReport {
    bool valid = false;
    int width = -1;
    std::vector<std::string> violations;
};

TdReport validate_tree_decomposition(const WeightedGraph &g, const TreeDecomposition &td);

/// Supernode: a vertex set plus a rooted skeleton tree inside it.
struct Supernode {
    VertexSet vertices;
    Vertex skeleton_root = 0;
    std::vector<std::pair<Vertex, Vertex>> skeleton_edges;

    VertexSet skeleton_vertices() const;
};

/// Partition of V(G) into supernodes arranged in a rooted tree (forest for
/// disconnected inputs). Supernode ids are 1-based indices into supernodes.
struct BufferedCopDecomposition {
    std::vector<Supernode> supernodes; // supernodes[0] unused
    std::vector<int> parent;           // parent[0] unused; 0 marks a root

    int supernode_count() const { return static_cast<int>(supernodes.size()) - 1; }
    std::vector<int> ancestors_of(int id) const; // proper ancestors, closest first
    VertexSet domain_of(int id) const;           // union over the subtree rooted at id
};

struct BcdReport {
    bool valid = false;
    std::vector<std::string> violations;
};

/// Checks the four defining properties at parameters (delta, gamma, w).
/// tol relaxes the two distance comparisons for data read from files.
BcdReport validate_buffered_cop_decomposition(const WeightedGraph &g,
                                              const BufferedCopDecomposition &bcd, double delta,
                                              double gamma, int w, double tol = 0.0);

struct BcdAchieved {
    double delta = 0.0; // max distance of a supernode vertex to its skeleton
    double gamma = INF; // min non-adjacent ancestor distance (INF when no such pair)
    int w = 0;          // max |A_eta| over supernodes, eta included
};

/// Best-effort constructor: peels radius-delta balls around shortest-path
/// skeletons grown toward every adjacent ancestor supernode. h records the
/// aimed-for bound (w <= h-1); the achieved values are measured post hoc.
std::pair<BufferedCopDecomposition, BcdAchieved>
heuristic_cop_decomposition(const WeightedGraph &g, double delta, int h);

BcdAchieved measure_bcd(const WeightedGraph &g, const BufferedCopDecomposition &bcd);

} // namespace mst

#endif
