#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pottscolor {

struct PlantedColoring {
    std::vector<int> colors;  // one color in [0, q) per node
    int q = 0;
};

// Immutable undirected simple graph. Edges are stored once with i < j in
// lexicographic order; the CSR adjacency lists every edge in both directions
// with neighbors sorted per node. Safe to share read-only across threads.
class Graph {
public:
    // Validates and canonicalizes: rejects self-loops, duplicates and
    // out-of-range endpoints; normalizes each pair to i < j and sorts.
    static Graph from_edges(int n_nodes, std::vector<std::pair<int, int>> edges,
                            std::optional<PlantedColoring> planting = std::nullopt);

    int n_nodes() const { return n_nodes_; }
    std::int64_t n_edges() const { return static_cast<std::int64_t>(edges_.size()); }
    double mean_connectivity() const {
        return n_nodes_ > 0 ? 2.0 * static_cast<double>(edges_.size()) / n_nodes_ : 0.0;
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& csr_offsets() const { return csr_offsets_; }   // length N+1
    const std::vector<int>& csr_neighbors() const { return csr_neighbors_; }  // length 2M
    // Receiver node of each CSR slot, i.e. csr_row_of()[k] = i for
    // csr_offsets()[i] <= k < csr_offsets()[i+1]. Used as the segment-sum
    // target array in message passing.
    const std::vector<int>& csr_row_of() const { return csr_row_of_; }

    int degree(int node) const { return csr_offsets_[node + 1] - csr_offsets_[node]; }

    const std::optional<PlantedColoring>& planting() const { return planting_; }

private:
    Graph() = default;
    int n_nodes_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> csr_offsets_;
    std::vector<int> csr_neighbors_;
    std::vector<int> csr_row_of_;
    std::optional<PlantedColoring> planting_;
};

// M = round(n*c/2). Throws if the requested density exceeds n(n-1)/2.
std::int64_t edge_count(int n, double c);

// Erdos-Renyi G(N, M): exactly M distinct non-loop edges drawn uniformly
// without replacement. Deterministic per seed.
Graph generate_er(int n, double c, std::uint64_t seed);

// Quiet planting: balanced coloring first (class sizes floor(N/q) or
// ceil(N/q), assigned to a random node permutation), then M edges rejection
// sampled uniformly among hetero-chromatic pairs. The planted coloring has
// zero conflicts by construction.
Graph generate_planted(int n, double c, int q, std::uint64_t seed);

// deg(i) / mean_connectivity per node; all zeros for an empty graph.
std::vector<double> degree_feature(const Graph& g);

// Text format: line 1 "N M q" (q=0 when unplanted); if q>0 a line of N
// colors; then M lines "i j" with 0-based endpoints. LF newlines.
Graph read_graph(const std::string& path);
void write_graph(const Graph& g, const std::string& path);

}  // namespace pottscolor
