#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "rng.hpp"

namespace pottscolor {

namespace {

std::uint64_t pair_key(int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

// Balanced class sizes: classes [0, n%q) get ceil(n/q), the rest floor(n/q).
std::vector<int> balanced_class_sizes(int n, int q) {
    std::vector<int> sizes(q, n / q);
    for (int a = 0; a < n % q; ++a) sizes[a] += 1;
    return sizes;
}

}  // namespace

Graph Graph::from_edges(int n_nodes, std::vector<std::pair<int, int>> edges,
                        std::optional<PlantedColoring> planting) {
    if (n_nodes < 1) throw std::invalid_argument("Graph: need at least one node");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto& [i, j] : edges) {
        if (i == j) throw std::invalid_argument("Graph: self-loop at node " + std::to_string(i));
        if (i < 0 || j < 0 || i >= n_nodes || j >= n_nodes)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (i > j) std::swap(i, j);
        if (!seen.insert(pair_key(i, j)).second)
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
    }
    std::sort(edges.begin(), edges.end());

    if (planting) {
        if (static_cast<int>(planting->colors.size()) != n_nodes)
            throw std::invalid_argument("Graph: planted coloring length mismatch");
        if (planting->q < 2) throw std::invalid_argument("Graph: planted q must be >= 2");
        for (int c : planting->colors)
            if (c < 0 || c >= planting->q)
                throw std::invalid_argument("Graph: planted color out of range");
        for (const auto& [i, j] : edges)
            if (planting->colors[i] == planting->colors[j])
                throw std::invalid_argument("Graph: planted coloring has a conflicting edge");
    }

    Graph g;
    g.n_nodes_ = n_nodes;
    g.edges_ = std::move(edges);
    g.planting_ = std::move(planting);

    std::vector<int> deg(n_nodes, 0);
    for (const auto& [i, j] : g.edges_) {
        ++deg[i];
        ++deg[j];
    }
    g.csr_offsets_.assign(n_nodes + 1, 0);
    for (int v = 0; v < n_nodes; ++v) g.csr_offsets_[v + 1] = g.csr_offsets_[v] + deg[v];
    g.csr_neighbors_.resize(g.csr_offsets_.back());
    std::vector<int> cursor(g.csr_offsets_.begin(), g.csr_offsets_.end() - 1);
    for (const auto& [i, j] : g.edges_) {
        g.csr_neighbors_[cursor[i]++] = j;
        g.csr_neighbors_[cursor[j]++] = i;
    }
    for (int v = 0; v < n_nodes; ++v)
        std::sort(g.csr_neighbors_.begin() + g.csr_offsets_[v],
                  g.csr_neighbors_.begin() + g.csr_offsets_[v + 1]);
    g.csr_row_of_.resize(g.csr_neighbors_.size());
    for (int v = 0; v < n_nodes; ++v)
        for (int k = g.csr_offsets_[v]; k < g.csr_offsets_[v + 1]; ++k) g.csr_row_of_[k] = v;
    return g;
}

std::int64_t edge_count(int n, double c) {
    if (n < 2) throw std::invalid_argument("edge_count: need n >= 2");
    if (c < 0.0 || !std::isfinite(c)) throw std::invalid_argument("edge_count: need c >= 0");
    const std::int64_t m = std::llround(static_cast<double>(n) * c / 2.0);
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m > max_edges)
        throw std::invalid_argument("edge_count: " + std::to_string(m) + " edges exceed the " +
                                    std::to_string(max_edges) + " possible on " + std::to_string(n) +
                                    " nodes");
    return m;
}

Graph generate_er(int n, double c, std::uint64_t seed) {
    const std::int64_t m = edge_count(n, c);
    Rng rng = make_rng(seed);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (static_cast<std::int64_t>(edges.size()) < m) {
        int i = uniform_int(rng, 0, n - 1);
        int j = uniform_int(rng, 0, n - 1);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        if (seen.insert(pair_key(i, j)).second) edges.emplace_back(i, j);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate_planted(int n, double c, int q, std::uint64_t seed) {
    if (q < 2) throw std::invalid_argument("generate_planted: need q >= 2");
    const std::int64_t m = edge_count(n, c);

    // Feasibility against the hetero-chromatic pair count for balanced classes.
    const std::vector<int> sizes = balanced_class_sizes(n, q);
    std::int64_t mono_pairs = 0;
    for (int k : sizes) mono_pairs += static_cast<std::int64_t>(k) * (k - 1) / 2;
    const std::int64_t hetero_pairs = static_cast<std::int64_t>(n) * (n - 1) / 2 - mono_pairs;
    if (m > hetero_pairs)
        throw std::invalid_argument("generate_planted: " + std::to_string(m) +
                                    " edges exceed the " + std::to_string(hetero_pairs) +
                                    " hetero-chromatic pairs");

    Rng rng = make_rng(seed);

    // Balanced coloring on a random node permutation.
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> colors(n, 0);
    int cursor = 0;
    for (int a = 0; a < q; ++a)
        for (int k = 0; k < sizes[a]; ++k) colors[perm[cursor++]] = a;

    // Rejection sampling over node pairs; monochromatic, self and already
    // present pairs are resampled. The cap turns a pathological density into
    // an explicit error instead of a hang.
    const std::int64_t reject_cap = 1000 * std::max<std::int64_t>(m, 1);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::int64_t consecutive_rejects = 0;
    while (static_cast<std::int64_t>(edges.size()) < m) {
        int i = uniform_int(rng, 0, n - 1);
        int j = uniform_int(rng, 0, n - 1);
        if (colors[i] != colors[j]) {
            int a = std::min(i, j), b = std::max(i, j);
            if (seen.insert(pair_key(a, b)).second) {
                edges.emplace_back(a, b);
                consecutive_rejects = 0;
                continue;
            }
        }
        if (++consecutive_rejects > reject_cap)
            throw std::runtime_error("generate_planted: rejection cap reached, density infeasible");
    }
    return Graph::from_edges(n, std::move(edges), PlantedColoring{std::move(colors), q});
}

std::vector<double> degree_feature(const Graph& g) {
    std::vector<double> f(g.n_nodes(), 0.0);
    const double c = g.mean_connectivity();
    if (c <= 0.0) return f;
    for (int v = 0; v < g.n_nodes(); ++v) f[v] = g.degree(v) / c;
    return f;
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_graph: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_graph: empty file " + path);

    std::int64_t n = 0, m = 0, q = 0;
    {
        std::istringstream hdr(line);
        std::string tail;
        if (!(hdr >> n >> m >> q) || (hdr >> tail))
            throw std::runtime_error("read_graph: malformed header '" + line + "'");
        if (n < 1 || m < 0 || q < 0) throw std::runtime_error("read_graph: malformed header '" + line + "'");
    }

    std::optional<PlantedColoring> planting;
    if (q > 0) {
        if (!std::getline(in, line)) throw std::runtime_error("read_graph: missing coloring line");
        std::istringstream cl(line);
        std::vector<int> colors;
        colors.reserve(static_cast<std::size_t>(n));
        int c;
        while (cl >> c) colors.push_back(c);
        if (static_cast<std::int64_t>(colors.size()) != n)
            throw std::runtime_error("read_graph: expected " + std::to_string(n) + " colors, got " +
                                     std::to_string(colors.size()));
        planting = PlantedColoring{std::move(colors), static_cast<int>(q)};
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream el(line);
        std::int64_t i, j;
        std::string tail;
        if (!(el >> i >> j) || (el >> tail))
            throw std::runtime_error("read_graph: malformed edge line '" + line + "'");
        if (i == j) throw std::runtime_error("read_graph: self-loop '" + line + "'");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::runtime_error("read_graph: edge index out of range '" + line + "'");
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw std::runtime_error("read_graph: header declares " + std::to_string(m) +
                                 " edges but file lists " + std::to_string(edges.size()));
    // from_edges re-validates duplicates/planting conflicts.
    return Graph::from_edges(static_cast<int>(n), std::move(edges), std::move(planting));
}

void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_graph: cannot open " + path);
    const int q = g.planting() ? g.planting()->q : 0;
    out << g.n_nodes() << ' ' << g.n_edges() << ' ' << q << '\n';
    if (q > 0) {
        const auto& colors = g.planting()->colors;
        for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? " " : "") << colors[i];
        out << '\n';
    }
    for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
    if (!out) throw std::runtime_error("write_graph: write failed for " + path);
}

}  // namespace pottscolor
