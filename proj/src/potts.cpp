#include "potts.hpp"

#include <cmath>
#include <stdexcept>

namespace pottscolor {

std::int64_t conflict_count(const Graph& g, std::span<const int> colors, int q) {
    if (static_cast<int>(colors.size()) != g.n_nodes())
        throw std::invalid_argument("conflict_count: coloring length mismatch");
    for (int c : colors)
        if (c < 0 || c >= q) throw std::invalid_argument("conflict_count: color out of range");
    std::int64_t conflicts = 0;
    for (const auto& [i, j] : g.edges())
        if (colors[i] == colors[j]) ++conflicts;
    return conflicts;
}

double continuous_energy(const Graph& g, const Tensor2& y) {
    if (y.rows != g.n_nodes()) throw std::invalid_argument("continuous_energy: row count mismatch");
    if (g.n_edges() == 0) return 0.0;
    double sum = 0.0;
    for (const auto& [i, j] : g.edges()) {
        const double* yi = y.row(i);
        const double* yj = y.row(j);
        double dot = 0.0;
        for (int a = 0; a < y.cols; ++a) dot += yi[a] * yj[a];
        sum += dot;
    }
    return sum / static_cast<double>(g.n_edges());
}

double entropy_term(const Tensor2& y) {
    double s = 0.0;
    for (double v : y.data) {
        if (v < 0.0) throw std::invalid_argument("entropy_term: negative entry");
        if (v > 0.0) s += v * std::log2(std::max(v, kEntropyClamp));
    }
    return s;
}

double overlap_term(const Tensor2& y, const Tensor2& xi) {
    if (!y.same_shape(xi)) throw std::invalid_argument("overlap_term: shape mismatch");
    if (y.rows == 0) return 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k < y.data.size(); ++k) s += y.data[k] * xi.data[k];
    return s / y.rows;
}

double loss(const Graph& g, const Tensor2& y, const Tensor2& xi, const LossWeights& w) {
    if (w.eta1 < 0.0 || w.eta2 < 0.0) throw std::invalid_argument("loss: weights must be >= 0");
    if (w.entropy_sign != 1 && w.entropy_sign != -1)
        throw std::invalid_argument("loss: entropy_sign must be +1 or -1");
    const double h = continuous_energy(g, y);
    double s = entropy_term(y);
    if (w.normalize_entropy && y.rows > 0) s /= y.rows;
    const double o = overlap_term(y, xi);
    return h + w.entropy_sign * w.eta1 * s - w.eta2 * o;
}

Tensor2 one_hot(std::span<const int> colors, int q) {
    Tensor2 t(static_cast<int>(colors.size()), q);
    for (int i = 0; i < t.rows; ++i) {
        if (colors[i] < 0 || colors[i] >= q) throw std::invalid_argument("one_hot: color out of range");
        t.at(i, colors[i]) = 1.0;
    }
    return t;
}

}  // namespace pottscolor
