#pragma once

#include <span>

#include "graph.hpp"
#include "tensor.hpp"

namespace pottscolor {

// Number of monochromatic edges; the anti-ferromagnetic Potts energy of a
// discrete assignment.
std::int64_t conflict_count(const Graph& g, std::span<const int> colors, int q);

// h = (1/M) * sum over edges of <y_i, y_j>, in [0,1] for row-stochastic y.
// Exactly conflict_count/M when y is one-hot. Returns 0 for edgeless graphs.
double continuous_energy(const Graph& g, const Tensor2& y);

// Floor inside the logarithm; keeps 0*log(0) = 0 and gradients finite.
inline constexpr double kEntropyClamp = 1e-30;

// S = sum_i sum_a y_ia * log2(y_ia); non-positive on the simplex.
double entropy_term(const Tensor2& y);

// O = (1/N) * sum_i <y_i, xi_i>.
double overlap_term(const Tensor2& y, const Tensor2& xi);

struct LossWeights {
    double eta1 = 0.5;          // entropy weight
    double eta2 = 0.05;         // overlap weight
    int entropy_sign = +1;      // +1 adds eta1*S as printed; -1 penalizes entropy
    bool normalize_entropy = false;  // divide S by N
};

// h + entropy_sign*eta1*S - eta2*O for one graph.
double loss(const Graph& g, const Tensor2& y, const Tensor2& xi, const LossWeights& w);

// One-hot rows from a discrete assignment.
Tensor2 one_hot(std::span<const int> colors, int q);

}  // namespace pottscolor
