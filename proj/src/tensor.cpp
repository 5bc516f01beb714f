#include "tensor.hpp"

#include <cmath>

namespace pottscolor {

bool all_finite(const Tensor2& t) {
    for (double v : t.data)
        if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace pottscolor
