#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pottscolor {

// Dense row-major matrix of doubles. Rows of soft color assignments, MLP
// weights and message blocks all live in this one type.
struct Tensor2 {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Tensor2() = default;
    Tensor2(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {
        if (r < 0 || c < 0) throw std::invalid_argument("Tensor2: negative shape");
    }

    static Tensor2 zeros(int r, int c) { return Tensor2(r, c); }

    double& at(int r, int c) {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    double at(int r, int c) const {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<std::size_t>(r) * cols + c];
    }

    double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

    std::size_t size() const { return data.size(); }
    bool same_shape(const Tensor2& o) const { return rows == o.rows && cols == o.cols; }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }
};

inline void require_shape(const Tensor2& t, int rows, int cols, const char* what) {
    if (t.rows != rows || t.cols != cols)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                                    std::to_string(cols) + ", got " + std::to_string(t.rows) + "x" +
                                    std::to_string(t.cols));
}

bool all_finite(const Tensor2& t);

// Debug-build guard; release builds skip the scan.
#ifndef NDEBUG
#define POTTSCOLOR_CHECK_FINITE(t) assert(::pottscolor::all_finite(t) && "non-finite tensor values")
#else
#define POTTSCOLOR_CHECK_FINITE(t) ((void)0)
#endif

}  // namespace pottscolor
