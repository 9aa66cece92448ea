#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dazzle/errors.hpp"

namespace dazzle {

/// Dense row-major 2-D array. rows/cols are ints on purpose: image dims,
/// not bignums, and signed arithmetic keeps index math sane.
template <typename T>
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Grid() = default;
    Grid(int rows_, int cols_, T fill = T{})
        : rows(rows_), cols(cols_),
          data(static_cast<size_t>(rows_) * static_cast<size_t>(cols_), fill) {
        if (rows_ < 0 || cols_ < 0) throw ConfigError("grid dims must be nonnegative");
    }

    T& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const T& operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
    bool same_dims(const Grid& other) const { return rows == other.rows && cols == other.cols; }
};

template <typename T>
double grid_sum(const Grid<T>& g) {
    double acc = 0.0;
    for (const T& v : g.data) acc += static_cast<double>(v);
    return acc;
}

template <typename T>
T grid_max(const Grid<T>& g) {
    return *std::max_element(g.data.begin(), g.data.end());
}

template <typename T>
T grid_min(const Grid<T>& g) {
    return *std::min_element(g.data.begin(), g.data.end());
}

/// Circular shift by (dr, dc); positive shifts move content toward larger indices.
template <typename T>
Grid<T> roll2d(const Grid<T>& g, int dr, int dc) {
    Grid<T> out(g.rows, g.cols);
    const int R = g.rows, C = g.cols;
    dr = ((dr % R) + R) % R;
    dc = ((dc % C) + C) % C;
    for (int r = 0; r < R; ++r) {
        int rr = (r + dr) % R;
        for (int c = 0; c < C; ++c) out(rr, (c + dc) % C) = g(r, c);
    }
    return out;
}

/// Move DC bin (0,0) to the grid center (rows/2, cols/2).
template <typename T>
Grid<T> fftshift(const Grid<T>& g) {
    return roll2d(g, g.rows / 2, g.cols / 2);
}

/// Inverse of fftshift (identical for even dims).
template <typename T>
Grid<T> ifftshift(const Grid<T>& g) {
    return roll2d(g, -(g.rows / 2), -(g.cols / 2));
}

/// Centered crop. Anchored so that input center pixel (rows/2, cols/2)
/// maps to output center pixel (out_rows/2, out_cols/2).
template <typename T>
Grid<T> center_crop(const Grid<T>& g, int out_rows, int out_cols) {
    if (out_rows > g.rows || out_cols > g.cols)
        throw ConfigError("center_crop: output larger than input");
    const int r0 = g.rows / 2 - out_rows / 2;
    const int c0 = g.cols / 2 - out_cols / 2;
    Grid<T> out(out_rows, out_cols);
    for (int r = 0; r < out_rows; ++r)
        for (int c = 0; c < out_cols; ++c) out(r, c) = g(r0 + r, c0 + c);
    return out;
}

/// Zero-pad so the input center pixel lands on the output center pixel.
template <typename T>
Grid<T> center_pad(const Grid<T>& g, int out_rows, int out_cols) {
    if (out_rows < g.rows || out_cols < g.cols)
        throw ConfigError("center_pad: output smaller than input");
    const int r0 = out_rows / 2 - g.rows / 2;
    const int c0 = out_cols / 2 - g.cols / 2;
    Grid<T> out(out_rows, out_cols, T{});
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c) out(r0 + r, c0 + c) = g(r, c);
    return out;
}

} // namespace dazzle
