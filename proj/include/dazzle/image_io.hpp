#pragma once

#include <cstdint>
#include <string>

#include "dazzle/grid.hpp"

namespace dazzle {

struct PngImage {
    Grid<uint16_t> values; // samples at native depth, not rescaled
    int bit_depth = 16;    // 8 or 16
};

/// Grayscale PNG only; color or palette input is rejected.
PngImage read_png_gray(const std::string& path);

void write_png_gray16(const std::string& path, const Grid<uint16_t>& img);
void write_png_gray8(const std::string& path, const Grid<uint8_t>& img);

/// Scale integer samples to [0,1] by the depth's full-scale value.
Grid<double> png_to_unit(const PngImage& img);

} // namespace dazzle
