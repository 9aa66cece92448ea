#pragma once

#include <string>

#include "dazzle/grid.hpp"

namespace dazzle {

/// ADPF raster container: magic "ADPF", version 0x01, dtype 0x01 (float32),
/// little-endian u32 width, u32 height, f64 pitch_m, f64 wavelength_m,
/// then row-major float32 samples.
struct AdpfImage {
    Grid<float> values;
    double pitch_m = 0.0;
    double wavelength_m = 0.0;
};

void write_adpf(const std::string& path, const AdpfImage& img);
AdpfImage read_adpf(const std::string& path);

} // namespace dazzle
