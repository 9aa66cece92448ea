#include "dazzle/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

#include "dazzle/errors.hpp"

namespace dazzle {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

} // namespace

PngImage read_png_gray(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("png decode error: " + path);
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    const int color_type = png_get_color_type(png, info);
    int bit_depth = png_get_bit_depth(png, info);
    if (color_type != PNG_COLOR_TYPE_GRAY) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("expected grayscale PNG: " + path);
    }
    if (bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
        bit_depth = 8;
    }
    if (bit_depth == 16) png_set_swap(png); // PNG stores big-endian samples
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));

    PngImage out;
    out.bit_depth = bit_depth;
    out.values = Grid<uint16_t>(height, width);

    std::vector<png_bytep> rows(static_cast<size_t>(height));
    std::vector<uint8_t> row8;
    if (bit_depth == 8) row8.resize(static_cast<size_t>(height) * width);
    for (int r = 0; r < height; ++r) {
        if (bit_depth == 16)
            rows[static_cast<size_t>(r)] =
                reinterpret_cast<png_bytep>(&out.values(r, 0));
        else
            rows[static_cast<size_t>(r)] = &row8[static_cast<size_t>(r) * width];
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    if (bit_depth == 8)
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c)
                out.values(r, c) = row8[static_cast<size_t>(r) * width + c];
    return out;
}

namespace {

void write_png_gray(const std::string& path, const void* data, int rows, int cols,
                    int bit_depth, size_t row_bytes) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png encode error: " + path);
    }

    png_init_io(png, fp.get());
    // Fixed filter/level so identical pixels give identical bytes.
    png_set_filter(png, 0, PNG_FILTER_NONE);
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, static_cast<png_uint_32>(cols), static_cast<png_uint_32>(rows),
                 bit_depth, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    if (bit_depth == 16) png_set_swap(png);

    const auto* base = static_cast<const uint8_t*>(data);
    std::vector<png_bytep> rowptrs(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        rowptrs[static_cast<size_t>(r)] =
            const_cast<png_bytep>(base + static_cast<size_t>(r) * row_bytes);
    png_write_image(png, rowptrs.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

} // namespace

void write_png_gray16(const std::string& path, const Grid<uint16_t>& img) {
    write_png_gray(path, img.data.data(), img.rows, img.cols, 16,
                   static_cast<size_t>(img.cols) * sizeof(uint16_t));
}

void write_png_gray8(const std::string& path, const Grid<uint8_t>& img) {
    write_png_gray(path, img.data.data(), img.rows, img.cols, 8,
                   static_cast<size_t>(img.cols));
}

Grid<double> png_to_unit(const PngImage& img) {
    const double full = img.bit_depth == 16 ? 65535.0 : 255.0;
    Grid<double> out(img.values.rows, img.values.cols);
    for (size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = static_cast<double>(img.values.data[i]) / full;
    return out;
}

} // namespace dazzle
