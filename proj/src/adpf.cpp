#include "dazzle/adpf.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace dazzle {

static_assert(std::endian::native == std::endian::little,
              "ADPF I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'A', 'D', 'P', 'F'};
constexpr uint8_t kVersion = 0x01;
constexpr uint8_t kDtypeF32 = 0x01;

template <typename T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

} // namespace

void write_adpf(const std::string& path, const AdpfImage& img) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open for writing: " + path);
    os.write(kMagic, 4);
    put<uint8_t>(os, kVersion);
    put<uint8_t>(os, kDtypeF32);
    put<uint32_t>(os, static_cast<uint32_t>(img.values.cols));
    put<uint32_t>(os, static_cast<uint32_t>(img.values.rows));
    put<double>(os, img.pitch_m);
    put<double>(os, img.wavelength_m);
    os.write(reinterpret_cast<const char*>(img.values.data.data()),
             static_cast<std::streamsize>(img.values.data.size() * sizeof(float)));
    if (!os) throw IoError("short write: " + path);
}

AdpfImage read_adpf(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("not an ADPF file: " + path);
    const auto version = get<uint8_t>(is);
    if (version != kVersion)
        throw IoError("unsupported ADPF version " + std::to_string(version) + ": " + path);
    const auto dtype = get<uint8_t>(is);
    if (dtype != kDtypeF32)
        throw IoError("unsupported ADPF dtype " + std::to_string(dtype) + ": " + path);
    const auto width = get<uint32_t>(is);
    const auto height = get<uint32_t>(is);
    if (width == 0 || height == 0 || width > (1u << 20) || height > (1u << 20))
        throw IoError("implausible ADPF dims: " + path);

    AdpfImage img;
    img.pitch_m = get<double>(is);
    img.wavelength_m = get<double>(is);
    img.values = Grid<float>(static_cast<int>(height), static_cast<int>(width));
    is.read(reinterpret_cast<char*>(img.values.data.data()),
            static_cast<std::streamsize>(img.values.data.size() * sizeof(float)));
    if (!is) throw IoError("truncated ADPF payload: " + path);
    return img;
}

} // namespace dazzle
