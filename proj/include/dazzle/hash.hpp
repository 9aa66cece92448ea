#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace dazzle {

std::string sha256_hex(std::span<const uint8_t> bytes);
std::string sha256_hex(const std::string& text);
std::string sha256_file_hex(const std::string& path);

} // namespace dazzle
