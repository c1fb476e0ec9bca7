#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "islrec/image.hpp"

namespace islrec {

// Binary PPM (P6) and PGM (P5), maxval 255 only. The header is the magic
// followed by width, height and maxval separated by whitespace, with '#'
// comments running to end of line allowed between tokens, then exactly one
// whitespace byte before the raster. PGM samples are replicated to RGB.
RgbFrame decode_netpbm(std::span<const std::uint8_t> bytes);
RgbFrame decode_image(const std::filesystem::path& path);

std::vector<std::uint8_t> encode_ppm(const RgbFrame& frame);
std::vector<std::uint8_t> encode_pgm(const GrayFrame& frame);
void write_ppm(const std::filesystem::path& path, const RgbFrame& frame);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace islrec
