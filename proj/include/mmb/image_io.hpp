#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmb/frame.hpp"
#include "mmb/grid.hpp"

namespace mmb {

// 8-bit RGB raster, used by the overlay renderer.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;  // RGBRGB..., row-major

    uint8_t* at(int x, int y) { return &pixels[(static_cast<size_t>(y) * width + x) * 3]; }
    const uint8_t* at(int x, int y) const {
        return &pixels[(static_cast<size_t>(y) * width + x) * 3];
    }
};

// Reads a PNG/PGM/PPM file as a grayscale grid. Color inputs are converted
// with the fixed luma weights.
PixelGrid read_image_gray(const std::string& path);

RgbImage read_image_rgb(const std::string& path);

// 8-bit grayscale output. Values are clamped to [0, 255] and rounded.
void write_pgm(const std::string& path, const PixelGrid& grid);
void write_png_gray(const std::string& path, const PixelGrid& grid);
void write_png_rgb(const std::string& path, const RgbImage& image);

// Loads a directory of image frames (lexicographic order) into a sequence.
// Fails with the offending filename on unreadable files or mixed dimensions.
Sequence load_sequence(const std::string& directory, double frame_rate_hz);

// Writes frames as zero-padded PGM files (frame_000000.pgm, ...).
void save_sequence(const std::string& directory, const Sequence& seq);

RgbImage gray_to_rgb(const PixelGrid& grid);

}  // namespace mmb
