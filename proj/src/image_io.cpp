#include "mmb/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace fs = std::filesystem;

namespace mmb {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

uint8_t quantize(double v) {
    const double c = std::clamp(v, 0.0, 255.0);
    return static_cast<uint8_t>(std::lround(c));
}

// --- PNM (P5 grayscale / P6 color, binary, maxval 255) ---

int pnm_read_token(std::ifstream& in, const std::string& path) {
    // Skips whitespace and '#' comments.
    while (true) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int value = 0;
    if (!(in >> value)) fail(path, "malformed PNM header");
    return value;
}

RgbImage read_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    char magic[2];
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || (magic[1] != '5' && magic[1] != '6'))
        fail(path, "unsupported PNM magic (need P5 or P6)");
    const bool color = magic[1] == '6';
    const int w = pnm_read_token(in, path);
    const int h = pnm_read_token(in, path);
    const int maxval = pnm_read_token(in, path);
    if (w <= 0 || h <= 0) fail(path, "bad PNM dimensions");
    if (maxval != 255) fail(path, "only 8-bit PNM supported");
    in.get();  // single whitespace after header

    RgbImage img;
    img.width = w;
    img.height = h;
    img.pixels.resize(static_cast<size_t>(w) * h * 3);
    if (color) {
        in.read(reinterpret_cast<char*>(img.pixels.data()),
                static_cast<std::streamsize>(img.pixels.size()));
        if (!in) fail(path, "truncated PNM data");
    } else {
        std::vector<uint8_t> gray(static_cast<size_t>(w) * h);
        in.read(reinterpret_cast<char*>(gray.data()),
                static_cast<std::streamsize>(gray.size()));
        if (!in) fail(path, "truncated PNM data");
        for (size_t i = 0; i < gray.size(); ++i) {
            img.pixels[i * 3] = img.pixels[i * 3 + 1] = img.pixels[i * 3 + 2] = gray[i];
        }
    }
    return img;
}

// --- PNG via libpng ---

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};

RgbImage read_png(const std::string& path) {
    std::unique_ptr<FILE, FileCloser> fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        fail(path, "png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "libpng error while reading");
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    png_uint_32 w = 0, h = 0;
    int bit_depth = 0, color_type = 0;
    png_get_IHDR(png, info, &w, &h, &bit_depth, &color_type, nullptr, nullptr, nullptr);

    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    RgbImage img;
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    img.pixels.resize(static_cast<size_t>(w) * h * 3);
    std::vector<png_bytep> rows(h);
    for (png_uint_32 y = 0; y < h; ++y)
        rows[y] = img.pixels.data() + static_cast<size_t>(y) * w * 3;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png_impl(const std::string& path, int width, int height, int color_type,
                    const uint8_t* data, size_t stride) {
    std::unique_ptr<FILE, FileCloser> fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) fail(path, "png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        fail(path, "png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "libpng error while writing");
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < height; ++y)
        png_write_row(png, const_cast<png_bytep>(data + static_cast<size_t>(y) * stride));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

bool has_extension(const fs::path& p, const char* ext) {
    std::string e = p.extension().string();
    std::transform(e.begin(), e.end(), e.begin(), ::tolower);
    return e == ext;
}

PixelGrid rgb_to_gray(const RgbImage& img) {
    PixelGrid grid(img.width, img.height);
    const uint8_t* src = img.pixels.data();
    double* dst = grid.data();
    const size_t n = grid.size();
    for (size_t i = 0; i < n; ++i) {
        const uint8_t r = src[i * 3], g = src[i * 3 + 1], b = src[i * 3 + 2];
        if (r == g && g == b)
            dst[i] = r;  // already gray, keep idempotent
        else
            dst[i] = luma(r, g, b);
    }
    return grid;
}

}  // namespace

RgbImage read_image_rgb(const std::string& path) {
    fs::path p(path);
    if (has_extension(p, ".png")) return read_png(path);
    if (has_extension(p, ".pgm") || has_extension(p, ".ppm") || has_extension(p, ".pnm"))
        return read_pnm(path);
    fail(path, "unsupported image format");
}

PixelGrid read_image_gray(const std::string& path) {
    return rgb_to_gray(read_image_rgb(path));
}

void write_pgm(const std::string& path, const PixelGrid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    out << "P5\n" << grid.width() << " " << grid.height() << "\n255\n";
    std::vector<uint8_t> row(grid.width());
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) row[x] = quantize(grid.at(x, y));
        out.write(reinterpret_cast<const char*>(row.data()), row.size());
    }
    if (!out) fail(path, "write failed");
}

void write_png_gray(const std::string& path, const PixelGrid& grid) {
    std::vector<uint8_t> bytes(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) bytes[i] = quantize(grid.data()[i]);
    write_png_impl(path, grid.width(), grid.height(), PNG_COLOR_TYPE_GRAY, bytes.data(),
                   grid.width());
}

void write_png_rgb(const std::string& path, const RgbImage& image) {
    write_png_impl(path, image.width, image.height, PNG_COLOR_TYPE_RGB, image.pixels.data(),
                   static_cast<size_t>(image.width) * 3);
}

Sequence load_sequence(const std::string& directory, double frame_rate_hz) {
    if (frame_rate_hz <= 0.0) throw std::invalid_argument("frame_rate_hz must be positive");
    if (!fs::is_directory(directory)) fail(directory, "not a directory");

    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& p = entry.path();
        if (has_extension(p, ".png") || has_extension(p, ".pgm") || has_extension(p, ".ppm") ||
            has_extension(p, ".pnm"))
            files.push_back(p.string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) fail(directory, "no image files found");

    Sequence seq;
    seq.frame_rate_hz = frame_rate_hz;
    seq.frames.reserve(files.size());
    for (size_t i = 0; i < files.size(); ++i) {
        Frame f;
        f.index = static_cast<int>(i);
        f.pixels = read_image_gray(files[i]);
        if (!seq.frames.empty() && !f.pixels.same_shape(seq.frames.front().pixels))
            fail(files[i], "frame dimensions differ from the first frame");
        seq.frames.push_back(std::move(f));
    }
    return seq;
}

void save_sequence(const std::string& directory, const Sequence& seq) {
    fs::create_directories(directory);
    char name[32];
    for (const Frame& f : seq.frames) {
        std::snprintf(name, sizeof(name), "frame_%06d.pgm", f.index);
        write_pgm((fs::path(directory) / name).string(), f.pixels);
    }
}

RgbImage gray_to_rgb(const PixelGrid& grid) {
    RgbImage img;
    img.width = grid.width();
    img.height = grid.height();
    img.pixels.resize(grid.size() * 3);
    for (size_t i = 0; i < grid.size(); ++i) {
        const uint8_t v = quantize(grid.data()[i]);
        img.pixels[i * 3] = img.pixels[i * 3 + 1] = img.pixels[i * 3 + 2] = v;
    }
    return img;
}

void Sequence::validate() const {
    for (size_t i = 0; i < frames.size(); ++i) {
        if (frames[i].index != static_cast<int>(i))
            throw std::invalid_argument("sequence frame indices must be consecutive from 0");
        if (!frames[i].pixels.same_shape(frames[0].pixels))
            throw std::invalid_argument("sequence frames must share dimensions");
    }
    if (frame_rate_hz <= 0.0) throw std::invalid_argument("frame_rate_hz must be positive");
}

}  // namespace mmb
