#pragma once

#include <png.h>

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <vector>

#include "dp/common.hpp"

namespace dp {

// 8-bit RGB raster, row-major, tightly packed.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data;  // width * height * 3

    Image() = default;
    Image(int w, int h, uint8_t fill = 0) : width(w), height(h), data(size_t(w) * h * 3, fill) {}

    uint8_t* px(int x, int y) { return data.data() + (size_t(y) * width + x) * 3; }
    const uint8_t* px(int x, int y) const { return data.data() + (size_t(y) * width + x) * 3; }

    bool operator==(const Image& o) const {
        return width == o.width && height == o.height && data == o.data;
    }
};

// ---------------------------------------------------------------------------
// PNG I/O (libpng). Everything is normalized to 8-bit RGB on read; outputs
// are written lossless so regenerated datasets can be compared byte for byte.
// ---------------------------------------------------------------------------

inline Image read_png(const std::filesystem::path& path) {
    FILE* fp = std::fopen(path.string().c_str(), "rb");
    if (!fp) fail(ErrorKind::io, "cannot open image " + path.string());
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        std::fclose(fp);
        fail(ErrorKind::io, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        fail(ErrorKind::parse, "malformed PNG: " + path.string());
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);

    Image img(int(png_get_image_width(png, info)), int(png_get_image_height(png, info)));
    std::vector<png_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) rows[y] = img.px(0, y);
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return img;
}

inline void write_png(const Image& img, const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    FILE* fp = std::fopen(path.string().c_str(), "wb");
    if (!fp) fail(ErrorKind::io, "cannot write image " + path.string());
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        std::fclose(fp);
        fail(ErrorKind::io, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        std::fclose(fp);
        fail(ErrorKind::io, "PNG write failed: " + path.string());
    }
    png_init_io(png, fp);
    png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y) rows[y] = const_cast<png_bytep>(img.px(0, y));
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

// ---------------------------------------------------------------------------
// Resampling. Separable bicubic (Keys a = -0.5) with the filter support
// widened on downscale, matching the PIL-style antialiased resize used for
// CLIP preprocessing. Identity when output size == input size.
// ---------------------------------------------------------------------------

namespace detail {

inline double bicubic_kernel(double x) {
    constexpr double a = -0.5;
    x = std::abs(x);
    if (x < 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
    if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
    return 0.0;
}

struct ResampleTap {
    int first;
    std::vector<double> weights;
};

inline std::vector<ResampleTap> build_taps(int in_size, int out_size) {
    double scale = double(in_size) / double(out_size);
    double filter_scale = std::max(1.0, scale);
    double support = 2.0 * filter_scale;
    std::vector<ResampleTap> taps(out_size);
    for (int i = 0; i < out_size; ++i) {
        double center = (i + 0.5) * scale;
        int lo = std::max(0, int(std::floor(center - support + 0.5)));
        int hi = std::min(in_size, int(std::floor(center + support + 0.5)));
        ResampleTap t;
        t.first = lo;
        t.weights.resize(size_t(hi - lo));
        double total = 0.0;
        for (int j = lo; j < hi; ++j) {
            double w = bicubic_kernel((j + 0.5 - center) / filter_scale);
            t.weights[size_t(j - lo)] = w;
            total += w;
        }
        if (total != 0.0)
            for (double& w : t.weights) w /= total;
        taps[i] = std::move(t);
    }
    return taps;
}

}  // namespace detail

inline Image resize_bicubic(const Image& src, int out_w, int out_h) {
    if (src.width <= 0 || src.height <= 0)
        fail(ErrorKind::input, "resize_bicubic: degenerate source image");
    if (out_w <= 0 || out_h <= 0) fail(ErrorKind::input, "resize_bicubic: degenerate target size");
    if (out_w == src.width && out_h == src.height) return src;

    auto htaps = detail::build_taps(src.width, out_w);
    auto vtaps = detail::build_taps(src.height, out_h);

    // Horizontal pass into a float buffer, then vertical pass.
    std::vector<double> tmp(size_t(out_w) * src.height * 3);
    for (int y = 0; y < src.height; ++y) {
        for (int x = 0; x < out_w; ++x) {
            const auto& t = htaps[x];
            double acc[3] = {0, 0, 0};
            for (size_t k = 0; k < t.weights.size(); ++k) {
                const uint8_t* p = src.px(t.first + int(k), y);
                for (int c = 0; c < 3; ++c) acc[c] += t.weights[k] * p[c];
            }
            double* o = tmp.data() + (size_t(y) * out_w + x) * 3;
            for (int c = 0; c < 3; ++c) o[c] = acc[c];
        }
    }
    Image dst(out_w, out_h);
    for (int x = 0; x < out_w; ++x) {
        for (int y = 0; y < out_h; ++y) {
            const auto& t = vtaps[y];
            double acc[3] = {0, 0, 0};
            for (size_t k = 0; k < t.weights.size(); ++k) {
                const double* p = tmp.data() + (size_t(t.first + int(k)) * out_w + x) * 3;
                for (int c = 0; c < 3; ++c) acc[c] += t.weights[k] * p[c];
            }
            uint8_t* o = dst.px(x, y);
            for (int c = 0; c < 3; ++c)
                o[c] = uint8_t(std::clamp(std::lround(acc[c]), 0L, 255L));
        }
    }
    return dst;
}

inline Image crop(const Image& src, int x0, int y0, int w, int h) {
    if (x0 < 0 || y0 < 0 || x0 + w > src.width || y0 + h > src.height || w <= 0 || h <= 0)
        fail(ErrorKind::input, "crop: rectangle outside image");
    Image dst(w, h);
    for (int y = 0; y < h; ++y)
        std::memcpy(dst.px(0, y), src.px(x0, y0 + y), size_t(w) * 3);
    return dst;
}

inline void paste(Image& dst, const Image& src, int x0, int y0) {
    if (x0 < 0 || y0 < 0 || x0 + src.width > dst.width || y0 + src.height > dst.height)
        fail(ErrorKind::input, "paste: source exceeds destination");
    for (int y = 0; y < src.height; ++y)
        std::memcpy(dst.px(x0, y0 + y), src.px(0, y), size_t(src.width) * 3);
}

// Resize the short side to `size` with bicubic interpolation, then crop
// `size` x `size` from the center.
inline Image preprocess_image(const Image& src, int size = 224) {
    if (src.width <= 0 || src.height <= 0)
        fail(ErrorKind::input, "preprocess_image: degenerate input image");
    int w, h;
    if (src.width <= src.height) {
        w = size;
        h = std::max(size, int(size_t(src.height) * size / src.width));
    } else {
        h = size;
        w = std::max(size, int(size_t(src.width) * size / src.height));
    }
    Image r = resize_bicubic(src, w, h);
    int left = int(std::lround((w - size) / 2.0));
    int top = int(std::lround((h - size) / 2.0));
    return crop(r, left, top, size, size);
}

}  // namespace dp
