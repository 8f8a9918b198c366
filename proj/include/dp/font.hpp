#pragma once

#include <array>
#include <string>

#include "dp/common.hpp"
#include "dp/font_data.hpp"
#include "dp/image.hpp"

// Glyph rasterization from the embedded bitmap typefaces. Scaling is
// nearest-neighbor with integer center sampling, so a rendered string is a
// pure function of (font, size, text) with no floating point involved.

namespace dp {

struct Rgb {
    uint8_t r, g, b;
};

namespace fontops {

inline const fontdata::FontData& font(int font_id) {
    if (font_id < 0 || font_id >= 4) fail(ErrorKind::config, "unknown font id");
    return fontdata::kFonts[font_id];
}

inline const fontdata::GlyphData* glyph(int font_id, char ch) {
    if (ch < 32 || ch > 126) return nullptr;
    return &font(font_id).glyphs[ch - 32];
}

inline bool glyph_bit(const fontdata::GlyphData& g, int cell_h, int x, int y) {
    int rowbytes = (g.advance + 7) / 8;
    if (x < 0 || y < 0 || x >= g.advance || y >= cell_h) return false;
    return (g.rows[y * rowbytes + x / 8] >> (7 - x % 8)) & 1;
}

inline constexpr int kRefSize = 24;  // em size the bitmaps were rasterized at

// Cell height when the em box is scaled to size_px pixels.
inline int scaled_cell_height(int font_id, int size_px) {
    const auto& f = font(font_id);
    return std::max(1, (f.cell_h * size_px + kRefSize / 2) / kRefSize);
}

inline int scaled_advance(int font_id, char ch, int size_px) {
    const auto* g = glyph(font_id, ch);
    int adv = g ? g->advance : font(font_id).glyphs['?' - 32].advance;
    return std::max(1, (adv * size_px + kRefSize / 2) / kRefSize);
}

inline int text_width(int font_id, const std::string& text, int size_px) {
    int w = 0;
    for (char ch : text) w += scaled_advance(font_id, ch, size_px);
    return w;
}

inline int text_height(int font_id, int size_px) { return scaled_cell_height(font_id, size_px); }

namespace detail {

template <typename SetPixel>
inline void stamp_glyph(const fontdata::GlyphData& g, int cell_h, int x0, int y0, int aw, int ah,
                        SetPixel&& set_pixel) {
    for (int ty = 0; ty < ah; ++ty) {
        int sy = ((2 * ty + 1) * cell_h) / (2 * ah);
        for (int tx = 0; tx < aw; ++tx) {
            int sx = ((2 * tx + 1) * g.advance) / (2 * aw);
            if (glyph_bit(g, cell_h, sx, sy)) set_pixel(x0 + tx, y0 + ty);
        }
    }
}

}  // namespace detail

// Draws `text` with its cell box anchored at top-left (x, y), outlined with a
// one-pixel shadow in shadow_color. Pixels outside the image are dropped.
inline void draw_text(Image& img, int x, int y, const std::string& text, int font_id, int size_px,
                      Rgb color, Rgb shadow) {
    const auto& f = font(font_id);
    int ah = scaled_cell_height(font_id, size_px);
    auto put = [&](Rgb c) {
        return [&img, c](int px, int py) {
            if (px < 0 || py < 0 || px >= img.width || py >= img.height) return;
            uint8_t* p = img.px(px, py);
            p[0] = c.r;
            p[1] = c.g;
            p[2] = c.b;
        };
    };
    static constexpr int kOffsets[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                           {1, 0},   {-1, 1}, {0, 1},  {1, 1}};
    // Shadow pass, then the main color on top.
    for (int pass = 0; pass < 2; ++pass) {
        int cx = x;
        for (char ch : text) {
            const auto* g = glyph(font_id, ch);
            if (!g) g = glyph(font_id, '?');
            int aw = scaled_advance(font_id, ch, size_px);
            if (ch != ' ') {
                if (pass == 0) {
                    for (auto& off : kOffsets)
                        detail::stamp_glyph(*g, f.cell_h, cx + off[0], y + off[1], aw, ah,
                                            put(shadow));
                } else {
                    detail::stamp_glyph(*g, f.cell_h, cx, y, aw, ah, put(color));
                }
            }
            cx += aw;
        }
    }
}

// Area-normalized 8x8 occupancy of an arbitrary ink predicate over a
// rectangle: each cell holds the fraction of its pixels that are ink.
// Scale-invariant, so a glyph matches its own rendering at any size.
template <typename IsInk>
inline std::array<double, 64> downsample_mask_8x8(int x0, int y0, int w, int h, IsInk&& is_ink) {
    std::array<double, 64> mask{};
    if (w <= 0 || h <= 0) return mask;
    for (int cy = 0; cy < 8; ++cy) {
        int ry0 = y0 + cy * h / 8, ry1 = y0 + (cy + 1) * h / 8;
        if (ry1 == ry0) ry1 = ry0 + 1;
        for (int cx = 0; cx < 8; ++cx) {
            int rx0 = x0 + cx * w / 8, rx1 = x0 + (cx + 1) * w / 8;
            if (rx1 == rx0) rx1 = rx0 + 1;
            int ink = 0, area = 0;
            for (int y = ry0; y < ry1; ++y)
                for (int x = rx0; x < rx1; ++x) {
                    ++area;
                    if (is_ink(x, y)) ++ink;
                }
            mask[size_t(cy) * 8 + cx] = double(ink) / double(area);
        }
    }
    return mask;
}

// 8x8 occupancy mask of a glyph's tight ink box, used by the toy backend to
// recognize rendered characters. Zero mask for blank glyphs.
inline std::array<double, 64> glyph_mask_8x8(int font_id, char ch) {
    const auto* g = glyph(font_id, ch);
    if (!g) return {};
    const auto& f = font(font_id);
    int x0 = g->advance, x1 = -1, y0 = f.cell_h, y1 = -1;
    for (int y = 0; y < f.cell_h; ++y)
        for (int x = 0; x < g->advance; ++x)
            if (glyph_bit(*g, f.cell_h, x, y)) {
                x0 = std::min(x0, x);
                x1 = std::max(x1, x);
                y0 = std::min(y0, y);
                y1 = std::max(y1, y);
            }
    if (x1 < x0) return {};
    return downsample_mask_8x8(x0, y0, x1 - x0 + 1, y1 - y0 + 1,
                               [&](int x, int y) { return glyph_bit(*g, f.cell_h, x, y); });
}

}  // namespace fontops
}  // namespace dp
