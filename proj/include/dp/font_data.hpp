#pragma once

#include <cstdint>

// Generated by tools/gen_font_header.py from the DejaVu typefaces
// (Bitstream Vera license; free to embed and redistribute).
// Reference em size: 24 px. Do not edit by hand.

namespace dp::fontdata {

struct GlyphData {
    uint8_t advance;              // cell width in px at the reference size
    const uint8_t* rows;          // cell_h rows, MSB-first bit-packed
};

struct FontData {
    const char* name;             // recorded in attack manifests
    int cell_h;                   // glyph cell height in px
    int ascent;
    GlyphData glyphs[95];         // ASCII 32..126
};

inline constexpr uint8_t k_roman_bits[] = {
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,
    0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0c,0x00,0x0c,
    0x00,0x0c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x31,0x80,0x31,0x80,0x31,0x80,0x31,0x80,0x31,0x80,0x31,0x80,0x31,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xc3,0x00,0x00,0xc2,0x00,0x00,0xc6,
    0x00,0x00,0xc6,0x00,0x00,0x86,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x01,0x8c,0x00,0x01,0x0c,0x00,0x03,0x0c,0x00,0x03,0x18,
    0x00,0x3f,0xff,0x80,0x3f,0xff,0x80,0x06,0x18,0x00,0x06,0x30,0x00,0x06,0x30,0x00,0x06,0x30,0x00,0x0c,0x30,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x01,0x00,0x01,0x00,0x01,0x00,0x07,0xe0,0x1f,0xf0,0x39,0x10,0x31,0x00,0x31,0x00,0x39,0x00,0x1f,0x00,0x0f,0xe0,
    0x01,0xf0,0x01,0x38,0x01,0x18,0x01,0x18,0x31,0x38,0x3f,0xf0,0x0f,0xe0,0x01,0x00,0x01,0x00,0x01,0x00,0x01,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1e,0x00,0xc0,0x33,0x01,0x80,0x31,
    0x83,0x00,0x61,0x83,0x00,0x61,0x86,0x00,0x61,0x84,0x00,0x61,0x8c,0x00,0x31,0x98,0x00,0x33,0x18,0xe0,0x1e,0x33,0x10,0x00,
    0x23,0x18,0x00,0x62,0x18,0x00,0xc6,0x08,0x00,0xc6,0x08,0x01,0x82,0x18,0x01,0x03,0x18,0x03,0x03,0x10,0x06,0x00,0xe0,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0xe0,0x00,0x07,0xf0,0x00,0x0e,0x10,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,
    0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x0f,0x00,0x00,0x1b,0xc1,0x80,0x30,0xe1,0x80,0x30,0x73,0x00,0x30,0x3b,0x00,0x30,
    0x1e,0x00,0x38,0x0e,0x00,0x3c,0x1f,0x00,0x1f,0xf3,0x80,0x07,0xe1,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x06,
    0x00,0x06,0x00,0x0c,0x00,0x0c,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x38,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,
    0x00,0x38,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x0c,0x00,0x0c,0x00,0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x00,0x18,0x00,0x18,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x06,0x00,0x06,
    0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x18,0x00,0x18,
    0x00,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x06,0x00,0x06,0x00,0x46,
    0x20,0x36,0xc0,0x0f,0x00,0x0f,0x00,0x36,0xc0,0x46,0x20,0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,
    0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x00,0x60,0x00,0x00,0x60,
    0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x18,0x18,0x38,0x30,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7e,0x00,0x7e,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x18,0x18,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x03,0x06,0x06,0x06,0x0c,0x0c,0x0c,0x1c,0x18,0x18,0x18,0x30,
    0x30,0x30,0x60,0x60,0x60,0xc0,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x0f,
    0xe0,0x1c,0x70,0x18,0x38,0x38,0x18,0x30,0x18,0x30,0x1c,0x30,0x1c,0x30,0x1c,0x30,0x1c,0x30,0x1c,0x30,0x1c,0x30,0x18,0x38,
    0x18,0x18,0x38,0x1c,0x70,0x0f,0xe0,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0x80,0x1f,0x80,0x19,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,
    0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x1f,0xf8,0x1f,0xf8,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xc0,0x3f,0xe0,0x30,0x70,0x00,
    0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x30,0x00,0x70,0x00,0xe0,0x01,0xc0,0x03,0x80,0x07,0x00,0x0e,0x00,0x1c,0x00,0x38,
    0x00,0x3f,0xf8,0x3f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x0f,0xc0,0x3f,0xf0,0x30,0x70,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x70,0x07,0xe0,0x07,0xe0,0x00,
    0x70,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x20,0x78,0x3f,0xf0,0x1f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xe0,0x00,0xe0,0x01,0xe0,0x03,0x60,0x03,0x60,0x06,
    0x60,0x0c,0x60,0x0c,0x60,0x18,0x60,0x38,0x60,0x30,0x60,0x60,0x60,0x7f,0xfc,0x7f,0xfc,0x00,0x60,0x00,0x60,0x00,0x60,0x00,
    0x60,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,
    0xf0,0x1f,0xf0,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x1f,0xc0,0x1f,0xe0,0x10,0x70,0x00,0x38,0x00,0x18,0x00,0x18,0x00,
    0x18,0x00,0x18,0x00,0x38,0x20,0x70,0x3f,0xe0,0x1f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0xe0,0x07,0xf8,0x0e,0x18,0x1c,0x00,0x38,0x00,0x30,0x00,0x33,0xe0,0x37,
    0xf0,0x3c,0x38,0x38,0x18,0x38,0x1c,0x38,0x1c,0x38,0x1c,0x38,0x1c,0x18,0x18,0x1c,0x38,0x0f,0xf0,0x07,0xc0,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf8,0x3f,0xf8,0x00,
    0x38,0x00,0x30,0x00,0x70,0x00,0x70,0x00,0x60,0x00,0xe0,0x00,0xc0,0x00,0xc0,0x01,0xc0,0x01,0x80,0x03,0x80,0x03,0x80,0x03,
    0x00,0x07,0x00,0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xf0,0x1c,0x38,0x38,0x38,0x30,0x18,0x30,0x18,0x38,0x38,0x1c,0x30,0x0f,0xe0,0x0f,
    0xe0,0x1c,0x38,0x30,0x18,0x30,0x1c,0x30,0x1c,0x30,0x18,0x3c,0x38,0x1f,0xf0,0x07,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xe0,0x3c,0x70,0x38,0x38,0x30,
    0x18,0x30,0x18,0x30,0x18,0x30,0x1c,0x38,0x3c,0x3c,0x7c,0x1f,0xf8,0x07,0x98,0x00,0x18,0x00,0x38,0x00,0x30,0x10,0xf0,0x1f,
    0xe0,0x0f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x18,0x18,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x18,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x18,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x18,0x18,0x38,0x30,0x30,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0xc0,0x00,0x07,0xc0,0x00,0x1f,0x80,0x00,0xfc,0x00,0x07,0xe0,0x00,0x1f,0x00,0x00,0x1c,0x00,
    0x00,0x1f,0x00,0x00,0x07,0xe0,0x00,0x00,0xfc,0x00,0x00,0x1f,0x80,0x00,0x07,0xc0,0x00,0x00,0xc0,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,0xc0,0x1f,0xff,
    0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x10,0x00,0x00,0x1e,0x00,0x00,0x1f,0x80,0x00,0x03,0xf0,0x00,0x00,0x7e,
    0x00,0x00,0x0f,0x80,0x00,0x03,0xc0,0x00,0x0f,0x80,0x00,0x7e,0x00,0x03,0xf0,0x00,0x0f,0x80,0x00,0x1e,0x00,0x00,0x10,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x80,0x3f,0xc0,0x30,0xe0,0x00,0xe0,0x00,0x60,0x00,0xe0,0x00,0xc0,0x01,0x80,
    0x03,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x7f,0x00,0x01,0xff,0xc0,0x07,0x81,0xe0,0x0e,0x00,0x70,0x1c,0x00,0x18,0x18,0x3d,0x98,0x30,0xff,0x8c,0x30,
    0xc3,0x8c,0x21,0x81,0x84,0x21,0x81,0x84,0x21,0x81,0x8c,0x21,0x81,0x8c,0x21,0x81,0x8c,0x30,0xc3,0xb8,0x30,0xff,0xf0,0x18,
    0x3d,0xc0,0x1c,0x00,0x00,0x0e,0x00,0x40,0x07,0x81,0xc0,0x01,0xff,0x80,0x00,0x7e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xc0,0x03,0xc0,0x03,0xc0,0x03,0x60,0x07,0x60,0x06,0x70,0x0e,0x30,0x0e,
    0x30,0x0c,0x38,0x1c,0x18,0x1c,0x18,0x18,0x1c,0x3f,0xfc,0x3f,0xfe,0x70,0x0e,0x70,0x06,0x60,0x07,0xe0,0x03,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xe0,0x3f,0xf8,0x38,
    0x3c,0x38,0x1c,0x38,0x0c,0x38,0x0c,0x38,0x1c,0x38,0x38,0x3f,0xf0,0x3f,0xf8,0x38,0x1c,0x38,0x0c,0x38,0x0e,0x38,0x0e,0x38,
    0x0e,0x38,0x1c,0x3f,0xf8,0x3f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf8,0x00,0x07,0xfe,0x00,0x0e,0x06,0x00,0x1c,0x00,0x00,0x38,0x00,
    0x00,0x30,0x00,0x00,0x30,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,0x30,0x00,0x00,0x30,0x00,
    0x00,0x38,0x00,0x00,0x1c,0x00,0x00,0x0e,0x06,0x00,0x07,0xfe,0x00,0x01,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x3f,0xe0,0x00,0x3f,0xfc,0x00,0x38,0x1e,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x03,0x80,0x38,0x03,0x80,0x38,0x03,
    0x80,0x38,0x01,0x80,0x38,0x01,0x80,0x38,0x03,0x80,0x38,0x03,0x80,0x38,0x03,0x80,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x1e,
    0x00,0x3f,0xfc,0x00,0x3f,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf8,0x3f,0xf8,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,
    0x00,0x38,0x00,0x3f,0xf8,0x3f,0xf8,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x3f,0xfc,0x3f,0xfc,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf0,0x3f,
    0xf0,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x3f,0xf0,0x3f,0xf0,0x38,0x00,0x38,0x00,0x38,0x00,0x38,
    0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf8,0x00,0x07,0xfe,0x00,0x0e,0x07,0x00,0x1c,0x01,0x00,
    0x38,0x00,0x00,0x30,0x00,0x00,0x30,0x00,0x00,0x70,0x00,0x00,0x70,0x3f,0x80,0x70,0x3f,0x80,0x70,0x03,0x80,0x30,0x03,0x80,
    0x30,0x03,0x80,0x38,0x03,0x80,0x1c,0x03,0x80,0x0e,0x07,0x80,0x07,0xff,0x00,0x01,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,
    0x38,0x07,0x00,0x3f,0xff,0x00,0x3f,0xff,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,
    0x38,0x07,0x00,0x38,0x07,0x00,0x38,0x07,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,
    0x38,0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,
    0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x38,0x30,0x70,0xe0,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x38,
    0x0e,0x38,0x1c,0x38,0x38,0x38,0x70,0x38,0xe0,0x39,0xc0,0x3b,0x80,0x3f,0x00,0x3e,0x00,0x3f,0x00,0x3b,0x80,0x39,0xc0,0x38,
    0xe0,0x38,0x70,0x38,0x38,0x38,0x1c,0x38,0x0e,0x38,0x07,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,
    0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x3f,0xf8,0x3f,0xf8,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x3c,0x01,0xc0,0x3c,0x03,0xc0,0x3e,0x03,0xc0,0x3e,0x03,0xc0,0x3e,0x06,0xc0,0x3b,0x06,0xc0,0x3b,0x06,0xc0,0x39,0x8c,0xc0,
    0x39,0x8c,0xc0,0x39,0x98,0xc0,0x38,0xd8,0xc0,0x38,0xd8,0xc0,0x38,0xf0,0xc0,0x38,0x70,0xc0,0x38,0x70,0xc0,0x38,0x00,0xc0,
    0x38,0x00,0xc0,0x38,0x00,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x07,0x00,0x3c,0x07,0x00,0x3e,0x07,0x00,
    0x3e,0x07,0x00,0x3f,0x07,0x00,0x3b,0x07,0x00,0x3b,0x87,0x00,0x39,0x87,0x00,0x38,0xc7,0x00,0x38,0xc7,0x00,0x38,0x67,0x00,
    0x38,0x67,0x00,0x38,0x37,0x00,0x38,0x37,0x00,0x38,0x1f,0x00,0x38,0x1f,0x00,0x38,0x0f,0x00,0x38,0x0f,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf0,0x00,0x07,0xfc,0x00,0x0e,0x0e,0x00,0x1c,0x07,0x00,0x38,0x03,0x80,0x30,0x03,0x80,
    0x30,0x01,0x80,0x70,0x01,0x80,0x70,0x01,0xc0,0x70,0x01,0xc0,0x70,0x01,0x80,0x30,0x01,0x80,0x30,0x03,0x80,0x38,0x03,0x80,
    0x1c,0x07,0x00,0x0e,0x0e,0x00,0x07,0xfc,0x00,0x01,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xe0,0x3f,0xf0,0x38,0x38,0x38,0x18,
    0x38,0x1c,0x38,0x1c,0x38,0x18,0x38,0x38,0x3f,0xf0,0x3f,0xe0,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,
    0x38,0x00,0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf0,0x00,0x07,0xfc,0x00,0x0e,0x0e,0x00,0x1c,0x07,0x00,0x38,0x03,0x80,0x30,0x03,
    0x80,0x30,0x01,0x80,0x70,0x01,0x80,0x70,0x01,0xc0,0x70,0x01,0xc0,0x70,0x01,0x80,0x30,0x01,0x80,0x30,0x03,0x80,0x38,0x03,
    0x80,0x1c,0x07,0x00,0x0e,0x0e,0x00,0x07,0xfc,0x00,0x01,0xf8,0x00,0x00,0x1c,0x00,0x00,0x0e,0x00,0x00,0x06,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xe0,
    0x00,0x3f,0xf0,0x00,0x38,0x38,0x00,0x38,0x18,0x00,0x38,0x1c,0x00,0x38,0x1c,0x00,0x38,0x18,0x00,0x38,0x38,0x00,0x3f,0xf0,
    0x00,0x3f,0xe0,0x00,0x38,0x70,0x00,0x38,0x38,0x00,0x38,0x18,0x00,0x38,0x1c,0x00,0x38,0x0c,0x00,0x38,0x0e,0x00,0x38,0x06,
    0x00,0x38,0x07,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xe0,0x1f,0xf8,0x3c,0x18,0x30,0x00,0x30,0x00,0x30,0x00,0x38,0x00,0x3e,0x00,
    0x1f,0xe0,0x07,0xf0,0x00,0x78,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x30,0x38,0x3f,0xf0,0x0f,0xe0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xff,0xfe,0xff,0xfe,0x03,0x80,
    0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,
    0x03,0x80,0x03,0x80,0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x06,0x00,0x30,0x06,0x00,0x30,0x06,0x00,0x30,0x06,0x00,0x30,0x06,0x00,
    0x30,0x06,0x00,0x30,0x06,0x00,0x30,0x06,0x00,0x30,0x06,0x00,0x30,0x06,0x00,0x30,0x06,0x00,0x38,0x06,0x00,0x38,0x06,0x00,
    0x38,0x06,0x00,0x18,0x0e,0x00,0x1c,0x1c,0x00,0x0f,0xf8,0x00,0x03,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xe0,0x03,0x60,0x07,0x70,
    0x06,0x70,0x0e,0x30,0x0e,0x38,0x0c,0x18,0x1c,0x18,0x18,0x1c,0x18,0x0c,0x38,0x0c,0x30,0x0e,0x30,0x06,0x70,0x07,0x60,0x03,
    0xe0,0x03,0xc0,0x03,0xc0,0x01,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x60,0x38,0x0e,0x70,0x3c,0x0e,0x70,0x3c,0x0c,0x30,0x3c,0x0c,0x30,0x6c,
    0x1c,0x38,0x66,0x1c,0x38,0x66,0x18,0x18,0x66,0x18,0x18,0xc6,0x38,0x18,0xc2,0x38,0x1c,0xc3,0x30,0x0c,0xc3,0x30,0x0c,0x83,
    0x30,0x0d,0x81,0x70,0x0f,0x81,0xe0,0x07,0x81,0xe0,0x07,0x81,0xe0,0x07,0x01,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x0e,0x38,0x0c,
    0x1c,0x1c,0x0c,0x38,0x0e,0x30,0x07,0x70,0x03,0xe0,0x03,0xc0,0x01,0xc0,0x03,0xc0,0x03,0xe0,0x07,0x60,0x0e,0x30,0x0c,0x38,
    0x1c,0x18,0x38,0x0c,0x30,0x0e,0x70,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0xe0,0x0c,0x60,0x1c,0x30,0x18,0x38,0x30,0x18,0x70,0x0c,0x60,0x0e,0xc0,0x07,0xc0,0x03,0x80,
    0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0xfe,0x7f,0xfe,0x00,0x0e,0x00,0x1c,
    0x00,0x38,0x00,0x70,0x00,0x60,0x00,0xe0,0x01,0xc0,0x03,0x80,0x07,0x00,0x07,0x00,0x0e,0x00,0x1c,0x00,0x38,0x00,0x30,0x00,
    0x7f,0xfe,0x7f,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x3e,0x00,0x3e,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,
    0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x3e,0x00,0x3e,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xc0,0xc0,0x60,0x60,0x60,0x30,0x30,0x30,0x18,0x18,0x18,0x1c,0x0c,0x0c,0x0c,0x06,0x06,
    0x06,0x03,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3e,0x00,0x3e,0x00,0x06,0x00,0x06,
    0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,
    0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x3e,0x00,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf0,0x00,0x00,0xf8,0x00,0x01,0xd8,0x00,0x03,0x8c,0x00,0x07,0x06,0x00,0x0c,
    0x03,0x00,0x18,0x01,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xff,0xf0,0xff,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x38,0x00,0x1c,0x00,0x0c,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x0f,0xc0,0x3f,0xe0,0x30,0x70,0x00,0x30,0x00,0x30,0x0f,0xf8,0x3f,0xf8,0x38,0x38,0x30,0x38,0x70,0x38,0x30,0xf8,0x3f,0xf8,
    0x1f,0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x33,0xe0,0x3f,0xf0,0x3c,0x38,0x38,0x18,0x38,0x1c,0x30,0x0c,0x30,0x0c,
    0x30,0x0c,0x38,0x1c,0x38,0x18,0x3c,0x38,0x3f,0xf0,0x33,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xf0,
    0x3c,0x30,0x38,0x00,0x30,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x30,0x00,0x38,0x00,0x3c,0x30,0x1f,0xf0,0x07,0xc0,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x00,0x18,
    0x00,0x18,0x00,0x18,0x00,0x18,0x07,0x98,0x1f,0xf8,0x38,0x78,0x30,0x38,0x30,0x18,0x70,0x18,0x70,0x18,0x70,0x18,0x30,0x18,
    0x30,0x38,0x38,0x78,0x1f,0xf8,0x0f,0x98,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xf0,0x1c,0x38,0x30,0x18,
    0x30,0x18,0x7f,0xf8,0x7f,0xf8,0x70,0x00,0x30,0x00,0x30,0x00,0x1c,0x18,0x1f,0xf8,0x07,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x1f,0x18,0x18,0x18,0x7f,0x7f,0x18,0x18,0x18,0x18,0x18,0x18,
    0x18,0x18,0x18,0x18,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x98,0x1f,0xf8,0x38,0x78,0x30,0x38,0x30,0x18,0x70,0x18,0x70,0x18,0x70,0x18,0x30,
    0x18,0x30,0x38,0x38,0x78,0x1f,0xf8,0x0f,0x98,0x00,0x18,0x00,0x38,0x10,0x70,0x1f,0xe0,0x0f,0xc0,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x33,0xe0,0x3f,0xf0,0x3c,0x38,0x38,
    0x18,0x38,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x30,0x30,0x00,0x00,0x30,0x30,0x30,0x30,0x30,0x30,0x30,
    0x30,0x30,0x30,0x30,0x30,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x30,0x30,0x00,0x00,0x30,0x30,
    0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0xf0,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x38,0x30,0x70,0x30,0xe0,0x31,0xc0,0x33,0x00,0x3e,
    0x00,0x3e,0x00,0x37,0x00,0x33,0x80,0x31,0xc0,0x30,0xe0,0x30,0x70,0x30,0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,
    0x30,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x33,0xe1,0xe0,0x3f,0xf7,0xf0,0x3c,0x3e,0x38,0x38,
    0x38,0x18,0x38,0x18,0x18,0x30,0x18,0x18,0x30,0x18,0x18,0x30,0x18,0x18,0x30,0x18,0x18,0x30,0x18,0x18,0x30,0x18,0x18,0x30,
    0x18,0x18,0x30,0x18,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x33,0xe0,0x3f,0xf0,0x3c,
    0x38,0x38,0x18,0x38,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xe0,0x38,0x70,0x30,0x38,0x30,0x18,0x70,0x18,0x70,0x18,0x70,0x18,0x30,0x18,0x30,
    0x38,0x38,0x70,0x1f,0xe0,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x33,0xe0,0x3f,0xf0,0x3c,0x38,0x38,0x18,0x38,
    0x1c,0x30,0x0c,0x30,0x0c,0x30,0x0c,0x38,0x1c,0x38,0x18,0x3c,0x38,0x3f,0xf0,0x33,0xe0,0x30,0x00,0x30,0x00,0x30,0x00,0x30,
    0x00,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x07,0x98,0x1f,0xf8,0x38,0x78,0x30,0x38,0x30,0x18,0x70,0x18,0x70,0x18,0x70,0x18,0x30,0x18,0x30,0x38,0x38,0x78,0x1f,
    0xf8,0x0f,0x98,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x33,0xc0,0x3f,0xc0,0x3c,0x00,0x38,0x00,0x38,0x00,0x30,0x00,0x30,
    0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x80,0x3f,
    0xe0,0x30,0x60,0x70,0x00,0x30,0x00,0x3c,0x00,0x1f,0x80,0x01,0xe0,0x00,0x60,0x00,0x60,0x60,0xe0,0x7f,0xc0,0x1f,0x80,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,
    0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x7f,0x80,0x7f,0x80,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,
    0x00,0x30,0x00,0x38,0x00,0x1f,0x80,0x0f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x18,0x30,0x18,0x30,0x18,0x30,
    0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x38,0x38,0x18,0x78,0x1f,0xf8,0x0f,0x98,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x60,0x18,0x70,0x18,0x30,0x38,0x30,0x30,0x38,0x30,0x18,0x60,0x18,0x60,0x0c,0xe0,0x0c,0xc0,0x0e,0xc0,0x07,
    0xc0,0x07,0x80,0x07,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x60,
    0xe0,0xc0,0x70,0xe0,0xc0,0x30,0xf0,0xc0,0x30,0xf0,0xc0,0x31,0xb1,0x80,0x39,0x99,0x80,0x19,0x99,0x80,0x19,0x1b,0x80,0x1b,
    0x1b,0x00,0x0f,0x0f,0x00,0x0f,0x0f,0x00,0x0e,0x0f,0x00,0x0e,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x70,0x38,0x38,0x70,0x1c,0x60,0x0c,0xe0,0x07,0xc0,0x07,0x80,0x03,0x80,0x07,0x80,0x0e,0xc0,0x1c,0xe0,
    0x18,0x70,0x30,0x30,0x70,0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x60,0x18,0x70,0x18,0x30,0x30,0x30,0x30,0x18,0x70,
    0x18,0x60,0x1c,0x60,0x0c,0xc0,0x0c,0xc0,0x07,0xc0,0x07,0x80,0x03,0x80,0x03,0x00,0x03,0x00,0x07,0x00,0x06,0x00,0x3e,0x00,
    0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x7f,0xf0,0x7f,0xf0,0x00,0x60,0x00,0xc0,0x01,0x80,0x03,0x00,0x06,0x00,0x0e,0x00,0x1c,0x00,0x38,0x00,0x30,0x00,0x7f,0xf0,
    0x7f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0xf0,0x01,0xf0,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x03,0x80,0x03,0x00,0x1f,0x00,0x1f,0x00,
    0x03,0x00,0x03,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0xf0,0x00,0xf0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,
    0x18,0x18,0x18,0x18,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1e,0x00,0x1f,0x00,0x03,0x00,0x03,0x80,0x03,
    0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x01,0x80,0x01,0x80,0x00,0xf0,0x00,0xf0,0x01,0xc0,0x01,0x80,0x03,0x80,0x03,0x80,0x03,
    0x80,0x03,0x80,0x03,0x80,0x03,0x00,0x1f,0x00,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0x80,0x40,0x1f,0xe1,0xc0,0x18,0x7f,0x80,0x00,0x1e,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,
};

inline constexpr uint8_t k_courier_bits[] = {
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x00,0x03,0x00,
    0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x0c,0xc0,0x0c,0xc0,0x0c,0xc0,0x0c,0xc0,0x0c,0xc0,0x0c,0xc0,0x0c,0xc0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x18,0x03,0x10,0x02,0x30,0x06,0x30,
    0x06,0x30,0x7f,0xfc,0x7f,0xfc,0x0c,0x60,0x0c,0x60,0x0c,0x40,0x08,0xc0,0xff,0xf8,0xff,0xf8,0x18,0xc0,0x19,0x80,0x31,0x80,
    0x31,0x80,0x31,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x01,0x00,0x01,0x00,0x01,0x00,0x07,0xc0,0x1f,0xf0,0x19,0x10,0x39,0x00,0x31,0x00,0x39,0x00,0x1f,0x00,0x0f,0xe0,
    0x01,0xf0,0x01,0x38,0x01,0x18,0x01,0x18,0x31,0x38,0x3f,0xf0,0x0f,0xc0,0x01,0x00,0x01,0x00,0x01,0x00,0x01,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x00,0x7e,0x00,0x63,0x00,0xc3,0x00,0x63,0x00,0x7e,0x0c,
    0x3c,0x30,0x00,0x60,0x01,0x80,0x07,0x00,0x0c,0x00,0x30,0xf0,0x61,0xf8,0x01,0x8c,0x01,0x0c,0x01,0x8c,0x01,0xf8,0x00,0xf0,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0x80,
    0x0f,0xc0,0x1c,0x40,0x18,0x00,0x18,0x00,0x18,0x00,0x1c,0x00,0x0e,0x00,0x3e,0x00,0x33,0x0c,0x63,0x8c,0x61,0xcc,0x60,0xcc,
    0x60,0x78,0x70,0x38,0x38,0x78,0x3f,0xf8,0x0f,0x8c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xc0,0x00,0xc0,0x01,0x80,
    0x01,0x80,0x03,0x00,0x03,0x00,0x03,0x00,0x07,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x07,0x00,0x03,0x00,
    0x03,0x00,0x03,0x00,0x01,0x80,0x01,0x80,0x00,0xc0,0x00,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x0c,0x00,0x06,0x00,0x06,0x00,0x03,0x00,0x03,0x00,0x03,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,
    0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x03,0x80,0x03,0x00,0x03,0x00,0x06,0x00,0x06,0x00,0x0c,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0x00,0x01,0x00,0x31,0x10,0x19,0x60,0x07,0x80,
    0x07,0x80,0x19,0x60,0x31,0x10,0x01,0x00,0x01,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x7f,0xf8,0x7f,0xf8,0x03,0x00,
    0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x00,0x07,0x00,
    0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xc0,0x0f,0xc0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x00,0x30,0x00,0x60,0x00,0x60,
    0x00,0xe0,0x00,0xc0,0x01,0xc0,0x01,0x80,0x03,0x80,0x03,0x00,0x03,0x00,0x06,0x00,0x06,0x00,0x0c,0x00,0x0c,0x00,0x1c,0x00,
    0x18,0x00,0x38,0x00,0x30,0x00,0x70,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x07,0x80,0x0f,0xe0,0x1c,0x70,0x38,0x30,0x30,0x30,0x30,0x38,0x30,0x38,0x30,0x38,0x33,0x38,0x33,0x38,0x30,0x38,
    0x30,0x38,0x30,0x38,0x30,0x30,0x38,0x30,0x1c,0x70,0x0f,0xe0,0x07,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0x80,0x1f,0x80,0x19,0x80,0x01,0x80,0x01,0x80,0x01,0x80,
    0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x1f,0xf8,0x1f,0xf8,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x80,
    0x3f,0xe0,0x30,0xf0,0x00,0x70,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x70,0x00,0x60,0x00,0xc0,0x01,0x80,0x03,0x80,0x07,0x00,
    0x0e,0x00,0x1c,0x00,0x38,0x00,0x3f,0xf0,0x3f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x80,0x3f,0xe0,0x30,0x70,0x00,0x70,0x00,0x30,0x00,0x30,0x00,0x70,0x00,0xe0,
    0x07,0xc0,0x07,0xc0,0x00,0x70,0x00,0x30,0x00,0x38,0x00,0x38,0x00,0x30,0x20,0x70,0x3f,0xe0,0x1f,0xc0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xe0,0x01,0xe0,0x01,0xe0,
    0x03,0x60,0x02,0x60,0x06,0x60,0x0c,0x60,0x0c,0x60,0x18,0x60,0x38,0x60,0x30,0x60,0x60,0x60,0x7f,0xf8,0x7f,0xf8,0x00,0x60,
    0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x3f,0xe0,0x3f,0xe0,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x3f,0x80,0x3f,0xe0,0x30,0xf0,0x00,0x70,
    0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x70,0x20,0xf0,0x3f,0xe0,0x1f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0xc0,0x0f,0xf0,0x1c,0x10,0x18,0x00,0x30,0x00,
    0x30,0x00,0x33,0xc0,0x3f,0xe0,0x3c,0x70,0x38,0x38,0x30,0x38,0x30,0x18,0x30,0x18,0x30,0x38,0x38,0x38,0x1c,0x70,0x0f,0xe0,
    0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x3f,0xf8,0x3f,0xf0,0x00,0x30,0x00,0x70,0x00,0x60,0x00,0x60,0x00,0xe0,0x00,0xc0,0x00,0xc0,0x01,0xc0,0x01,0x80,0x03,0x80,
    0x03,0x00,0x03,0x00,0x07,0x00,0x06,0x00,0x0e,0x00,0x0e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xe0,0x38,0x70,0x38,0x30,0x30,0x30,0x30,0x30,0x38,0x30,
    0x18,0x70,0x0f,0xc0,0x0f,0xe0,0x38,0x70,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x38,0x70,0x1f,0xf0,0x0f,0xc0,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x80,0x1f,0xe0,
    0x38,0x70,0x30,0x30,0x30,0x30,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x38,0x78,0x1f,0xd8,0x0f,0xb8,0x00,0x30,0x00,0x30,
    0x00,0x70,0x10,0xe0,0x1f,0xc0,0x0f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x80,0x03,0x80,0x03,0x80,
    0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x80,0x03,0x80,
    0x03,0x80,0x03,0x00,0x07,0x00,0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x08,0x00,0x38,0x01,0xf8,0x07,0xc0,0x3e,0x00,0x78,0x00,
    0x78,0x00,0x3e,0x00,0x07,0xc0,0x01,0xf8,0x00,0x38,0x00,0x08,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x7f,0xf8,0x7f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0xf8,0x7f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x40,0x00,0x78,0x00,0x3e,0x00,0x0f,0xc0,0x01,0xf0,0x00,0x38,0x00,0x38,0x01,0xf0,
    0x0f,0xc0,0x3e,0x00,0x78,0x00,0x40,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xe0,0x18,0x70,0x10,0x30,0x00,0x30,0x00,0x30,0x00,0x60,0x00,0xe0,
    0x01,0xc0,0x03,0x80,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,0x00,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0xe0,
    0x0f,0xf0,0x1c,0x38,0x30,0x18,0x70,0x0c,0x61,0xec,0x63,0xfc,0x47,0x1c,0xc6,0x0c,0xc6,0x0c,0xc6,0x0c,0xc6,0x0c,0x47,0x1c,
    0x63,0xfc,0x61,0xec,0x30,0x00,0x38,0x00,0x1c,0x00,0x0f,0xf0,0x03,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x03,0x80,0x07,0x80,0x07,0x80,0x06,0xc0,0x0e,0xc0,0x0c,0xc0,0x0c,0xe0,0x0c,0x60,0x1c,0x60,0x18,0x60,
    0x18,0x70,0x38,0x30,0x3f,0xf0,0x3f,0xf8,0x70,0x38,0x70,0x18,0x60,0x1c,0x60,0x1c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xc0,0x3f,0xe0,0x30,0x70,0x30,0x38,0x30,0x38,
    0x30,0x38,0x30,0x30,0x30,0x70,0x3f,0xe0,0x3f,0xe0,0x30,0x30,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x38,0x3f,0xf0,
    0x3f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x03,0xe0,0x0f,0xf8,0x1e,0x18,0x18,0x00,0x38,0x00,0x38,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,
    0x38,0x00,0x38,0x00,0x18,0x00,0x1e,0x18,0x0f,0xf8,0x03,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0x00,0x3f,0xc0,0x30,0xe0,0x30,0x70,0x30,0x30,0x30,0x38,0x30,0x38,
    0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x30,0x30,0x70,0x30,0xe0,0x3f,0xc0,0x3f,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf8,0x3f,0xf8,
    0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x3f,0xf0,0x3f,0xf0,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,
    0x38,0x00,0x38,0x00,0x3f,0xf8,0x3f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xf8,0x1f,0xf8,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x1f,0xf0,
    0x1f,0xf0,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0xe0,0x0f,0xf0,0x1c,0x10,0x38,0x00,
    0x30,0x00,0x30,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0xf8,0x70,0xf8,0x70,0x18,0x30,0x18,0x30,0x18,0x38,0x18,0x1c,0x38,
    0x0f,0xf0,0x03,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x3f,0xf8,0x3f,0xf8,0x30,0x38,
    0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf0,0x3f,0xf0,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,
    0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x3f,0xf0,0x3f,0xf0,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xe0,
    0x0f,0xe0,0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x60,0x00,0x60,
    0x00,0x60,0x40,0xe0,0x70,0xe0,0x7f,0xc0,0x1f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x1c,0x30,0x38,0x30,0x70,0x30,0xe0,0x31,0xc0,0x33,0x80,0x37,0x00,0x3f,0x00,
    0x3f,0x00,0x3b,0x80,0x31,0x80,0x31,0xc0,0x30,0xe0,0x30,0x60,0x30,0x70,0x30,0x38,0x30,0x18,0x30,0x1c,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x00,0x18,0x00,0x18,0x00,
    0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,
    0x18,0x00,0x1f,0xf8,0x1f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x70,0x38,0x78,0x38,0x78,0x78,0x78,0x78,0x6c,0x58,0x6c,0xd8,0x64,0xd8,0x66,0xd8,0x66,0x98,0x63,0x98,
    0x63,0x98,0x63,0x18,0x60,0x18,0x60,0x18,0x60,0x18,0x60,0x18,0x60,0x18,0x60,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x38,0x18,0x38,0x18,0x3c,0x18,0x3c,0x18,0x3c,0x18,
    0x36,0x18,0x36,0x18,0x33,0x18,0x33,0x18,0x33,0x18,0x31,0x98,0x31,0x98,0x30,0xd8,0x30,0xf8,0x30,0xf8,0x30,0x78,0x30,0x78,
    0x30,0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x07,0xc0,0x1f,0xe0,0x1c,0x70,0x38,0x30,0x30,0x38,0x30,0x38,0x30,0x38,0x70,0x18,0x70,0x18,0x70,0x18,0x70,0x18,0x30,0x38,
    0x30,0x38,0x30,0x38,0x38,0x30,0x1c,0x70,0x1f,0xe0,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xc0,0x3f,0xf0,0x38,0x78,0x38,0x38,0x38,0x18,0x38,0x18,0x38,0x38,
    0x38,0x78,0x3f,0xf0,0x3f,0xc0,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xe0,
    0x1c,0x70,0x38,0x30,0x30,0x38,0x30,0x38,0x30,0x38,0x70,0x18,0x70,0x18,0x70,0x18,0x70,0x18,0x30,0x38,0x30,0x38,0x30,0x38,
    0x38,0x30,0x1c,0x70,0x1f,0xe0,0x07,0xc0,0x00,0xe0,0x00,0x70,0x00,0x20,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xc0,0x3f,0xe0,0x30,0x70,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x70,0x3f,0xe0,
    0x3f,0xc0,0x30,0xe0,0x30,0x60,0x30,0x70,0x30,0x30,0x30,0x38,0x30,0x18,0x30,0x1c,0x30,0x0c,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xf0,0x38,0x30,0x30,0x00,
    0x30,0x00,0x30,0x00,0x38,0x00,0x3e,0x00,0x1f,0xc0,0x07,0xf0,0x00,0xf0,0x00,0x38,0x00,0x18,0x00,0x18,0x00,0x38,0x20,0x70,
    0x3f,0xe0,0x0f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x7f,0xfc,0x7f,0xfc,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,
    0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,
    0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x38,0x30,0x30,0x38,0x70,0x1f,0xe0,0x07,0xc0,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x60,0x1c,
    0x70,0x18,0x70,0x18,0x30,0x38,0x30,0x30,0x38,0x30,0x18,0x30,0x18,0x70,0x18,0x60,0x1c,0x60,0x0c,0x60,0x0c,0xe0,0x0c,0xc0,
    0x06,0xc0,0x06,0xc0,0x07,0x80,0x07,0x80,0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xc0,0x0c,0xc0,0x0c,0xe0,0x0c,0x60,0x0c,0x60,0x0c,0x63,0x8c,0x63,0x9c,0x67,0x98,
    0x67,0x98,0x66,0x98,0x36,0xd8,0x34,0xd8,0x3c,0xd8,0x3c,0x70,0x3c,0x70,0x38,0x70,0x38,0x70,0x18,0x70,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x70,0x1c,0x30,0x38,0x18,0x30,
    0x1c,0x70,0x0c,0x60,0x0e,0xc0,0x07,0xc0,0x07,0x80,0x03,0x80,0x07,0x80,0x07,0xc0,0x0e,0xc0,0x0c,0x60,0x18,0x70,0x38,0x30,
    0x30,0x38,0x70,0x18,0x60,0x1c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x60,0x1c,0x70,0x18,0x30,0x38,0x38,0x30,0x18,0x60,0x0c,0x60,0x0c,0xc0,0x07,0xc0,0x07,0x80,0x03,0x80,
    0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf8,0x3f,0xf8,0x00,0x38,0x00,0x30,0x00,0x70,
    0x00,0x60,0x00,0xc0,0x01,0xc0,0x01,0x80,0x03,0x00,0x07,0x00,0x06,0x00,0x0e,0x00,0x1c,0x00,0x18,0x00,0x38,0x00,0x3f,0xfc,
    0x3f,0xfc,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x07,0xc0,0x07,0xc0,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,
    0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0x00,0x07,0xc0,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x70,0x00,0x30,0x00,0x38,0x00,0x18,0x00,0x1c,0x00,0x0c,0x00,0x0c,0x00,
    0x06,0x00,0x06,0x00,0x03,0x00,0x03,0x00,0x03,0x80,0x01,0x80,0x01,0xc0,0x00,0xc0,0x00,0xe0,0x00,0x60,0x00,0x60,0x00,0x30,
    0x00,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x80,0x0f,0x80,
    0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,
    0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x0f,0x80,0x0f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x80,0x07,0x80,0x0e,0xc0,0x0c,0xe0,0x18,0x70,0x30,0x30,0x60,0x18,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xff,0xfc,0xff,0xfc,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x0c,0x00,0x06,0x00,0x03,0x00,0x01,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xc0,
    0x1f,0xe0,0x10,0x70,0x00,0x30,0x00,0x30,0x0f,0xf0,0x1f,0xf0,0x38,0x30,0x30,0x30,0x30,0x30,0x38,0xf0,0x3f,0xf0,0x0f,0x30,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x00,
    0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x33,0xc0,0x3f,0xe0,0x3c,0x70,0x38,0x38,0x38,0x18,0x30,0x18,0x30,0x18,0x30,0x18,
    0x38,0x18,0x38,0x38,0x3c,0x70,0x3f,0xe0,0x33,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0xe0,0x0f,0xf0,0x1e,0x10,
    0x18,0x00,0x18,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x18,0x00,0x18,0x00,0x1e,0x10,0x0f,0xf0,0x03,0xe0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x00,0x30,0x00,0x30,
    0x00,0x30,0x00,0x30,0x0f,0x30,0x1f,0xf0,0x38,0x70,0x30,0x70,0x30,0x30,0x70,0x30,0x70,0x30,0x70,0x30,0x30,0x30,0x30,0x70,
    0x38,0x70,0x1f,0xf0,0x0f,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xe0,0x1c,0x70,0x30,0x38,0x30,0x18,
    0x3f,0xf8,0x7f,0xf8,0x30,0x00,0x30,0x00,0x30,0x00,0x1c,0x10,0x1f,0xf8,0x07,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf0,0x03,0xf0,0x03,0x00,0x03,0x00,0x03,0x00,
    0x3f,0xf0,0x3f,0xf0,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,
    0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x30,0x1f,0xf0,0x38,0x70,0x30,0x70,0x30,0x30,0x70,0x30,0x70,0x30,
    0x70,0x30,0x30,0x30,0x30,0x70,0x38,0x70,0x1f,0xf0,0x0f,0x30,0x00,0x30,0x00,0x30,0x10,0x60,0x1f,0xe0,0x0f,0x80,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x33,0xc0,0x3f,0xe0,
    0x3c,0x70,0x38,0x30,0x38,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x80,0x03,0x80,
    0x03,0x80,0x00,0x00,0x00,0x00,0x1f,0x80,0x1f,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,
    0x03,0x80,0x03,0x80,0x3f,0xf8,0x3f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x01,0x80,0x01,0x80,0x01,0x80,0x00,0x00,0x00,0x00,0x1f,0x80,0x1f,0x80,0x01,0x80,0x01,0x80,
    0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x03,0x80,
    0x3f,0x00,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,
    0x18,0x00,0x18,0x38,0x18,0x70,0x18,0xe0,0x19,0xc0,0x1b,0x80,0x1f,0x80,0x1f,0x80,0x19,0xc0,0x18,0xe0,0x18,0x70,0x18,0x30,
    0x18,0x38,0x18,0x1c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x3e,0x00,0x3e,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,
    0x06,0x00,0x06,0x00,0x07,0x00,0x07,0x00,0x03,0x00,0x03,0xf0,0x01,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x6e,0x70,
    0x7f,0xf8,0x73,0x98,0x63,0x18,0x63,0x18,0x63,0x18,0x63,0x18,0x63,0x18,0x63,0x18,0x63,0x18,0x63,0x18,0x63,0x18,0x63,0x18,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x33,0xc0,0x3f,0xe0,0x3c,0x70,0x38,0x30,0x38,0x30,0x30,0x30,0x30,0x30,0x30,0x30,
    0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xe0,0x18,0x70,
    0x38,0x30,0x30,0x38,0x30,0x38,0x30,0x18,0x30,0x38,0x30,0x38,0x38,0x30,0x38,0x70,0x1f,0xe0,0x07,0xc0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x33,0xc0,0x3f,0xe0,0x3c,0x70,0x38,0x38,0x38,0x38,0x30,0x18,0x30,0x18,0x30,0x18,0x38,0x38,0x38,0x38,
    0x3c,0x70,0x3f,0xe0,0x33,0xc0,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xb0,0x1f,0xf0,0x38,0x70,0x30,0x30,0x30,0x30,
    0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x38,0x70,0x1f,0xf0,0x07,0xb0,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,
    0x00,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x0c,0x78,0x0d,0xfc,0x0f,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,
    0x0c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1f,0xe0,0x18,0x20,0x18,0x00,0x18,0x00,0x1e,0x00,0x0f,0xe0,
    0x00,0xf0,0x00,0x30,0x00,0x30,0x10,0x70,0x3f,0xe0,0x0f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x3f,0xf0,0x3f,0xf0,
    0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x07,0x00,0x03,0xf0,0x01,0xf0,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x38,0x30,
    0x38,0x30,0x18,0x70,0x1f,0xf0,0x0f,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x70,0x18,0x30,0x18,0x30,0x30,0x38,0x30,
    0x18,0x70,0x18,0x60,0x0c,0x60,0x0c,0xe0,0x0c,0xc0,0x06,0xc0,0x07,0xc0,0x07,0x80,0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0xc0,0x0c,0xc0,0x0c,0x60,0x0c,0x60,0x0c,0x63,0x18,0x63,0x98,0x33,0x98,0x36,0x98,0x34,0xb0,0x34,0xf0,0x3c,0x70,
    0x1c,0x70,0x18,0x60,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x38,0x38,0x30,0x1c,0x60,0x0c,0xc0,0x07,0xc0,0x03,0x80,
    0x03,0x80,0x07,0x80,0x0e,0xc0,0x0c,0xe0,0x18,0x70,0x30,0x30,0x70,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x70,0x18,
    0x30,0x18,0x30,0x38,0x18,0x30,0x18,0x30,0x1c,0x60,0x0c,0x60,0x0c,0xe0,0x06,0xc0,0x06,0xc0,0x07,0x80,0x03,0x80,0x03,0x80,
    0x03,0x00,0x03,0x00,0x06,0x00,0x3e,0x00,0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xf0,0x1f,0xf0,0x00,0x30,0x00,0x60,0x00,0xc0,0x01,0x80,0x03,0x00,0x07,0x00,
    0x06,0x00,0x0c,0x00,0x18,0x00,0x3f,0xf0,0x3f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf0,0x01,0xf0,0x03,0x80,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,
    0x03,0x00,0x07,0x00,0x1e,0x00,0x1e,0x00,0x07,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x80,
    0x01,0xf0,0x00,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x00,0x03,0x00,0x03,0x00,
    0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,
    0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x1e,0x00,0x1f,0x00,0x07,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x80,
    0x01,0xf0,0x01,0xf0,0x03,0x80,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x03,0x00,0x07,0x00,0x1f,0x00,0x1e,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0x08,0x7f,0xf8,0x41,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
};

inline constexpr uint8_t k_times_bits[] = {
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1c,0x00,0x1c,0x00,0x0c,0x00,0x0c,0x00,0x0c,
    0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x00,0x00,0x00,0x00,0x0c,0x00,0x1c,
    0x00,0x0c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x31,0x80,0x31,0x80,0x31,0x80,0x31,0x80,0x31,0x80,0x31,0x80,0x31,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xc3,0x00,0x00,0xc3,
    0x00,0x00,0xc6,0x00,0x00,0xc6,0x00,0x01,0x86,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x01,0x8c,0x00,0x03,0x0c,0x00,0x03,0x18,
    0x00,0x3f,0xff,0x80,0x3f,0xff,0x80,0x06,0x18,0x00,0x06,0x30,0x00,0x06,0x30,0x00,0x06,0x30,0x00,0x0c,0x30,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x01,0x00,0x01,0x00,0x01,0x00,0x07,0xe0,0x19,0x38,0x39,0x18,0x31,0x18,0x39,0x00,0x3d,0x00,0x1f,0x80,0x0f,0xe0,
    0x01,0xf0,0x01,0x78,0x01,0x38,0x21,0x18,0x31,0x18,0x39,0x30,0x0f,0xc0,0x01,0x00,0x01,0x00,0x01,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1e,0x00,0x80,0x33,0x01,0x80,0x31,
    0x83,0x00,0x61,0x83,0x00,0x61,0x86,0x00,0x61,0x84,0x00,0x61,0x8c,0x00,0x31,0x98,0x00,0x33,0x18,0xe0,0x1e,0x33,0x10,0x00,
    0x23,0x18,0x00,0x62,0x18,0x00,0xc6,0x08,0x00,0xc6,0x08,0x01,0x82,0x18,0x01,0x03,0x18,0x03,0x03,0x10,0x06,0x00,0xe0,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf0,0x00,0x07,0x18,0x00,0x06,0x08,0x00,0x0c,0x08,0x00,0x0e,0x00,0x00,0x0e,
    0x00,0x00,0x07,0x00,0x00,0x07,0x80,0x00,0x0d,0xc3,0xf0,0x19,0xe0,0xc0,0x30,0xf0,0xc0,0x30,0x70,0x80,0x30,0x39,0x80,0x30,
    0x1f,0x00,0x38,0x0f,0x00,0x18,0x07,0x00,0x0e,0x1f,0x80,0x07,0xf1,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x30,0x30,0x30,0x30,0x30,0x30,0x30,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,
    0x00,0x06,0x00,0x0c,0x00,0x0c,0x00,0x18,0x00,0x18,0x00,0x38,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,
    0x00,0x30,0x00,0x30,0x00,0x38,0x00,0x18,0x00,0x18,0x00,0x0c,0x00,0x0c,0x00,0x06,0x00,0x01,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x20,0x00,0x30,0x00,0x18,0x00,0x0c,0x00,0x0c,0x00,0x06,0x00,0x06,0x00,0x06,
    0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x0c,0x00,0x0c,0x00,0x18,
    0x00,0x30,0x00,0x20,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x06,0x00,0x06,0x00,0x46,
    0x20,0x76,0xe0,0x1f,0x80,0x0f,0x00,0x1f,0x80,0x76,0xe0,0x46,0x20,0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x60,
    0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x00,0x60,
    0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x18,0x18,0x30,0x70,0x40,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7e,0x7e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x38,0x18,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x03,0x06,0x06,0x06,0x04,0x0c,0x0c,0x08,0x18,0x18,0x18,0x30,0x30,0x30,0x60,0x60,0x60,
    0xc0,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x0c,0x60,0x18,0x30,0x18,0x38,
    0x30,0x18,0x30,0x18,0x30,0x18,0x30,0x1c,0x30,0x1c,0x30,0x1c,0x30,0x1c,0x30,0x18,0x30,0x18,0x30,0x18,0x18,0x38,0x18,0x30,
    0x0c,0x60,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x03,0x80,0x07,0x80,0x0f,0x80,0x1b,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,
    0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x1f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xc0,0x38,0x60,0x30,0x30,0x20,0x30,0x00,0x38,0x00,0x38,
    0x00,0x30,0x00,0x30,0x00,0x60,0x00,0xe0,0x00,0xc0,0x01,0x80,0x03,0x00,0x06,0x00,0x0c,0x08,0x18,0x08,0x3f,0xf8,0x3f,0xf8,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xc0,
    0x38,0x70,0x30,0x30,0x30,0x38,0x00,0x38,0x00,0x38,0x00,0x30,0x00,0x60,0x03,0xc0,0x00,0x70,0x00,0x38,0x00,0x18,0x00,0x18,
    0x00,0x18,0x20,0x18,0x30,0x38,0x38,0x70,0x0f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xe0,0x01,0xe0,0x01,0xe0,0x03,0xe0,0x02,0xe0,0x06,0xe0,0x0c,0xe0,0x0c,0xe0,
    0x18,0xe0,0x10,0xe0,0x30,0xe0,0x60,0xe0,0x60,0xe0,0x7f,0xfc,0x00,0xe0,0x00,0xe0,0x00,0xe0,0x03,0xfc,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xf0,0x1f,0xf0,0x10,0x00,
    0x10,0x00,0x10,0x00,0x10,0x00,0x17,0xc0,0x18,0x70,0x10,0x30,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x20,0x18,
    0x30,0x30,0x38,0x70,0x0f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x03,0xe0,0x0c,0x38,0x08,0x18,0x18,0x18,0x30,0x00,0x30,0x00,0x33,0xe0,0x3c,0x30,0x38,0x38,0x38,0x18,
    0x38,0x1c,0x30,0x1c,0x30,0x1c,0x38,0x1c,0x38,0x18,0x18,0x38,0x0c,0x30,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xfc,0x3f,0xf8,0x20,0x18,0x20,0x18,0x00,0x30,
    0x00,0x30,0x00,0x20,0x00,0x60,0x00,0x60,0x00,0xc0,0x00,0xc0,0x00,0x80,0x01,0x80,0x01,0x80,0x03,0x00,0x03,0x00,0x02,0x00,
    0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x07,0xc0,0x1c,0x70,0x18,0x38,0x38,0x18,0x38,0x18,0x38,0x18,0x18,0x38,0x0c,0x70,0x07,0xc0,0x1c,0x30,0x38,0x18,0x30,0x18,
    0x30,0x1c,0x30,0x1c,0x30,0x18,0x38,0x18,0x1c,0x30,0x07,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x1c,0x60,0x38,0x30,0x30,0x38,0x30,0x18,0x30,0x18,0x30,0x1c,
    0x30,0x1c,0x30,0x1c,0x38,0x3c,0x1c,0x7c,0x07,0xd8,0x00,0x18,0x00,0x18,0x30,0x10,0x30,0x30,0x38,0x60,0x0f,0x80,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,
    0x1c,0x18,0x00,0x00,0x00,0x00,0x18,0x1c,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x18,0x1c,0x18,0x00,0x00,0x00,0x00,0x18,0x18,0x18,0x30,0x70,0x40,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0xc0,0x00,0x07,0xc0,0x00,0x1f,0x00,0x00,0xfc,0x00,0x07,0xe0,0x00,0x1f,0x00,0x00,0x1c,0x00,0x00,0x1f,0x00,0x00,0x07,
    0xe0,0x00,0x00,0xfc,0x00,0x00,0x1f,0x00,0x00,0x07,0xc0,0x00,0x00,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,
    0xff,0xc0,0x1f,0xff,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x10,0x00,0x00,0x1e,0x00,0x00,0x0f,0x80,0x00,0x01,0xf0,0x00,0x00,0x7e,0x00,0x00,0x0f,0x80,0x00,
    0x03,0xc0,0x00,0x0f,0x80,0x00,0x7e,0x00,0x01,0xf0,0x00,0x0f,0x80,0x00,0x1e,0x00,0x00,0x10,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x1f,0x80,0x30,0xc0,0x20,0x60,0x20,0x70,0x00,0x70,0x00,0x70,0x00,0x60,0x00,0xe0,0x01,0xc0,0x07,0x00,0x06,
    0x00,0x06,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x06,0x00,0x0e,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0x00,
    0x01,0xc0,0xc0,0x07,0x00,0x20,0x0c,0x00,0x10,0x18,0x00,0x08,0x18,0x3d,0x88,0x30,0xe3,0x84,0x30,0xc1,0x84,0x31,0x81,0x84,
    0x31,0x81,0x84,0x31,0x81,0x84,0x31,0x81,0x84,0x31,0x81,0x8c,0x30,0xc1,0x88,0x30,0xe3,0xb0,0x18,0x3d,0xc0,0x18,0x00,0x00,
    0x0c,0x00,0x00,0x07,0x00,0x40,0x01,0xc0,0xc0,0x00,0x7f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xc0,0x00,0x01,0xc0,0x00,0x01,0xe0,0x00,0x03,0xe0,0x00,0x02,0x60,0x00,
    0x02,0x70,0x00,0x06,0x70,0x00,0x04,0x30,0x00,0x04,0x38,0x00,0x0c,0x38,0x00,0x08,0x18,0x00,0x18,0x1c,0x00,0x1f,0xfc,0x00,
    0x10,0x0e,0x00,0x30,0x0e,0x00,0x20,0x06,0x00,0x20,0x07,0x00,0xf8,0x1f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x7f,0xf8,0x00,0x0c,0x1c,0x00,0x0c,0x0e,0x00,0x0c,0x0e,0x00,0x0c,0x06,0x00,0x0c,0x0e,0x00,0x0c,0x0e,0x00,0x0c,0x1c,0x00,
    0x0f,0xf8,0x00,0x0c,0x0e,0x00,0x0c,0x06,0x00,0x0c,0x07,0x00,0x0c,0x07,0x00,0x0c,0x07,0x00,0x0c,0x07,0x00,0x0c,0x07,0x00,
    0x0c,0x0e,0x00,0x7f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xfc,0x00,0x06,0x0f,0x00,0x0c,0x03,0x00,
    0x18,0x01,0x00,0x38,0x01,0x00,0x30,0x00,0x00,0x30,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,
    0x30,0x00,0x00,0x30,0x00,0x00,0x38,0x01,0x80,0x18,0x03,0x00,0x0c,0x07,0x00,0x06,0x0e,0x00,0x01,0xf8,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0xf0,0x00,0x0c,0x1c,0x00,0x0c,0x06,0x00,0x0c,0x03,0x00,0x0c,0x03,0x80,0x0c,0x01,0x80,
    0x0c,0x01,0xc0,0x0c,0x01,0xc0,0x0c,0x01,0xc0,0x0c,0x01,0xc0,0x0c,0x01,0xc0,0x0c,0x01,0xc0,0x0c,0x01,0x80,0x0c,0x03,0x80,
    0x0c,0x03,0x00,0x0c,0x06,0x00,0x0c,0x1c,0x00,0x7f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0xfe,0x00,
    0x0c,0x02,0x00,0x0c,0x02,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x08,0x00,0x0c,0x08,0x00,0x0f,0xf8,0x00,
    0x0c,0x08,0x00,0x0c,0x08,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x03,0x00,0x0c,0x03,0x00,
    0x7f,0xff,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0xff,0x00,0x0c,0x03,0x00,0x0c,0x03,0x00,0x0c,0x00,0x00,
    0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x08,0x00,0x0c,0x08,0x00,0x0f,0xf8,0x00,0x0c,0x08,0x00,0x0c,0x08,0x00,0x0c,0x00,0x00,
    0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x0c,0x00,0x00,0x7f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x01,0xfc,0x00,0x06,0x07,0x80,0x0c,0x03,0x80,0x18,0x01,0x80,0x38,0x01,0x80,0x30,0x00,0x00,0x30,0x00,0x00,
    0x70,0x00,0x00,0x70,0x00,0x00,0x70,0x00,0x00,0x70,0x0f,0x80,0x30,0x01,0x80,0x30,0x01,0x80,0x38,0x01,0x80,0x18,0x01,0x80,
    0x0c,0x01,0x80,0x07,0x07,0x80,0x01,0xfc,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0x07,0xf0,0x0c,0x01,0x80,
    0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x0f,0xff,0x80,0x0c,0x01,0x80,
    0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x80,0x7f,0x07,0xf0,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x7f,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,
    0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x7f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0x80,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,
    0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,
    0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x18,0x00,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x7f,0x0f,0x80,0x0c,0x06,0x00,0x0c,0x0c,0x00,0x0c,0x18,0x00,0x0c,0x30,0x00,0x0c,0x60,0x00,0x0c,
    0xc0,0x00,0x0d,0x00,0x00,0x0f,0x00,0x00,0x0f,0x80,0x00,0x0d,0xc0,0x00,0x0c,0xe0,0x00,0x0c,0x70,0x00,0x0c,0x38,0x00,0x0c,
    0x1c,0x00,0x0c,0x0e,0x00,0x0c,0x07,0x00,0x7f,0x03,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,
    0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x02,0x0c,0x02,0x0c,
    0x02,0x7f,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7e,0x00,0x3e,0x00,0x0e,0x00,0x38,0x00,0x0e,0x00,0x78,0x00,0x0f,
    0x00,0x78,0x00,0x0b,0x00,0xd8,0x00,0x0b,0x80,0x98,0x00,0x09,0x81,0x98,0x00,0x09,0xc1,0x18,0x00,0x08,0xc1,0x18,0x00,0x08,
    0xe2,0x18,0x00,0x08,0x62,0x18,0x00,0x08,0x76,0x18,0x00,0x08,0x3c,0x18,0x00,0x08,0x3c,0x18,0x00,0x08,0x38,0x18,0x00,0x08,
    0x10,0x18,0x00,0x08,0x00,0x18,0x00,0x7e,0x00,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x7c,0x03,0xf0,0x0e,0x00,0xc0,0x0e,0x00,0xc0,0x0f,0x00,0xc0,0x0b,0x80,0xc0,0x09,0xc0,0xc0,0x08,0xc0,0xc0,0x08,
    0xe0,0xc0,0x08,0x70,0xc0,0x08,0x38,0xc0,0x08,0x18,0xc0,0x08,0x1c,0xc0,0x08,0x0e,0xc0,0x08,0x07,0xc0,0x08,0x03,0xc0,0x08,
    0x03,0xc0,0x08,0x01,0xc0,0x7e,0x00,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf8,0x00,0x06,0x0e,0x00,0x0c,
    0x03,0x00,0x18,0x03,0x80,0x38,0x01,0x80,0x30,0x01,0xc0,0x30,0x01,0xc0,0x70,0x00,0xc0,0x70,0x00,0xc0,0x70,0x00,0xc0,0x70,
    0x00,0xc0,0x30,0x01,0xc0,0x30,0x01,0xc0,0x38,0x01,0x80,0x18,0x03,0x80,0x0c,0x03,0x00,0x06,0x0e,0x00,0x01,0xf8,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x7f,0xf0,0x0c,0x1c,0x0c,0x0e,0x0c,0x0e,0x0c,0x06,0x0c,0x06,0x0c,0x0e,0x0c,0x0e,0x0c,0x1c,0x0f,0xf0,0x0c,
    0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x0c,0x00,0x7f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf8,0x00,0x06,0x0e,0x00,
    0x0c,0x03,0x00,0x18,0x03,0x80,0x38,0x01,0x80,0x30,0x01,0xc0,0x30,0x01,0xc0,0x70,0x00,0xc0,0x70,0x00,0xc0,0x70,0x00,0xc0,
    0x70,0x00,0xc0,0x30,0x01,0xc0,0x30,0x01,0xc0,0x38,0x01,0x80,0x18,0x03,0x80,0x0c,0x03,0x00,0x06,0x0e,0x00,0x01,0xf8,0x00,
    0x00,0x30,0x00,0x00,0x18,0x00,0x00,0x0f,0x00,0x00,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0xf8,0x00,0x0c,0x1c,0x00,0x0c,0x0e,0x00,0x0c,0x06,0x00,0x0c,0x07,0x00,
    0x0c,0x06,0x00,0x0c,0x0e,0x00,0x0c,0x1c,0x00,0x0f,0xf0,0x00,0x0c,0x38,0x00,0x0c,0x1c,0x00,0x0c,0x0c,0x00,0x0c,0x0e,0x00,
    0x0c,0x0e,0x00,0x0c,0x06,0x00,0x0c,0x07,0x00,0x0c,0x03,0x00,0x7f,0x03,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xf0,0x1c,0x1c,0x18,
    0x0c,0x30,0x0c,0x30,0x0c,0x38,0x00,0x38,0x00,0x1e,0x00,0x0f,0xe0,0x03,0xf8,0x00,0x7c,0x00,0x1c,0x00,0x0e,0x30,0x0e,0x30,
    0x0c,0x30,0x0c,0x3c,0x18,0x0f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0xff,0xff,0xc1,0x83,0xc1,0x83,0xc1,0x83,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,
    0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x07,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0x07,0xe0,0x1c,
    0x01,0x80,0x1c,0x01,0x80,0x1c,0x01,0x80,0x1c,0x01,0x80,0x1c,0x01,0x80,0x1c,0x01,0x80,0x1c,0x01,0x80,0x1c,0x01,0x80,0x1c,
    0x01,0x80,0x1c,0x01,0x80,0x1c,0x01,0x80,0x1c,0x01,0x80,0x0c,0x01,0x80,0x0c,0x01,0x00,0x0e,0x03,0x00,0x07,0x06,0x00,0x01,
    0xfc,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xfc,0x07,0x80,0x30,0x03,0x00,0x38,0x02,0x00,0x38,0x02,0x00,0x18,
    0x06,0x00,0x1c,0x04,0x00,0x0c,0x0c,0x00,0x0e,0x0c,0x00,0x0e,0x08,0x00,0x06,0x18,0x00,0x07,0x10,0x00,0x07,0x10,0x00,0x03,
    0x30,0x00,0x03,0xa0,0x00,0x03,0xe0,0x00,0x01,0xe0,0x00,0x01,0xc0,0x00,0x00,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xfe,0x0c,0x0f,0x80,0x30,0x0c,0x06,0x00,0x38,0x1e,0x04,0x00,0x18,0x1e,0x04,0x00,0x18,
    0x16,0x04,0x00,0x1c,0x36,0x0c,0x00,0x1c,0x27,0x08,0x00,0x0c,0x23,0x08,0x00,0x0c,0x23,0x08,0x00,0x0e,0x63,0x18,0x00,0x0e,
    0x43,0x90,0x00,0x06,0x41,0x90,0x00,0x06,0x41,0xb0,0x00,0x07,0xc1,0xf0,0x00,0x07,0x81,0xe0,0x00,0x03,0x80,0xe0,0x00,0x03,
    0x80,0xe0,0x00,0x03,0x00,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xfe,0x3f,
    0x00,0x38,0x0c,0x00,0x1c,0x08,0x00,0x0e,0x18,0x00,0x0e,0x30,0x00,0x07,0x20,0x00,0x03,0xe0,0x00,0x03,0xc0,0x00,0x01,0xc0,
    0x00,0x01,0xc0,0x00,0x03,0xe0,0x00,0x02,0x70,0x00,0x06,0x70,0x00,0x0c,0x38,0x00,0x08,0x1c,0x00,0x18,0x1c,0x00,0x30,0x0e,
    0x00,0xfc,0x3f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xfc,0x1f,0x30,0x04,0x38,0x0c,0x1c,0x18,0x1c,0x10,0x0e,0x30,0x06,0x20,0x07,0x60,
    0x03,0xc0,0x03,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x07,0xe0,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,
    0xfe,0x00,0x60,0x0e,0x00,0x60,0x1c,0x00,0x60,0x3c,0x00,0x00,0x38,0x00,0x00,0x70,0x00,0x00,0xf0,0x00,0x00,0xe0,0x00,0x01,
    0xc0,0x00,0x03,0x80,0x00,0x03,0x80,0x00,0x07,0x00,0x00,0x0e,0x00,0x00,0x0e,0x00,0x00,0x1c,0x00,0x00,0x38,0x03,0x00,0x78,
    0x03,0x00,0x7f,0xff,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,
    0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,0x00,0x30,
    0x00,0x3f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xc0,0xc0,0x60,0x60,0x60,0x30,0x30,0x30,0x18,0x18,
    0x18,0x08,0x0c,0x0c,0x04,0x06,0x06,0x06,0x03,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x3e,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,
    0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x06,0x00,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf0,0x00,0x00,0xf8,0x00,0x01,0xf8,0x00,
    0x03,0x8c,0x00,0x06,0x06,0x00,0x0c,0x03,0x00,0x18,0x01,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xff,
    0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x38,0x00,0x18,0x00,0x0c,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x80,0x38,0xe0,0x30,0x60,0x20,0x70,0x00,0x30,0x1f,0xf0,0x38,0x30,0x70,
    0x30,0x70,0x30,0x70,0x70,0x38,0xf0,0x1f,0x7c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x78,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x19,0xe0,0x1e,0x38,0x1c,
    0x18,0x18,0x1c,0x18,0x0c,0x18,0x0c,0x18,0x0c,0x18,0x0c,0x18,0x1c,0x1c,0x18,0x1c,0x38,0x7b,0xe0,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x18,0x70,0x30,0x30,0x30,0x10,0x70,0x00,0x70,0x00,0x70,0x00,0x70,0x00,0x30,0x00,0x30,
    0x30,0x18,0x60,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0xf8,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x0f,0xb8,0x18,0x78,0x30,0x38,0x30,0x38,0x70,
    0x38,0x70,0x38,0x70,0x38,0x70,0x38,0x30,0x38,0x30,0x38,0x18,0x78,0x0f,0xbe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x07,0xc0,0x18,0x60,0x30,0x30,0x30,0x38,0x70,0x38,0x7f,0xf8,0x70,0x00,0x70,0x00,0x30,0x00,0x30,0x18,0x1c,0x30,0x07,
    0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,
    0x80,0x0c,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x7f,0x80,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,
    0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x7f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xbe,0x18,
    0x78,0x30,0x38,0x30,0x38,0x70,0x38,0x70,0x38,0x70,0x38,0x70,0x38,0x30,0x38,0x30,0x38,0x18,0x78,0x0f,0xb8,0x00,0x38,0x30,
    0x30,0x30,0x30,0x38,0x60,0x0f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x78,0x00,0x18,0x00,0x18,
    0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x19,0xe0,0x1e,0x30,0x1c,0x38,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,
    0x18,0x18,0x18,0x18,0x18,0x7e,0x7e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x18,0x38,0x18,0x00,0x00,0x00,0x78,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x7e,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x18,0x38,0x18,0x00,0x00,0x00,0x78,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,
    0x18,0x18,0x30,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x78,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,
    0x00,0x18,0x00,0x18,0xfc,0x18,0x20,0x18,0x40,0x19,0x80,0x1b,0x00,0x1f,0x80,0x1d,0xc0,0x18,0xc0,0x18,0x60,0x18,0x70,0x18,
    0x38,0x7e,0x7e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x78,0x18,0x18,0x18,
    0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x7e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x79,0xe3,0xc0,0x1c,0x34,0x60,0x1c,0x38,0x30,0x18,0x38,0x30,0x18,0x38,0x30,0x18,0x38,0x30,0x18,
    0x38,0x30,0x18,0x38,0x30,0x18,0x38,0x30,0x18,0x38,0x30,0x18,0x38,0x30,0x7e,0x7e,0xfc,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x79,0xe0,0x1e,0x30,0x1c,0x38,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,
    0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x7e,0x7e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xc0,0x18,0x60,0x30,
    0x30,0x30,0x38,0x70,0x18,0x70,0x18,0x70,0x18,0x70,0x18,0x30,0x38,0x30,0x30,0x18,0x60,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x7b,0xe0,0x1c,0x38,0x1c,0x18,0x18,0x1c,0x18,0x0c,0x18,0x0c,0x18,0x0c,0x18,0x0c,0x18,0x1c,0x1c,
    0x18,0x1e,0x38,0x19,0xe0,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x7e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xbe,0x18,0x78,0x30,0x38,0x30,0x38,0x70,
    0x38,0x70,0x38,0x70,0x38,0x70,0x38,0x30,0x38,0x30,0x38,0x18,0x78,0x0f,0xb8,0x00,0x38,0x00,0x38,0x00,0x38,0x00,0x38,0x00,
    0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x79,0xe0,0x1b,0xe0,0x1e,0x20,0x1c,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x7f,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x80,0x30,0xc0,0x20,0x40,0x70,0x00,0x38,0x00,0x3f,0x00,0x0f,
    0xc0,0x01,0xe0,0x00,0x60,0x60,0x60,0x70,0xc0,0x1f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x7f,0x80,0x18,
    0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x00,0x18,0x80,0x19,0x80,0x0f,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x78,0xf8,0x18,0x38,0x18,0x38,0x18,0x38,0x18,0x38,0x18,0x38,0x18,0x38,0x18,0x38,0x18,
    0x38,0x18,0x38,0x1c,0x78,0x0f,0xbe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xfc,0x78,0x30,0x30,0x30,0x20,0x38,
    0x20,0x18,0x60,0x1c,0x40,0x0c,0xc0,0x0c,0x80,0x0e,0x80,0x07,0x80,0x07,0x00,0x03,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xfc,0x30,0xf0,0x30,0x70,0x60,0x38,0x70,0x40,0x18,
    0x78,0x40,0x18,0xd8,0xc0,0x1c,0x98,0x80,0x0c,0x9c,0x80,0x0d,0x8d,0x80,0x0f,0x0d,0x00,0x07,0x07,0x00,0x07,0x07,0x00,0x06,
    0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xfc,0xf8,0x38,0x60,0x18,0x40,
    0x0c,0x80,0x0f,0x80,0x07,0x00,0x07,0x00,0x07,0x80,0x09,0xc0,0x18,0xe0,0x10,0x60,0x79,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0xfc,0x78,0x30,0x30,0x30,0x20,0x38,0x20,0x18,0x60,0x1c,0x40,0x0c,0xc0,0x0c,0x80,0x0e,0x80,0x07,0x80,
    0x07,0x00,0x03,0x00,0x02,0x00,0x02,0x00,0x06,0x00,0x44,0x00,0x78,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0xf0,0x60,0xe0,0x60,0xc0,0x01,0xc0,0x03,0x80,
    0x07,0x00,0x0e,0x00,0x0c,0x00,0x1c,0x00,0x38,0x10,0x70,0x10,0x7f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf0,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,
    0x01,0x80,0x01,0x80,0x03,0x80,0x03,0x00,0x1e,0x00,0x03,0x00,0x03,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,0x01,0x80,
    0x01,0x80,0x01,0x80,0x01,0x80,0x00,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x18,0x18,0x18,0x18,0x18,0x18,0x18,
    0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x18,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x1e,0x00,0x03,0x00,0x03,0x00,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x01,0x80,0x01,0x80,0x01,0xc0,0x00,
    0xf0,0x01,0xc0,0x01,0x80,0x01,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x80,0x03,0x00,0x03,0x00,0x1e,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0x80,0x00,
    0x1f,0xe1,0xc0,0x10,0x7f,0x80,0x00,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
};

inline constexpr uint8_t k_detection_bits[] = {
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0x00,0x1f,0x00,0x1f,0x00,0x1f,0x00,0x1f,
    0x00,0x1f,0x00,0x1f,0x00,0x1f,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x0e,0x00,0x00,0x00,0x00,0x00,0x1f,0x00,0x1f,0x00,0x1f,
    0x00,0x1f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x39,0xc0,0x39,0xc0,0x39,0xc0,0x39,0xc0,0x39,0xc0,0x39,0xc0,0x39,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xe3,0x00,0x00,0xc7,0x00,0x01,0xc7,
    0x00,0x01,0xc7,0x00,0x01,0xc6,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x03,0x8c,0x00,0x03,0x0c,0x00,0x03,0x1c,
    0x00,0x3f,0xff,0x80,0x3f,0xff,0x80,0x3f,0xff,0x80,0x06,0x38,0x00,0x0e,0x38,0x00,0x0e,0x30,0x00,0x0e,0x30,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x01,0x80,0x00,0x01,0x80,0x00,0x01,0x80,0x00,0x07,0xf0,0x00,0x1f,0xfc,0x00,0x3f,0xfc,0x00,0x3d,0x8c,
    0x00,0x3d,0x80,0x00,0x3d,0x80,0x00,0x3f,0xc0,0x00,0x1f,0xf8,0x00,0x0f,0xfc,0x00,0x03,0xfe,0x00,0x01,0x9e,0x00,0x01,0x9e,
    0x00,0x31,0x9e,0x00,0x3f,0xfe,0x00,0x3f,0xfc,0x00,0x0f,0xf0,0x00,0x01,0x80,0x00,0x01,0x80,0x00,0x01,0x80,0x00,0x01,0x80,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0x00,
    0xc0,0x3f,0x81,0xc0,0x73,0xc1,0x80,0x71,0xc3,0x80,0x71,0xc7,0x00,0x71,0xc6,0x00,0x71,0xce,0x00,0x73,0xcc,0x00,0x3f,0x9c,
    0xf8,0x1f,0x39,0xfc,0x00,0x33,0xce,0x00,0x73,0x8e,0x00,0x63,0x8e,0x00,0xe3,0x8e,0x01,0xc3,0x8e,0x01,0x83,0xce,0x03,0x81,
    0xfc,0x03,0x00,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf8,0x00,0x07,0xfc,0x00,0x07,0xfc,0x00,0x0f,0x84,
    0x00,0x0f,0x00,0x00,0x0f,0x80,0x00,0x07,0x80,0x00,0x07,0xc0,0x00,0x1f,0xe1,0xe0,0x3f,0xf1,0xe0,0x3c,0xf9,0xe0,0x3c,0x7f,
    0xc0,0x7c,0x3f,0xc0,0x3c,0x1f,0x80,0x3e,0x1f,0x80,0x3f,0xff,0xc0,0x1f,0xff,0xe0,0x07,0xf1,0xe0,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x38,0x38,0x38,0x38,0x38,0x38,
    0x38,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x07,0x80,0x07,0x00,0x0f,0x00,0x0e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,
    0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x0e,0x00,0x0f,0x00,0x07,0x00,0x07,0x80,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x00,0x1c,0x00,0x1e,0x00,0x0e,0x00,0x0f,0x00,
    0x0f,0x00,0x0f,0x00,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x0f,0x00,0x0f,0x00,0x0f,0x00,
    0x0e,0x00,0x1e,0x00,0x1c,0x00,0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x06,0x00,0x06,0x00,0x46,0x20,0x76,0xf0,0x3f,0xc0,0x0f,0x80,0x3f,0xc0,0x76,0xf0,0x46,0x20,0x06,0x00,0x06,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,
    0x1f,0xff,0xc0,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x60,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3c,0x00,0x38,0x00,0x38,0x00,0x70,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x7f,0x80,0x7f,0x80,0x7f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3e,
    0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0x80,0x03,0x00,0x07,0x00,0x07,0x00,0x06,0x00,0x0e,0x00,0x0e,0x00,0x0c,0x00,0x0c,
    0x00,0x1c,0x00,0x1c,0x00,0x18,0x00,0x38,0x00,0x38,0x00,0x30,0x00,0x70,0x00,0x70,0x00,0x60,0x00,0xe0,0x00,0xe0,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0xe0,
    0x00,0x0f,0xf8,0x00,0x1f,0xfc,0x00,0x3e,0x3c,0x00,0x3c,0x3e,0x00,0x3c,0x1e,0x00,0x7c,0x1e,0x00,0x7c,0x1e,0x00,0x7c,0x1f,
    0x00,0x7c,0x1f,0x00,0x7c,0x1e,0x00,0x7c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x3e,0x00,0x3e,0x3c,0x00,0x1f,0xfc,0x00,0x0f,0xf8,
    0x00,0x03,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xe0,0x00,0x1f,0xe0,0x00,0x1f,0xe0,0x00,0x19,0xe0,
    0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,
    0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x1f,0xfe,0x00,0x1f,0xfe,0x00,0x1f,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x0f,0xe0,0x00,0x3f,0xf8,0x00,0x3f,0xfc,0x00,0x38,0x7c,0x00,0x20,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,
    0x00,0x00,0x3c,0x00,0x00,0x7c,0x00,0x00,0xf8,0x00,0x01,0xf0,0x00,0x03,0xe0,0x00,0x07,0xc0,0x00,0x0f,0x80,0x00,0x3e,0x00,
    0x00,0x3f,0xfe,0x00,0x3f,0xfe,0x00,0x3f,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xe0,0x00,0x3f,0xf8,
    0x00,0x3f,0xfc,0x00,0x30,0x7c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x7c,0x00,0x07,0xf8,0x00,0x07,0xf0,0x00,0x07,0xfc,
    0x00,0x00,0x7c,0x00,0x00,0x3e,0x00,0x00,0x3e,0x00,0x00,0x3e,0x00,0x20,0x7c,0x00,0x3f,0xfc,0x00,0x3f,0xf8,0x00,0x1f,0xe0,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf8,0x00,0x01,0xf8,0x00,0x03,0xf8,0x00,0x03,0xf8,0x00,0x07,0xf8,
    0x00,0x07,0x78,0x00,0x0e,0x78,0x00,0x1e,0x78,0x00,0x1c,0x78,0x00,0x38,0x78,0x00,0x78,0x78,0x00,0x70,0x78,0x00,0x7f,0xff,
    0x00,0x7f,0xff,0x00,0x7f,0xff,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x78,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x1f,0xfc,0x00,0x1f,0xfc,0x00,0x1f,0xfc,0x00,0x1c,0x00,0x00,0x1c,0x00,0x00,0x1c,0x00,0x00,0x1f,0xe0,0x00,0x1f,0xf8,
    0x00,0x1f,0xfc,0x00,0x10,0x7e,0x00,0x00,0x3e,0x00,0x00,0x3e,0x00,0x00,0x3e,0x00,0x00,0x3e,0x00,0x30,0x7e,0x00,0x3f,0xfc,
    0x00,0x3f,0xf8,0x00,0x0f,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xf8,0x00,0x07,0xfc,0x00,0x0f,0xfc,
    0x00,0x1f,0x04,0x00,0x3e,0x00,0x00,0x3c,0x00,0x00,0x3d,0xf0,0x00,0x3f,0xfc,0x00,0x3f,0xfc,0x00,0x3e,0x3e,0x00,0x3e,0x1e,
    0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3e,0x1e,0x00,0x1e,0x3e,0x00,0x1f,0xfc,0x00,0x0f,0xf8,0x00,0x03,0xf0,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xfe,0x00,0x3f,0xfe,0x00,0x3f,0xfe,0x00,0x00,0x3c,0x00,0x00,0x7c,0x00,0x00,0x7c,
    0x00,0x00,0x78,0x00,0x00,0xf8,0x00,0x00,0xf0,0x00,0x01,0xf0,0x00,0x01,0xe0,0x00,0x03,0xe0,0x00,0x03,0xc0,0x00,0x03,0xc0,
    0x00,0x07,0xc0,0x00,0x07,0x80,0x00,0x0f,0x80,0x00,0x0f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xf0,
    0x00,0x1f,0xfc,0x00,0x3f,0xfc,0x00,0x3e,0x3e,0x00,0x3c,0x3e,0x00,0x3c,0x3e,0x00,0x3e,0x3c,0x00,0x1f,0xf8,0x00,0x0f,0xf0,
    0x00,0x1f,0xfc,0x00,0x3e,0x3e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3e,0x3e,0x00,0x3f,0xfe,0x00,0x1f,0xfc,
    0x00,0x07,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xe0,0x00,0x1f,0xf0,0x00,0x3f,0xf8,0x00,0x3e,0x7c,
    0x00,0x7c,0x3c,0x00,0x7c,0x3e,0x00,0x7c,0x3e,0x00,0x7c,0x3e,0x00,0x3e,0x7e,0x00,0x3f,0xfe,0x00,0x1f,0xfe,0x00,0x07,0xde,
    0x00,0x00,0x3e,0x00,0x00,0x3c,0x00,0x30,0x7c,0x00,0x3f,0xf8,0x00,0x3f,0xf0,0x00,0x0f,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1e,0x00,0x1e,0x00,0x1e,
    0x00,0x1e,0x00,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x3c,0x00,0x3c,0x00,0x38,
    0x00,0x30,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xc0,0x00,0x03,0xc0,0x00,0x1f,0xc0,0x00,0xff,0x00,
    0x07,0xf8,0x00,0x1f,0xe0,0x00,0x1f,0x00,0x00,0x1f,0x00,0x00,0x1f,0xc0,0x00,0x07,0xf8,0x00,0x00,0xff,0x00,0x00,0x1f,0xc0,
    0x00,0x03,0xc0,0x00,0x00,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x1f,0xff,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x10,0x00,0x00,0x1e,0x00,0x00,
    0x1f,0x80,0x00,0x0f,0xf0,0x00,0x01,0xfe,0x00,0x00,0x3f,0x80,0x00,0x0f,0xc0,0x00,0x0f,0xc0,0x00,0x3f,0x80,0x01,0xfe,0x00,
    0x0f,0xf0,0x00,0x1f,0x80,0x00,0x1e,0x00,0x00,0x10,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xc0,0x3f,0xe0,0x3f,0xf0,0x20,0xf0,
    0x00,0xf0,0x00,0xf0,0x01,0xf0,0x03,0xe0,0x07,0xc0,0x07,0x80,0x0f,0x80,0x0f,0x00,0x00,0x00,0x00,0x00,0x0f,0x00,0x0f,0x00,
    0x0f,0x00,0x0f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0x00,0x01,0xff,0xc0,0x07,0x81,0xe0,0x0e,0x00,0x70,0x1c,0x00,0x38,0x18,0x39,
    0x98,0x38,0xff,0x8c,0x30,0xe7,0x8c,0x31,0xc3,0x8c,0x31,0xc3,0x8c,0x31,0xc3,0x8c,0x31,0xc3,0x8c,0x31,0xc3,0x9c,0x30,0xe7,
    0xb8,0x38,0xff,0xf0,0x18,0x39,0xc0,0x1c,0x00,0x00,0x0e,0x00,0x40,0x07,0x81,0xe0,0x01,0xff,0xc0,0x00,0x7e,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x03,0xf0,
    0x00,0x03,0xf8,0x00,0x03,0xf8,0x00,0x07,0xf8,0x00,0x07,0xfc,0x00,0x07,0xbc,0x00,0x0f,0xbc,0x00,0x0f,0x3e,0x00,0x0f,0x1e,
    0x00,0x1f,0x1e,0x00,0x1e,0x1f,0x00,0x3e,0x0f,0x00,0x3f,0xff,0x00,0x3f,0xff,0x80,0x7f,0xff,0x80,0x7c,0x07,0xc0,0x78,0x07,
    0xc0,0xf8,0x03,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf8,0x00,0x3f,0xfe,0x00,0x3f,0xfe,0x00,0x3e,0x1f,
    0x00,0x3e,0x1f,0x00,0x3e,0x1f,0x00,0x3e,0x1f,0x00,0x3f,0xfe,0x00,0x3f,0xfc,0x00,0x3f,0xfe,0x00,0x3e,0x1f,0x00,0x3e,0x0f,
    0x00,0x3e,0x0f,0x80,0x3e,0x0f,0x80,0x3e,0x1f,0x00,0x3f,0xff,0x00,0x3f,0xfe,0x00,0x3f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x01,0xfc,0x00,0x07,0xff,0x00,0x0f,0xff,0x00,0x1f,0x83,0x00,0x3e,0x01,0x00,0x3e,0x00,0x00,0x3c,0x00,
    0x00,0x7c,0x00,0x00,0x7c,0x00,0x00,0x7c,0x00,0x00,0x7c,0x00,0x00,0x3c,0x00,0x00,0x3e,0x00,0x00,0x3e,0x01,0x00,0x1f,0x83,
    0x00,0x0f,0xff,0x00,0x07,0xff,0x00,0x01,0xfc,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf0,0x00,0x3f,0xfe,
    0x00,0x3f,0xff,0x00,0x3e,0x1f,0x80,0x3e,0x0f,0xc0,0x3e,0x07,0xc0,0x3e,0x03,0xc0,0x3e,0x03,0xe0,0x3e,0x03,0xe0,0x3e,0x03,
    0xe0,0x3e,0x03,0xe0,0x3e,0x03,0xc0,0x3e,0x07,0xc0,0x3e,0x0f,0xc0,0x3e,0x1f,0x80,0x3f,0xff,0x00,0x3f,0xfe,0x00,0x3f,0xf8,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x3f,0xfc,0x3f,0xfc,0x3f,0xfc,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3f,0xfc,0x3f,0xfc,0x3f,
    0xfc,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3f,0xfe,0x3f,0xfe,0x3f,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xfc,0x3f,0xfc,0x3f,0xfc,0x3e,0x00,0x3e,
    0x00,0x3e,0x00,0x3e,0x00,0x3f,0xfc,0x3f,0xfc,0x3f,0xfc,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,
    0x00,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xfe,0x00,0x07,0xff,0x80,0x0f,0xff,0x80,0x1f,0x83,0x80,0x3e,0x00,0x80,0x3e,0x00,0x00,
    0x3c,0x00,0x00,0x7c,0x00,0x00,0x7c,0x1f,0xc0,0x7c,0x1f,0xc0,0x7c,0x1f,0xc0,0x3c,0x03,0xc0,0x3e,0x03,0xc0,0x3e,0x03,0xc0,
    0x1f,0x87,0xc0,0x0f,0xff,0xc0,0x07,0xff,0xc0,0x01,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3e,0x07,0xc0,
    0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3f,0xff,0xc0,0x3f,0xff,0xc0,
    0x3f,0xff,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,0x3e,0x07,0xc0,
    0x3e,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,
    0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,
    0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,
    0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x7c,0x00,0xfc,0x00,0xf8,0x00,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3e,0x07,0xc0,0x3e,0x0f,0x80,0x3e,0x1f,0x00,0x3e,0x3e,0x00,0x3e,0x7c,0x00,0x3e,
    0xf8,0x00,0x3f,0xf0,0x00,0x3f,0xe0,0x00,0x3f,0xc0,0x00,0x3f,0xe0,0x00,0x3f,0xf0,0x00,0x3f,0xf8,0x00,0x3e,0xfc,0x00,0x3e,
    0x7e,0x00,0x3e,0x3f,0x00,0x3e,0x1f,0x80,0x3e,0x0f,0xc0,0x3e,0x07,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,
    0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,
    0x3f,0xfe,0x3f,0xfe,0x3f,0xfe,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0x00,0xfc,0x3f,0x81,0xfc,0x3f,0x81,0xfc,0x3f,0x81,0xfc,0x3f,0xc3,0xfc,
    0x3f,0xc3,0xfc,0x3d,0xe7,0xfc,0x3d,0xe7,0x7c,0x3c,0xe7,0x7c,0x3c,0xff,0x7c,0x3c,0x7e,0x7c,0x3c,0x7e,0x7c,0x3c,0x3c,0x7c,
    0x3c,0x3c,0x7c,0x3c,0x3c,0x7c,0x3c,0x00,0x7c,0x3c,0x00,0x7c,0x3c,0x00,0x7c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x3f,0x03,0xc0,0x3f,0x03,0xc0,0x3f,0x83,0xc0,0x3f,0x83,0xc0,0x3f,0xc3,0xc0,0x3f,0xc3,0xc0,0x3f,0xe3,0xc0,0x3d,0xe3,0xc0,
    0x3c,0xf3,0xc0,0x3c,0xf3,0xc0,0x3c,0x7b,0xc0,0x3c,0x7f,0xc0,0x3c,0x3f,0xc0,0x3c,0x1f,0xc0,0x3c,0x1f,0xc0,0x3c,0x0f,0xc0,
    0x3c,0x0f,0xc0,0x3c,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xfc,0x00,0x07,0xff,0x00,0x0f,0xff,0x80,
    0x1f,0x0f,0xc0,0x3e,0x07,0xc0,0x3e,0x03,0xe0,0x7c,0x03,0xe0,0x7c,0x03,0xe0,0x7c,0x01,0xe0,0x7c,0x01,0xe0,0x7c,0x03,0xe0,
    0x7c,0x03,0xe0,0x3c,0x03,0xe0,0x3e,0x07,0xc0,0x1f,0x0f,0xc0,0x0f,0xff,0x80,0x07,0xff,0x00,0x01,0xfc,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf8,0x00,0x3f,0xfe,0x00,0x3f,0xff,0x00,0x3e,0x1f,0x00,0x3e,0x0f,0x80,0x3e,0x0f,0x80,
    0x3e,0x0f,0x80,0x3e,0x1f,0x00,0x3f,0xff,0x00,0x3f,0xfe,0x00,0x3f,0xf8,0x00,0x3e,0x00,0x00,0x3e,0x00,0x00,0x3e,0x00,0x00,
    0x3e,0x00,0x00,0x3e,0x00,0x00,0x3e,0x00,0x00,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x01,0xfc,0x00,
    0x07,0xff,0x00,0x0f,0xff,0x80,0x1f,0x0f,0xc0,0x3e,0x07,0xc0,0x3e,0x03,0xe0,0x7c,0x03,0xe0,0x7c,0x03,0xe0,0x7c,0x01,0xe0,
    0x7c,0x01,0xe0,0x7c,0x03,0xe0,0x7c,0x03,0xe0,0x3c,0x03,0xe0,0x3e,0x07,0xc0,0x1f,0x0f,0xc0,0x0f,0xff,0x80,0x07,0xff,0x00,
    0x01,0xfe,0x00,0x00,0x1e,0x00,0x00,0x0f,0x00,0x00,0x0f,0x80,0x00,0x07,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0xf8,0x00,0x3f,0xfc,0x00,0x3f,0xfe,0x00,0x3e,0x3f,0x00,
    0x3e,0x1f,0x00,0x3e,0x1f,0x00,0x3e,0x1f,0x00,0x3e,0x3e,0x00,0x3f,0xfc,0x00,0x3f,0xf8,0x00,0x3f,0xfc,0x00,0x3e,0x3e,0x00,
    0x3e,0x1e,0x00,0x3e,0x1f,0x00,0x3e,0x0f,0x00,0x3e,0x0f,0x80,0x3e,0x07,0x80,0x3e,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x07,0xf8,0x00,0x1f,0xfc,0x00,0x1f,0xfc,0x00,0x3e,0x1c,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3e,0x00,0x00,
    0x3f,0xc0,0x00,0x1f,0xf8,0x00,0x0f,0xfe,0x00,0x03,0xfe,0x00,0x00,0x3e,0x00,0x00,0x1f,0x00,0x20,0x1e,0x00,0x38,0x3e,0x00,
    0x3f,0xfe,0x00,0x3f,0xfc,0x00,0x0f,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xff,0xff,0xff,0xff,0xff,0xff,0x03,0xc0,0x03,0xc0,0x03,
    0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,0xc0,0x03,
    0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,
    0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x3e,0x07,0x80,0x1e,0x0f,0x80,0x1f,0x1f,
    0x80,0x1f,0xff,0x00,0x0f,0xfe,0x00,0x03,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf8,0x03,0xc0,0x78,0x07,
    0xc0,0x7c,0x07,0xc0,0x7c,0x07,0x80,0x3c,0x0f,0x80,0x3e,0x0f,0x00,0x3e,0x0f,0x00,0x1e,0x1f,0x00,0x1f,0x1e,0x00,0x0f,0x1e,
    0x00,0x0f,0x3e,0x00,0x0f,0xbc,0x00,0x07,0xbc,0x00,0x07,0xfc,0x00,0x07,0xf8,0x00,0x03,0xf8,0x00,0x03,0xf8,0x00,0x03,0xf0,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x78,0x1f,0x07,0xc0,0x78,0x1f,0x07,0x80,0x7c,
    0x3f,0x07,0x80,0x3c,0x3f,0x07,0x80,0x3c,0x3f,0x0f,0x80,0x3c,0x3f,0x8f,0x00,0x3e,0x3b,0x8f,0x00,0x3e,0x73,0x8f,0x00,0x1e,
    0x73,0x9f,0x00,0x1e,0x73,0xdf,0x00,0x1e,0x71,0xde,0x00,0x1f,0xf1,0xde,0x00,0x0f,0xe1,0xfe,0x00,0x0f,0xe1,0xfe,0x00,0x0f,
    0xe0,0xfc,0x00,0x0f,0xe0,0xfc,0x00,0x07,0xc0,0xfc,0x00,0x07,0xc0,0xfc,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x7c,0x07,0x80,0x3c,0x0f,0x80,0x3e,0x1f,0x00,0x1f,0x1e,0x00,0x0f,0x3e,0x00,0x0f,0xfc,0x00,
    0x07,0xf8,0x00,0x03,0xf8,0x00,0x03,0xf0,0x00,0x03,0xf0,0x00,0x07,0xf8,0x00,0x07,0xfc,0x00,0x0f,0xbc,0x00,0x1f,0x3e,0x00,
    0x1e,0x1f,0x00,0x3e,0x0f,0x00,0x7c,0x0f,0x80,0x7c,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf8,0x0f,0x80,
    0x7c,0x0f,0x80,0x7c,0x1f,0x00,0x3e,0x3e,0x00,0x1f,0x3e,0x00,0x1f,0x7c,0x00,0x0f,0xf8,0x00,0x07,0xf8,0x00,0x07,0xf0,0x00,
    0x03,0xf0,0x00,0x03,0xe0,0x00,0x03,0xe0,0x00,0x03,0xe0,0x00,0x03,0xe0,0x00,0x03,0xe0,0x00,0x03,0xe0,0x00,0x03,0xe0,0x00,
    0x03,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7f,0xff,0x00,0x7f,0xff,0x00,0x7f,0xff,0x00,0x00,0x3f,0x00,
    0x00,0x7e,0x00,0x00,0x7c,0x00,0x00,0xf8,0x00,0x01,0xf0,0x00,0x03,0xf0,0x00,0x07,0xe0,0x00,0x07,0xc0,0x00,0x0f,0x80,0x00,
    0x1f,0x80,0x00,0x3f,0x00,0x00,0x3e,0x00,0x00,0x7f,0xff,0x00,0x7f,0xff,0x00,0x7f,0xff,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0x80,
    0x3f,0x80,0x3f,0x80,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,
    0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3f,0x80,0x3f,0x80,0x3f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xe0,0x00,0xe0,0x00,0x60,0x00,0x70,0x00,0x70,0x00,0x30,0x00,0x38,0x00,0x38,0x00,
    0x18,0x00,0x1c,0x00,0x1c,0x00,0x0c,0x00,0x0c,0x00,0x0e,0x00,0x0e,0x00,0x06,0x00,0x07,0x00,0x07,0x00,0x03,0x00,0x03,0x80,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3f,0x80,0x3f,0x80,0x3f,0x80,
    0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,0x07,0x80,
    0x07,0x80,0x07,0x80,0x07,0x80,0x3f,0x80,0x3f,0x80,0x3f,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xf0,0x00,0x01,0xf8,0x00,0x03,0xfc,0x00,0x03,0xfe,0x00,0x07,0x0e,0x00,
    0x0e,0x07,0x00,0x1c,0x03,0x80,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0xff,0xf0,0xff,0xf0,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x38,0x00,0x1c,0x00,0x0c,0x00,0x06,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x0f,0xe0,0x3f,0xf8,0x3f,0xfc,0x30,0x7c,0x00,0x3c,0x0f,0xfc,0x3f,0xfc,0x7f,0xfc,0x7c,0x3c,0x7c,0x7c,0x7f,0xfc,0x3f,
    0xfc,0x1f,0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0xf8,0x00,
    0x3f,0xfc,0x00,0x3f,0xfe,0x00,0x3e,0x1f,0x00,0x3e,0x1f,0x00,0x3c,0x0f,0x00,0x3c,0x0f,0x00,0x3c,0x0f,0x00,0x3e,0x1f,0x00,
    0x3e,0x1f,0x00,0x3f,0xfe,0x00,0x3f,0xfc,0x00,0x3c,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x07,0xe0,0x1f,0xf8,0x3f,0xf8,0x3e,0x08,0x7c,0x00,0x7c,0x00,0x78,0x00,0x7c,0x00,0x7c,0x00,0x3e,0x08,0x3f,0xf8,
    0x1f,0xf8,0x07,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1e,0x00,0x00,0x1e,0x00,0x00,0x1e,0x00,0x00,0x1e,0x00,0x00,0x1e,0x00,0x0f,0x9e,
    0x00,0x1f,0xde,0x00,0x3f,0xfe,0x00,0x3e,0x3e,0x00,0x7c,0x1e,0x00,0x7c,0x1e,0x00,0x78,0x1e,0x00,0x7c,0x1e,0x00,0x7c,0x1e,
    0x00,0x3e,0x3e,0x00,0x3f,0xfe,0x00,0x1f,0xde,0x00,0x0f,0x9e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x07,0xe0,0x1f,0xf8,0x3f,0xfc,0x3c,0x3c,0x7c,0x1e,0x7f,0xfe,0x7f,0xfe,0x7f,0xfe,0x7c,0x00,0x3c,0x04,0x3f,
    0xfe,0x1f,0xfe,0x07,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x07,0xc0,0x1f,0xc0,0x1f,0xc0,0x1e,0x00,0x1e,0x00,0xff,0xc0,0xff,0xc0,0xff,0xc0,0x1e,0x00,0x1e,0x00,0x1e,
    0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0x9e,0x00,0x1f,0xde,0x00,0x3f,0xfe,0x00,0x3e,0x3e,0x00,0x7c,0x1e,0x00,
    0x7c,0x1e,0x00,0x78,0x1e,0x00,0x7c,0x1e,0x00,0x7c,0x1e,0x00,0x3e,0x3e,0x00,0x3f,0xfe,0x00,0x1f,0xde,0x00,0x0f,0x9e,0x00,
    0x00,0x1e,0x00,0x10,0x3e,0x00,0x1f,0xfc,0x00,0x1f,0xf8,0x00,0x0f,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,
    0x3c,0xf8,0x00,0x3d,0xfc,0x00,0x3f,0xfe,0x00,0x3f,0x3e,0x00,0x3e,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,
    0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x3c,0x3c,0x3c,0x00,0x3c,0x3c,0x3c,0x3c,0x3c,
    0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x3c,0x3c,0x3c,0x00,
    0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x7c,0xfc,0xf8,0xf0,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x1e,0x3c,0x3c,0x3c,0x78,0x3c,0xf0,0x3f,
    0xe0,0x3f,0xc0,0x3f,0xc0,0x3f,0xe0,0x3d,0xf0,0x3c,0xf8,0x3c,0x7c,0x3c,0x3e,0x3c,0x1f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,0x3c,
    0x3c,0x3c,0x3c,0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x3c,0xf0,0xf8,0x00,0x3f,0xfd,0xfc,0x00,0x3f,0xff,0xfe,0x00,0x3e,0x3f,0x3e,0x00,0x3e,0x3e,0x1e,0x00,0x3c,0x3e,
    0x1e,0x00,0x3c,0x3e,0x1e,0x00,0x3c,0x3e,0x1e,0x00,0x3c,0x3e,0x1e,0x00,0x3c,0x3e,0x1e,0x00,0x3c,0x3e,0x1e,0x00,0x3c,0x3e,
    0x1e,0x00,0x3c,0x3e,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0xf8,0x00,0x3d,0xfc,0x00,0x3f,0xfe,0x00,0x3f,0x3e,0x00,
    0x3e,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,
    0x3c,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x07,0xe0,0x1f,0xf8,0x3f,0xfc,0x3e,
    0x3e,0x7c,0x1e,0x7c,0x1e,0x78,0x1e,0x7c,0x1e,0x7c,0x1e,0x3e,0x3e,0x3f,0xfc,0x1f,0xf8,0x07,0xe0,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0xf8,0x00,0x3f,0xfc,0x00,0x3f,0xfe,0x00,0x3e,0x1f,
    0x00,0x3e,0x1f,0x00,0x3c,0x0f,0x00,0x3c,0x0f,0x00,0x3c,0x0f,0x00,0x3e,0x1f,0x00,0x3e,0x1f,0x00,0x3f,0xfe,0x00,0x3f,0xfc,
    0x00,0x3c,0xf8,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x0f,0x9e,0x00,0x1f,0xde,0x00,0x3f,0xfe,0x00,0x3e,0x3e,0x00,0x7c,0x1e,0x00,0x7c,0x1e,0x00,0x78,0x1e,
    0x00,0x7c,0x1e,0x00,0x7c,0x1e,0x00,0x3e,0x3e,0x00,0x3f,0xfe,0x00,0x1f,0xde,0x00,0x0f,0x9e,0x00,0x00,0x1e,0x00,0x00,0x1e,
    0x00,0x00,0x1e,0x00,0x00,0x1e,0x00,0x00,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3c,0xf0,0x3f,0xf0,0x3f,0xf0,0x3f,0x10,0x3e,0x00,0x3c,0x00,0x3c,0x00,0x3c,
    0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x3c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x0f,0xe0,0x3f,0xf0,0x7f,
    0xf0,0x78,0x10,0x78,0x00,0x3f,0xc0,0x3f,0xf0,0x07,0xf8,0x00,0x78,0x60,0x78,0x7f,0xf8,0x7f,0xf0,0x1f,0xe0,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x3e,0x00,0x3e,
    0x00,0x3e,0x00,0x3e,0x00,0xff,0xe0,0xff,0xe0,0xff,0xe0,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,0x00,0x3e,
    0x00,0x1f,0xe0,0x1f,0xe0,0x0f,0xe0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,0x00,0x3c,0x1e,
    0x00,0x3c,0x3e,0x00,0x3e,0x3e,0x00,0x3f,0xfe,0x00,0x1f,0xde,0x00,0x0f,0x9e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x78,0x1e,0x78,0x1e,0x78,0x3c,0x3c,0x3c,0x3c,0x7c,0x1e,0x78,0x1e,0x78,0x1e,0xf0,0x0f,0xf0,
    0x0f,0xf0,0x07,0xe0,0x07,0xe0,0x07,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x78,0x78,0x78,0x78,0x78,0x78,0x3c,0x78,0x78,0x3c,0xfc,0xf0,0x3c,0xfc,0xf0,0x3c,0xfc,0xf0,0x1e,0xcc,0xf0,0x1f,
    0xcf,0xe0,0x1f,0xcf,0xe0,0x1f,0xcf,0xe0,0x0f,0xc7,0xe0,0x0f,0x87,0xc0,0x0f,0x87,0xc0,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x78,0x3e,0x3c,0x7c,0x3e,0x78,0x1f,0xf0,0x0f,0xf0,0x07,0xe0,0x07,0xc0,0x0f,0xe0,0x0f,
    0xf0,0x1e,0xf8,0x3e,0x78,0x7c,0x3c,0x78,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x78,0x1e,0x78,0x1e,0x78,0x3c,0x3c,
    0x3c,0x3c,0x78,0x1e,0x78,0x1e,0x78,0x0e,0xf0,0x0f,0xf0,0x0f,0xe0,0x07,0xe0,0x07,0xe0,0x03,0xc0,0x03,0xc0,0x07,0x80,0x3f,
    0x80,0x3f,0x00,0x3e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x7f,0xf8,0x7f,0xf8,0x7f,0xf8,0x00,0xf0,0x01,0xe0,0x03,0xc0,0x07,0x80,0x0f,0x00,0x1e,0x00,0x3c,0x00,0x7f,
    0xf8,0x7f,0xf8,0x7f,0xf8,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x7c,0x00,0x00,0xfc,0x00,0x01,0xfc,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,
    0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x03,0xe0,0x00,0x03,0xc0,0x00,0x1f,0xc0,0x00,0x1f,0x80,0x00,0x1f,0xc0,0x00,0x03,
    0xc0,0x00,0x03,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xfc,0x00,0x01,0xfc,0x00,0x00,
    0x7c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,
    0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,
    0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x1c,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x1f,0x00,0x00,0x1f,0xc0,0x00,0x1f,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,
    0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x01,0xe0,0x00,0x01,0xe0,0x00,0x01,0xfc,0x00,0x00,0xfc,0x00,0x01,0xfc,0x00,
    0x01,0xe0,0x00,0x03,0xe0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x03,0xc0,0x00,0x1f,0xc0,0x00,0x1f,0xc0,0x00,
    0x1f,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x07,0x80,0x40,0x1f,0xe1,0xc0,0x1f,0xff,0xc0,0x18,0x7f,0x80,0x00,0x1e,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
    0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,0x00,
};

inline constexpr FontData kFonts[4] = {
    {"DejaVuSans", 29, 23, {
        {8, k_roman_bits + 0},        {10, k_roman_bits + 29},        {11, k_roman_bits + 87},        {20, k_roman_bits + 145},
        {15, k_roman_bits + 232},        {23, k_roman_bits + 290},        {19, k_roman_bits + 377},        {7, k_roman_bits + 464},
        {9, k_roman_bits + 493},        {9, k_roman_bits + 551},        {12, k_roman_bits + 609},        {20, k_roman_bits + 667},
        {8, k_roman_bits + 754},        {9, k_roman_bits + 783},        {8, k_roman_bits + 841},        {8, k_roman_bits + 870},
        {15, k_roman_bits + 899},        {15, k_roman_bits + 957},        {15, k_roman_bits + 1015},        {15, k_roman_bits + 1073},
        {15, k_roman_bits + 1131},        {15, k_roman_bits + 1189},        {15, k_roman_bits + 1247},        {15, k_roman_bits + 1305},
        {15, k_roman_bits + 1363},        {15, k_roman_bits + 1421},        {8, k_roman_bits + 1479},        {8, k_roman_bits + 1508},
        {20, k_roman_bits + 1537},        {20, k_roman_bits + 1624},        {20, k_roman_bits + 1711},        {13, k_roman_bits + 1798},
        {24, k_roman_bits + 1856},        {16, k_roman_bits + 1943},        {16, k_roman_bits + 2001},        {17, k_roman_bits + 2059},
        {18, k_roman_bits + 2146},        {15, k_roman_bits + 2233},        {14, k_roman_bits + 2291},        {19, k_roman_bits + 2349},
        {18, k_roman_bits + 2436},        {7, k_roman_bits + 2523},        {7, k_roman_bits + 2552},        {16, k_roman_bits + 2581},
        {13, k_roman_bits + 2639},        {21, k_roman_bits + 2697},        {18, k_roman_bits + 2784},        {19, k_roman_bits + 2871},
        {14, k_roman_bits + 2958},        {19, k_roman_bits + 3016},        {17, k_roman_bits + 3103},        {15, k_roman_bits + 3190},
        {15, k_roman_bits + 3248},        {18, k_roman_bits + 3306},        {16, k_roman_bits + 3393},        {24, k_roman_bits + 3451},
        {16, k_roman_bits + 3538},        {15, k_roman_bits + 3596},        {16, k_roman_bits + 3654},        {9, k_roman_bits + 3712},
        {8, k_roman_bits + 3770},        {9, k_roman_bits + 3799},        {20, k_roman_bits + 3857},        {12, k_roman_bits + 3944},
        {12, k_roman_bits + 4002},        {15, k_roman_bits + 4060},        {15, k_roman_bits + 4118},        {13, k_roman_bits + 4176},
        {15, k_roman_bits + 4234},        {15, k_roman_bits + 4292},        {8, k_roman_bits + 4350},        {15, k_roman_bits + 4379},
        {15, k_roman_bits + 4437},        {7, k_roman_bits + 4495},        {7, k_roman_bits + 4524},        {14, k_roman_bits + 4553},
        {7, k_roman_bits + 4611},        {23, k_roman_bits + 4640},        {15, k_roman_bits + 4727},        {15, k_roman_bits + 4785},
        {15, k_roman_bits + 4843},        {15, k_roman_bits + 4901},        {10, k_roman_bits + 4959},        {12, k_roman_bits + 5017},
        {9, k_roman_bits + 5075},        {15, k_roman_bits + 5133},        {14, k_roman_bits + 5191},        {20, k_roman_bits + 5249},
        {14, k_roman_bits + 5336},        {14, k_roman_bits + 5394},        {13, k_roman_bits + 5452},        {15, k_roman_bits + 5510},
        {8, k_roman_bits + 5568},        {15, k_roman_bits + 5597},        {20, k_roman_bits + 5655},    }}},
    {"DejaVuSansMono", 29, 23, {
        {14, k_courier_bits + 0},        {14, k_courier_bits + 58},        {14, k_courier_bits + 116},        {14, k_courier_bits + 174},
        {14, k_courier_bits + 232},        {14, k_courier_bits + 290},        {14, k_courier_bits + 348},        {14, k_courier_bits + 406},
        {14, k_courier_bits + 464},        {14, k_courier_bits + 522},        {14, k_courier_bits + 580},        {14, k_courier_bits + 638},
        {14, k_courier_bits + 696},        {14, k_courier_bits + 754},        {14, k_courier_bits + 812},        {14, k_courier_bits + 870},
        {14, k_courier_bits + 928},        {14, k_courier_bits + 986},        {14, k_courier_bits + 1044},        {14, k_courier_bits + 1102},
        {14, k_courier_bits + 1160},        {14, k_courier_bits + 1218},        {14, k_courier_bits + 1276},        {14, k_courier_bits + 1334},
        {14, k_courier_bits + 1392},        {14, k_courier_bits + 1450},        {14, k_courier_bits + 1508},        {14, k_courier_bits + 1566},
        {14, k_courier_bits + 1624},        {14, k_courier_bits + 1682},        {14, k_courier_bits + 1740},        {14, k_courier_bits + 1798},
        {14, k_courier_bits + 1856},        {14, k_courier_bits + 1914},        {14, k_courier_bits + 1972},        {14, k_courier_bits + 2030},
        {14, k_courier_bits + 2088},        {14, k_courier_bits + 2146},        {14, k_courier_bits + 2204},        {14, k_courier_bits + 2262},
        {14, k_courier_bits + 2320},        {14, k_courier_bits + 2378},        {14, k_courier_bits + 2436},        {14, k_courier_bits + 2494},
        {14, k_courier_bits + 2552},        {14, k_courier_bits + 2610},        {14, k_courier_bits + 2668},        {14, k_courier_bits + 2726},
        {14, k_courier_bits + 2784},        {14, k_courier_bits + 2842},        {14, k_courier_bits + 2900},        {14, k_courier_bits + 2958},
        {14, k_courier_bits + 3016},        {14, k_courier_bits + 3074},        {14, k_courier_bits + 3132},        {14, k_courier_bits + 3190},
        {14, k_courier_bits + 3248},        {14, k_courier_bits + 3306},        {14, k_courier_bits + 3364},        {14, k_courier_bits + 3422},
        {14, k_courier_bits + 3480},        {14, k_courier_bits + 3538},        {14, k_courier_bits + 3596},        {14, k_courier_bits + 3654},
        {14, k_courier_bits + 3712},        {14, k_courier_bits + 3770},        {14, k_courier_bits + 3828},        {14, k_courier_bits + 3886},
        {14, k_courier_bits + 3944},        {14, k_courier_bits + 4002},        {14, k_courier_bits + 4060},        {14, k_courier_bits + 4118},
        {14, k_courier_bits + 4176},        {14, k_courier_bits + 4234},        {14, k_courier_bits + 4292},        {14, k_courier_bits + 4350},
        {14, k_courier_bits + 4408},        {14, k_courier_bits + 4466},        {14, k_courier_bits + 4524},        {14, k_courier_bits + 4582},
        {14, k_courier_bits + 4640},        {14, k_courier_bits + 4698},        {14, k_courier_bits + 4756},        {14, k_courier_bits + 4814},
        {14, k_courier_bits + 4872},        {14, k_courier_bits + 4930},        {14, k_courier_bits + 4988},        {14, k_courier_bits + 5046},
        {14, k_courier_bits + 5104},        {14, k_courier_bits + 5162},        {14, k_courier_bits + 5220},        {14, k_courier_bits + 5278},
        {14, k_courier_bits + 5336},        {14, k_courier_bits + 5394},        {14, k_courier_bits + 5452},    }}},
    {"DejaVuSerif", 29, 23, {
        {8, k_times_bits + 0},        {10, k_times_bits + 29},        {11, k_times_bits + 87},        {20, k_times_bits + 145},
        {15, k_times_bits + 232},        {23, k_times_bits + 290},        {21, k_times_bits + 377},        {7, k_times_bits + 464},
        {9, k_times_bits + 493},        {9, k_times_bits + 551},        {12, k_times_bits + 609},        {20, k_times_bits + 667},
        {8, k_times_bits + 754},        {8, k_times_bits + 783},        {8, k_times_bits + 812},        {8, k_times_bits + 841},
        {15, k_times_bits + 870},        {15, k_times_bits + 928},        {15, k_times_bits + 986},        {15, k_times_bits + 1044},
        {15, k_times_bits + 1102},        {15, k_times_bits + 1160},        {15, k_times_bits + 1218},        {15, k_times_bits + 1276},
        {15, k_times_bits + 1334},        {15, k_times_bits + 1392},        {8, k_times_bits + 1450},        {8, k_times_bits + 1479},
        {20, k_times_bits + 1508},        {20, k_times_bits + 1595},        {20, k_times_bits + 1682},        {13, k_times_bits + 1769},
        {24, k_times_bits + 1827},        {17, k_times_bits + 1914},        {18, k_times_bits + 2001},        {18, k_times_bits + 2088},
        {19, k_times_bits + 2175},        {18, k_times_bits + 2262},        {17, k_times_bits + 2349},        {19, k_times_bits + 2436},
        {21, k_times_bits + 2523},        {9, k_times_bits + 2610},        {10, k_times_bits + 2668},        {18, k_times_bits + 2726},
        {16, k_times_bits + 2813},        {25, k_times_bits + 2871},        {21, k_times_bits + 2987},        {20, k_times_bits + 3074},
        {16, k_times_bits + 3161},        {20, k_times_bits + 3219},        {18, k_times_bits + 3306},        {16, k_times_bits + 3393},
        {16, k_times_bits + 3451},        {20, k_times_bits + 3509},        {17, k_times_bits + 3596},        {25, k_times_bits + 3683},
        {17, k_times_bits + 3799},        {16, k_times_bits + 3886},        {17, k_times_bits + 3944},        {9, k_times_bits + 4031},
        {8, k_times_bits + 4089},        {9, k_times_bits + 4118},        {20, k_times_bits + 4176},        {12, k_times_bits + 4263},
        {12, k_times_bits + 4321},        {14, k_times_bits + 4379},        {15, k_times_bits + 4437},        {13, k_times_bits + 4495},
        {15, k_times_bits + 4553},        {14, k_times_bits + 4611},        {9, k_times_bits + 4669},        {15, k_times_bits + 4727},
        {15, k_times_bits + 4785},        {8, k_times_bits + 4843},        {7, k_times_bits + 4872},        {15, k_times_bits + 4901},
        {8, k_times_bits + 4959},        {23, k_times_bits + 4988},        {15, k_times_bits + 5075},        {14, k_times_bits + 5133},
        {15, k_times_bits + 5191},        {15, k_times_bits + 5249},        {11, k_times_bits + 5307},        {12, k_times_bits + 5365},
        {10, k_times_bits + 5423},        {15, k_times_bits + 5481},        {14, k_times_bits + 5539},        {21, k_times_bits + 5597},
        {14, k_times_bits + 5684},        {14, k_times_bits + 5742},        {13, k_times_bits + 5800},        {15, k_times_bits + 5858},
        {8, k_times_bits + 5916},        {15, k_times_bits + 5945},        {20, k_times_bits + 6003},    }}},
    {"DejaVuSans-Bold", 29, 23, {
        {8, k_detection_bits + 0},        {11, k_detection_bits + 29},        {12, k_detection_bits + 87},        {20, k_detection_bits + 145},
        {17, k_detection_bits + 232},        {24, k_detection_bits + 319},        {21, k_detection_bits + 406},        {7, k_detection_bits + 493},
        {11, k_detection_bits + 522},        {11, k_detection_bits + 580},        {13, k_detection_bits + 638},        {20, k_detection_bits + 696},
        {9, k_detection_bits + 783},        {10, k_detection_bits + 841},        {9, k_detection_bits + 899},        {9, k_detection_bits + 957},
        {17, k_detection_bits + 1015},        {17, k_detection_bits + 1102},        {17, k_detection_bits + 1189},        {17, k_detection_bits + 1276},
        {17, k_detection_bits + 1363},        {17, k_detection_bits + 1450},        {17, k_detection_bits + 1537},        {17, k_detection_bits + 1624},
        {17, k_detection_bits + 1711},        {17, k_detection_bits + 1798},        {10, k_detection_bits + 1885},        {10, k_detection_bits + 1943},
        {20, k_detection_bits + 2001},        {20, k_detection_bits + 2088},        {20, k_detection_bits + 2175},        {14, k_detection_bits + 2262},
        {24, k_detection_bits + 2320},        {19, k_detection_bits + 2407},        {18, k_detection_bits + 2494},        {18, k_detection_bits + 2581},
        {20, k_detection_bits + 2668},        {16, k_detection_bits + 2755},        {16, k_detection_bits + 2813},        {20, k_detection_bits + 2871},
        {20, k_detection_bits + 2958},        {9, k_detection_bits + 3045},        {9, k_detection_bits + 3103},        {19, k_detection_bits + 3161},
        {15, k_detection_bits + 3248},        {24, k_detection_bits + 3306},        {20, k_detection_bits + 3393},        {20, k_detection_bits + 3480},
        {18, k_detection_bits + 3567},        {20, k_detection_bits + 3654},        {18, k_detection_bits + 3741},        {17, k_detection_bits + 3828},
        {16, k_detection_bits + 3915},        {19, k_detection_bits + 3973},        {19, k_detection_bits + 4060},        {26, k_detection_bits + 4147},
        {18, k_detection_bits + 4263},        {17, k_detection_bits + 4350},        {17, k_detection_bits + 4437},        {11, k_detection_bits + 4524},
        {9, k_detection_bits + 4582},        {11, k_detection_bits + 4640},        {20, k_detection_bits + 4698},        {12, k_detection_bits + 4785},
        {12, k_detection_bits + 4843},        {16, k_detection_bits + 4901},        {17, k_detection_bits + 4959},        {14, k_detection_bits + 5046},
        {17, k_detection_bits + 5104},        {16, k_detection_bits + 5191},        {10, k_detection_bits + 5249},        {17, k_detection_bits + 5307},
        {17, k_detection_bits + 5394},        {8, k_detection_bits + 5481},        {8, k_detection_bits + 5510},        {16, k_detection_bits + 5539},
        {8, k_detection_bits + 5597},        {25, k_detection_bits + 5626},        {17, k_detection_bits + 5742},        {16, k_detection_bits + 5829},
        {17, k_detection_bits + 5887},        {17, k_detection_bits + 5974},        {12, k_detection_bits + 6061},        {14, k_detection_bits + 6119},
        {11, k_detection_bits + 6177},        {17, k_detection_bits + 6235},        {16, k_detection_bits + 6322},        {22, k_detection_bits + 6380},
        {15, k_detection_bits + 6467},        {16, k_detection_bits + 6525},        {14, k_detection_bits + 6583},        {17, k_detection_bits + 6641},
        {9, k_detection_bits + 6728},        {17, k_detection_bits + 6786},        {20, k_detection_bits + 6873},    }}},
};

inline constexpr int kFontRoman = 0;
inline constexpr int kFontCourier = 1;
inline constexpr int kFontTimes = 2;
inline constexpr int kFontDetection = 3;

}  // namespace dp::fontdata
