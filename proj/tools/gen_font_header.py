#!/usr/bin/env python3
"""Regenerate include/dp/font_data.hpp from the bundled DejaVu typefaces.

Rasterizes printable ASCII (32..126) for each typeface at a reference pixel
size and emits bit-packed glyph bitmaps as a C++ header. The renderer scales
these bitmaps with nearest-neighbor sampling, so attack images depend only on
the committed header, never on system fonts.

Usage: python3 tools/gen_font_header.py [--out include/dp/font_data.hpp]
"""

import argparse
import os

from PIL import Image, ImageDraw, ImageFont

REF_SIZE = 24  # reference em size in pixels

FONTS = [
    # (enum name, recorded family name, ttf filename)
    ("roman", "DejaVuSans", "DejaVuSans.ttf"),
    ("courier", "DejaVuSansMono", "DejaVuSansMono.ttf"),
    ("times", "DejaVuSerif", "DejaVuSerif.ttf"),
    ("detection", "DejaVuSans-Bold", "DejaVuSans-Bold.ttf"),
]


def find_ttf(name):
    candidates = []
    try:
        import matplotlib

        candidates.append(os.path.join(matplotlib.get_data_path(), "fonts", "ttf", name))
    except ImportError:
        pass
    candidates += [
        os.path.join("/usr/share/fonts/truetype/dejavu", name),
        os.path.join("/usr/share/fonts/TTF", name),
    ]
    for c in candidates:
        if os.path.exists(c):
            return c
    raise FileNotFoundError(name)


def rasterize_font(ttf_path):
    font = ImageFont.truetype(ttf_path, REF_SIZE)
    ascent, descent = font.getmetrics()
    cell_h = ascent + descent
    glyphs = []
    for code in range(32, 127):
        ch = chr(code)
        advance = max(1, round(font.getlength(ch)))
        img = Image.new("L", (advance, cell_h), 0)
        draw = ImageDraw.Draw(img)
        draw.text((0, 0), ch, fill=255, font=font)
        rowbytes = (advance + 7) // 8
        rows = bytearray(rowbytes * cell_h)
        px = img.load()
        for y in range(cell_h):
            for x in range(advance):
                if px[x, y] >= 128:
                    rows[y * rowbytes + x // 8] |= 0x80 >> (x % 8)
        glyphs.append((advance, bytes(rows)))
    return cell_h, ascent, glyphs


def emit(out_path):
    chunks = []
    chunks.append("#pragma once\n\n")
    chunks.append("#include <cstdint>\n\n")
    chunks.append("// Generated by tools/gen_font_header.py from the DejaVu typefaces\n")
    chunks.append("// (Bitstream Vera license; free to embed and redistribute).\n")
    chunks.append("// Reference em size: %d px. Do not edit by hand.\n\n" % REF_SIZE)
    chunks.append("namespace dp::fontdata {\n\n")
    chunks.append("struct GlyphData {\n")
    chunks.append("    uint8_t advance;              // cell width in px at the reference size\n")
    chunks.append("    const uint8_t* rows;          // cell_h rows, MSB-first bit-packed\n")
    chunks.append("};\n\n")
    chunks.append("struct FontData {\n")
    chunks.append("    const char* name;             // recorded in attack manifests\n")
    chunks.append("    int cell_h;                   // glyph cell height in px\n")
    chunks.append("    int ascent;\n")
    chunks.append("    GlyphData glyphs[95];         // ASCII 32..126\n")
    chunks.append("};\n\n")

    font_entries = []
    for enum_name, family, ttf in FONTS:
        cell_h, ascent, glyphs = rasterize_font(find_ttf(ttf))
        blob = b"".join(rows for _, rows in glyphs)
        var = f"k_{enum_name}_bits"
        chunks.append(f"inline constexpr uint8_t {var}[] = {{\n")
        for i in range(0, len(blob), 24):
            row = ",".join(f"0x{b:02x}" for b in blob[i : i + 24])
            chunks.append(f"    {row},\n")
        chunks.append("};\n\n")
        entry = [f'    {{"{family}", {cell_h}, {ascent}, {{\n']
        off = 0
        for idx, (advance, rows) in enumerate(glyphs):
            entry.append(f"        {{{advance}, {var} + {off}}},")
            if idx % 4 == 3:
                entry.append("\n")
            off += len(rows)
        entry.append("    }}},\n")
        font_entries.append("".join(entry))

    chunks.append("inline constexpr FontData kFonts[%d] = {\n" % len(FONTS))
    chunks.extend(font_entries)
    chunks.append("};\n\n")
    chunks.append("inline constexpr int kFontRoman = 0;\n")
    chunks.append("inline constexpr int kFontCourier = 1;\n")
    chunks.append("inline constexpr int kFontTimes = 2;\n")
    chunks.append("inline constexpr int kFontDetection = 3;\n\n")
    chunks.append("}  // namespace dp::fontdata\n")

    with open(out_path, "w") as f:
        f.write("".join(chunks))
    print(f"wrote {out_path}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="include/dp/font_data.hpp")
    args = ap.parse_args()
    emit(args.out)
