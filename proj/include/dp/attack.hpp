#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp/common.hpp"
#include "dp/font.hpp"
#include "dp/image.hpp"

// Typographic attack synthesis: render a wrong class label onto an image
// (whole image for classification, per bounding box for detection). Every
// sampled choice comes from a counter-based stream keyed by the record seed,
// so a record fully determines its output image.

namespace dp {

enum class AttackFont { roman = 0, courier = 1, times = 2, detection = 3 };

enum class InkColor { red = 0, green, blue, cyan, magenta, yellow, white, black };

inline Rgb ink_rgb(InkColor c) {
    static constexpr Rgb table[8] = {{255, 0, 0},   {0, 255, 0},   {0, 0, 255},
                                     {0, 255, 255}, {255, 0, 255}, {255, 255, 0},
                                     {255, 255, 255}, {0, 0, 0}};
    return table[int(c)];
}

inline const char* font_name(AttackFont f) {
    return fontops::font(int(f)).name;
}

inline const char* to_string(AttackFont f) {
    switch (f) {
        case AttackFont::roman: return "roman";
        case AttackFont::courier: return "courier";
        case AttackFont::times: return "times";
        case AttackFont::detection: return "detection";
    }
    return "?";
}

inline const char* to_string(InkColor c) {
    static constexpr const char* names[8] = {"red",     "green",  "blue",  "cyan",
                                             "magenta", "yellow", "white", "black"};
    return names[int(c)];
}

inline AttackFont attack_font_from_string(const std::string& s) {
    for (int i = 0; i < 4; ++i)
        if (s == to_string(AttackFont(i))) return AttackFont(i);
    fail(ErrorKind::parse, "unknown font name: " + s);
}

inline InkColor ink_color_from_string(const std::string& s) {
    for (int i = 0; i < 8; ++i)
        if (s == to_string(InkColor(i))) return InkColor(i);
    fail(ErrorKind::parse, "unknown color name: " + s);
}

struct Box {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // half-open [x0,x1) x [y0,y1)
    int width() const { return x1 - x0; }
    int height() const { return y1 - y0; }
};

struct RenderSpec {
    AttackFont font = AttackFont::roman;
    int size_pt = 0;
    InkColor color = InkColor::red;
    InkColor shadow_color = InkColor::black;
    int x = 0, y = 0;  // top-left anchor of the text cell box
    std::string text;
    uint64_t seed = 0;

    bool operator==(const RenderSpec&) const = default;
};

struct AttackRecord {
    std::string source_image;  // path or id of the clean image
    int true_class = -1;
    int attack_class = -1;
    RenderSpec spec;
    std::string output_image;
    std::optional<Box> box;  // detection only
    bool skipped = false;    // detection box too small for any text

    bool operator==(const AttackRecord&) const = default;
};

inline constexpr int kMinClassifySizePt = 20;
inline constexpr int kMaxClassifySizePt = 40;
inline constexpr int kMinDetectionSizePt = 8;
inline constexpr int kShadowMarginPx = 1;

namespace detail {

inline int sample_excluding(Rng& rng, int n, int excluded) {
    int v = int(rng.next_int(0, n - 2));
    return v >= excluded ? v + 1 : v;
}

// Anchor range so the text cell plus the 1 px shadow stays inside
// [rx0, rx1) x [ry0, ry1). Returns false when it cannot fit.
inline bool anchor_range(int rx0, int ry0, int rx1, int ry1, int tw, int th, Box& out) {
    out.x0 = rx0 + kShadowMarginPx;
    out.y0 = ry0 + kShadowMarginPx;
    out.x1 = rx1 - kShadowMarginPx - tw;
    out.y1 = ry1 - kShadowMarginPx - th;
    return out.x1 >= out.x0 && out.y1 >= out.y0;
}

}  // namespace detail

inline void render_attack_text(Image& img, const RenderSpec& spec) {
    fontops::draw_text(img, spec.x, spec.y, spec.text, int(spec.font), spec.size_pt,
                       ink_rgb(spec.color), ink_rgb(spec.shadow_color));
}

// Whole-image attack for classification. Font uniform over {roman, courier,
// times}, size uniform in [20, 40] pt, color uniform over the 8 inks, shadow
// uniform over the remaining 7, anchor uniform over every position that keeps
// the whole rendered text (and its shadow) inside the image. When the text is
// too wide at the sampled size, the size is re-sampled downward; a render
// error is raised only if it cannot fit at 20 pt.
inline std::pair<AttackRecord, Image> synth_classification_attack(
    const Image& image, int true_class, const std::vector<std::string>& class_names,
    uint64_t seed) {
    int n = int(class_names.size());
    if (n < 2) fail(ErrorKind::input, "synth_classification_attack: need at least 2 classes");
    if (true_class < 0 || true_class >= n)
        fail(ErrorKind::index, "synth_classification_attack: true_class out of range");

    Rng rng(seed);
    RenderSpec spec;
    spec.seed = seed;
    int attack_class = detail::sample_excluding(rng, n, true_class);
    spec.text = class_names[size_t(attack_class)];
    spec.font = AttackFont(rng.next_int(0, 2));
    spec.size_pt = int(rng.next_int(kMinClassifySizePt, kMaxClassifySizePt));
    int color = int(rng.next_int(0, 7));
    spec.color = InkColor(color);
    spec.shadow_color = InkColor(detail::sample_excluding(rng, 8, color));

    Box range;
    while (true) {
        int tw = fontops::text_width(int(spec.font), spec.text, spec.size_pt);
        int th = fontops::text_height(int(spec.font), spec.size_pt);
        if (detail::anchor_range(0, 0, image.width, image.height, tw, th, range)) break;
        if (spec.size_pt <= kMinClassifySizePt)
            fail(ErrorKind::render, "text \"" + spec.text + "\" does not fit at " +
                                        std::to_string(kMinClassifySizePt) + " pt");
        spec.size_pt = int(rng.next_int(kMinClassifySizePt, spec.size_pt - 1));
    }
    spec.x = int(rng.next_int(range.x0, range.x1));
    spec.y = int(rng.next_int(range.y0, range.y1));

    Image out = image;
    render_attack_text(out, spec);

    AttackRecord rec;
    rec.true_class = true_class;
    rec.attack_class = attack_class;
    rec.spec = spec;
    return {std::move(rec), std::move(out)};
}

// Per-box attack for detection. One text per box in the fixed detection
// font; the size is the largest one whose rendered width stays below
// 0.8 x box width and whose cell height fits the box. Boxes too small for
// any text at the minimum size are skipped and flagged.
inline std::pair<std::vector<AttackRecord>, Image> synth_detection_attack(
    const Image& image, const std::vector<std::pair<int, Box>>& boxes,
    const std::vector<std::string>& class_names, uint64_t seed) {
    int n = int(class_names.size());
    if (n < 2) fail(ErrorKind::input, "synth_detection_attack: need at least 2 classes");

    Image out = image;
    std::vector<AttackRecord> records;
    records.reserve(boxes.size());
    for (size_t bi = 0; bi < boxes.size(); ++bi) {
        const auto& [true_class, box] = boxes[bi];
        if (true_class < 0 || true_class >= n)
            fail(ErrorKind::index, "synth_detection_attack: class index out of range");
        if (box.x0 < 0 || box.y0 < 0 || box.x1 > image.width || box.y1 > image.height ||
            box.width() <= 0 || box.height() <= 0)
            fail(ErrorKind::input, "synth_detection_attack: box outside image");

        Rng rng(hash64(seed, bi));
        AttackRecord rec;
        rec.true_class = true_class;
        rec.box = box;
        rec.spec.seed = hash64(seed, bi);
        rec.spec.font = AttackFont::detection;
        rec.attack_class = detail::sample_excluding(rng, n, true_class);
        rec.spec.text = class_names[size_t(rec.attack_class)];
        int color = int(rng.next_int(0, 7));
        rec.spec.color = InkColor(color);
        rec.spec.shadow_color = InkColor(detail::sample_excluding(rng, 8, color));

        // Largest size with width < 0.8 * box width and height inside the box.
        int best = 0;
        Box range;
        for (int s = kMinDetectionSizePt;; ++s) {
            int tw = fontops::text_width(int(AttackFont::detection), rec.spec.text, s);
            int th = fontops::text_height(int(AttackFont::detection), s);
            bool fits = 10 * tw < 8 * box.width() &&
                        detail::anchor_range(box.x0, box.y0, box.x1, box.y1, tw, th, range);
            if (!fits) break;
            best = s;
        }
        if (best < kMinDetectionSizePt) {
            rec.skipped = true;
            records.push_back(std::move(rec));
            continue;
        }
        rec.spec.size_pt = best;
        int tw = fontops::text_width(int(AttackFont::detection), rec.spec.text, best);
        int th = fontops::text_height(int(AttackFont::detection), best);
        detail::anchor_range(box.x0, box.y0, box.x1, box.y1, tw, th, range);
        rec.spec.x = int(rng.next_int(range.x0, range.x1));
        rec.spec.y = int(rng.next_int(range.y0, range.y1));
        render_attack_text(out, rec.spec);
        records.push_back(std::move(rec));
    }
    return {std::move(records), std::move(out)};
}

}  // namespace dp
