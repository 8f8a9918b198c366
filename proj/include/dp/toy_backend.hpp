#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "dp/font.hpp"
#include "dp/gateway.hpp"

// Deterministic toy dual encoder. All weights are generated from the model
// id's seed, so two loads of the same id are bit-identical and no files are
// required. The design goal is to reproduce the *phenomena* the real model
// shows at desk scale:
//
//   - the text encoder is a gated character-level network, differentiable
//     through the tape, position-aware via a positional table and a decaying
//     context state (so where a prefix is inserted matters);
//   - the image encoder combines a smooth "visual" channel (block means
//     through a small MLP) with a "reading" channel that detects rendered
//     glyphs, reassembles them into words and adds the text feature of what
//     it read — which is exactly how typographic attacks fool the model.

namespace dp {

namespace toyvocab {

inline constexpr int kBos = 0;
inline constexpr int kEos = 1;
inline constexpr int kSpace = 2;
inline constexpr const char* kPunct = ".,'-:;!?/&()";

inline int vocab_size() { return 3 + 26 + 10 + int(std::char_traits<char>::length(kPunct)) + 1; }

inline int char_id(char c) {
    c = char(std::tolower(static_cast<unsigned char>(c)));
    if (c == ' ') return kSpace;
    if (c >= 'a' && c <= 'z') return 3 + (c - 'a');
    if (c >= '0' && c <= '9') return 3 + 26 + (c - '0');
    const char* p = std::strchr(kPunct, c);
    if (p && c != '\0') return 3 + 26 + 10 + int(p - kPunct);
    return vocab_size() - 1;  // UNK
}

}  // namespace toyvocab

class ToyModel final : public Model {
public:
    // Architecture constants of the toy family.
    static constexpr int kD = 16;
    static constexpr int kM = 8;
    static constexpr int kContext = 77;
    static constexpr double kTau = 0.07;
    static constexpr int kHidden = 48;   // first text layer / context width
    static constexpr int kHidden2 = 24;  // second text layer
    static constexpr int kVisHidden = 32;
    static constexpr int kImageSize = 224;
    static constexpr int kBlock = 16;  // visual downsampling block
    static constexpr double kAlpha = 0.5;   // context state decay
    static constexpr double kReadGain = 1.0;

    explicit ToyModel(const std::string& model_id) {
        info_.model_id = model_id;
        info_.backend = Backend::toy;
        info_.d = kD;
        info_.m = kM;
        info_.temperature = kTau;
        info_.context_length = kContext;
        uint64_t seed = fnv1a(model_id);
        embedding = gaussian_matrix(kD, toyvocab::vocab_size(), seed, "embedding", 1.0);
        positional = gaussian_matrix(kD, kContext, seed, "positional", 0.3);
        w1 = gaussian_matrix(kHidden, kD, seed, "w1", 1.2 / std::sqrt(double(kD)));
        b1 = gaussian_matrix(kHidden, 1, seed, "b1", 0.2);
        gate_w = gaussian_matrix(kHidden, kHidden, seed, "gate_w",
                                 1.6 / std::sqrt(double(kHidden)));
        gate_b = gaussian_matrix(kHidden, 1, seed, "gate_b", 0.2);
        w2 = gaussian_matrix(kHidden2, kHidden, seed, "w2", 1.4 / std::sqrt(double(kHidden)));
        b2 = gaussian_matrix(kHidden2, 1, seed, "b2", 0.2);
        w3 = gaussian_matrix(kM, kHidden2, seed, "w3", 1.4 / std::sqrt(double(kHidden2)));
        int blocks = (kImageSize / kBlock) * (kImageSize / kBlock) * 3;
        vis_w = gaussian_matrix(kVisHidden, blocks, seed, "vis_w", 5.0 / std::sqrt(double(blocks)));
        vis_b = gaussian_matrix(kVisHidden, 1, seed, "vis_b", 0.3);
        vis_proj = gaussian_matrix(kM, kVisHidden, seed, "vis_proj",
                                   1.0 / std::sqrt(double(kVisHidden)));
        build_glyph_refs();
    }

    // ---- model_gateway operations ------------------------------------------

    TokenSequence tokenize(const PromptTemplate& tmpl, const std::string& class_name) const override {
        if (class_name.empty()) fail(ErrorKind::input, "tokenize: empty class name");
        TokenSequence t;
        t.ids.push_back(toyvocab::kBos);
        for (char c : tmpl.prefix()) t.ids.push_back(toyvocab::char_id(c));
        t.span_start = int(t.ids.size());
        for (char c : class_name) t.ids.push_back(toyvocab::char_id(c));
        t.span_end = int(t.ids.size());
        for (char c : tmpl.suffix()) t.ids.push_back(toyvocab::char_id(c));
        t.ids.push_back(toyvocab::kEos);
        t.eot_index = int(t.ids.size()) - 1;
        check_length(t.length());
        return t;
    }

    ad::Mat embed_tokens(const TokenSequence& t) const override {
        ad::Mat e(kD, t.length());
        for (int p = 0; p < t.length(); ++p) {
            int id = t.ids[size_t(p)];
            if (id < 0 || id >= int(embedding.cols()))
                fail(ErrorKind::index, "embed_tokens: token id " + std::to_string(id) +
                                           " outside vocabulary");
            e.col(p) = embedding.col(id);
        }
        return e;
    }

    ad::NodeId text_graph(ad::Tape& tape, ad::NodeId emb,
                          const EmbeddingSequence& meta) const override {
        (void)meta;
        int L = int(tape.value(emb).cols());
        check_length(L);
        ad::NodeId z = tape.add(emb, tape.constant(positional.leftCols(L)));
        ad::NodeId act = tape.add_colvec(tape.matmul(tape.constant(w1), z), tape.constant(b1));
        ad::NodeId ctx = tape.constant(ad::Mat::Zero(kHidden, 1));
        ad::NodeId gw = tape.constant(gate_w);
        ad::NodeId gb = tape.constant(gate_b);
        ad::NodeId acc = -1;
        for (int p = 0; p < L; ++p) {
            ad::NodeId gate = tape.sig01(tape.add(tape.matmul(gw, ctx), gb));
            ad::NodeId a_p = tape.slice_cols(act, p, 1);
            ad::NodeId phi = tape.cmul(tape.isru(a_p), gate);
            acc = (p == 0) ? phi : tape.add(acc, phi);
            ctx = tape.add(tape.scale(ctx, kAlpha), tape.scale(a_p, 1.0 - kAlpha));
        }
        ad::NodeId pooled = tape.scale(acc, 1.0 / std::sqrt(double(L)));
        ad::NodeId h2 = tape.isru(
            tape.add(tape.matmul(tape.constant(w2), pooled), tape.constant(b2)));
        return tape.matmul(tape.constant(w3), h2);
    }

    // Native text path: plain forward mirroring text_graph expression for
    // expression, so both paths produce identical features.
    ad::Vec encode_text(const std::string& text) const override {
        std::vector<int> ids;
        ids.push_back(toyvocab::kBos);
        for (char c : text) ids.push_back(toyvocab::char_id(c));
        ids.push_back(toyvocab::kEos);
        check_length(int(ids.size()));
        int L = int(ids.size());
        ad::Mat e(kD, L);
        for (int p = 0; p < L; ++p) e.col(p) = embedding.col(ids[size_t(p)]);
        return forward_text(e);
    }

    ad::Vec encode_image(const Image& image) const override {
        if (image.width != kImageSize || image.height != kImageSize)
            fail(ErrorKind::shape, "encode_image: expected " + std::to_string(kImageSize) + "x" +
                                       std::to_string(kImageSize) + " input, got " +
                                       std::to_string(image.width) + "x" +
                                       std::to_string(image.height));
        ad::Vec x = visual_feature(image);
        double n = x.norm();
        if (n > 0) x /= n;
        for (const std::string& phrase : read_phrases(image)) {
            ad::Vec w = encode_text(reading_prompt(phrase));
            double wn = w.norm();
            if (wn > 0) x += kReadGain * (w / wn);
        }
        return x;
    }

    uint64_t state_digest() const override {
        Digest dg;
        for (const ad::Mat* m :
             {&embedding, &positional, &w1, &b1, &gate_w, &gate_b, &w2, &b2, &w3, &vis_w, &vis_b,
              &vis_proj}) {
            dg.update_matrix(*m);
        }
        dg.update_u64(uint64_t(info_.d));
        dg.update_u64(uint64_t(info_.m));
        double tau = info_.temperature;
        dg.update(&tau, sizeof tau);
        return dg.value();
    }

    // ---- toy-specific helpers (used by the toy benchmark generator) --------

    // Visual channel only (no reading head), for dataset construction.
    ad::Vec visual_feature(const Image& image) const {
        ad::Vec u = block_means(image);
        ad::Vec h = isru_vec(vis_w * u + vis_b.col(0));
        return vis_proj * h;
    }

    // Constructs a smooth block image whose visual feature points along
    // `target`. Inverts the visual MLP layer by layer (least squares through
    // the projection, exact isru inverse, least squares through the first
    // layer), shrinking the target until the blocks stay in the legal pixel
    // band. Band [40, 215] keeps clean pixels away from the pure ink colors.
    Image visual_preimage(const ad::Vec& target) const {
        ad::Vec t = target.normalized();
        Eigen::LDLT<ad::Mat> proj_solver((vis_proj * vis_proj.transpose()).eval());
        Eigen::LDLT<ad::Mat> in_solver((vis_w * vis_w.transpose()).eval());
        ad::Vec y = vis_proj.transpose() * proj_solver.solve(t);
        y *= 0.80 / y.cwiseAbs().maxCoeff();
        ad::Vec u;
        for (int iter = 0; iter < 60; ++iter) {
            ad::Vec a = (y.array() / (1.0 - y.array().square()).sqrt()).matrix();  // isru^-1
            u = vis_w.transpose() * in_solver.solve((a - vis_b.col(0)).eval());
            if (u.cwiseAbs().maxCoeff() <= 0.34) break;
            y *= 0.85;
        }
        int n = kImageSize / kBlock;
        Image img(kImageSize, kImageSize);
        for (int by = 0; by < n; ++by)
            for (int bx = 0; bx < n; ++bx)
                for (int c = 0; c < 3; ++c) {
                    double v = u[(size_t(by) * n + bx) * 3 + c];
                    int px = int(std::lround(127.5 + 255.0 * std::clamp(v, -0.34, 0.34)));
                    px = std::clamp(px, 40, 215);
                    for (int y2 = by * kBlock; y2 < (by + 1) * kBlock; ++y2)
                        for (int x2 = bx * kBlock; x2 < (bx + 1) * kBlock; ++x2) {
                            uint8_t* p = img.px(x2, y2);
                            p[c] = uint8_t(px);
                        }
                }
        return img;
    }

    static std::string reading_prompt(const std::string& phrase) {
        return "a photo of a " + phrase + ".";
    }

    // Rendered-text recovery: pure-ink masks -> connected components ->
    // per-glyph classification against the embedded font bitmaps -> line and
    // word assembly. Public so tests can probe it directly.
    std::vector<std::string> read_phrases(const Image& image) const {
        struct Comp {
            int color;
            int x0, y0, x1, y1;  // inclusive
            int area;
            char ch = 0;
            double score = 0;
        };
        const int W = image.width, H = image.height;
        std::vector<int> label(size_t(W) * H, -1);
        std::vector<int> comp_color_map;
        std::vector<Comp> comps;

        auto pure_color_at = [&](int x, int y) -> int {
            const uint8_t* p = image.px(x, y);
            for (int c = 0; c < 8; ++c) {
                Rgb ink = ink_rgb(InkColor(c));
                if (std::abs(int(p[0]) - ink.r) <= 24 && std::abs(int(p[1]) - ink.g) <= 24 &&
                    std::abs(int(p[2]) - ink.b) <= 24)
                    return c;
            }
            return -1;
        };
        std::vector<int> color_of(size_t(W) * H);
        for (int y = 0; y < H; ++y)
            for (int x = 0; x < W; ++x) color_of[size_t(y) * W + x] = pure_color_at(x, y);

        std::vector<size_t> stack;
        for (int y = 0; y < H; ++y)
            for (int x = 0; x < W; ++x) {
                size_t idx = size_t(y) * W + x;
                if (color_of[idx] < 0 || label[idx] >= 0) continue;
                int id = int(comps.size());
                Comp c{color_of[idx], x, y, x, y, 0};
                stack.assign(1, idx);
                label[idx] = id;
                while (!stack.empty()) {
                    size_t cur = stack.back();
                    stack.pop_back();
                    int cx = int(cur % W), cy = int(cur / W);
                    ++c.area;
                    c.x0 = std::min(c.x0, cx);
                    c.x1 = std::max(c.x1, cx);
                    c.y0 = std::min(c.y0, cy);
                    c.y1 = std::max(c.y1, cy);
                    const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
                    for (int k = 0; k < 4; ++k) {
                        int nx = cx + dx[k], ny = cy + dy[k];
                        if (nx < 0 || ny < 0 || nx >= W || ny >= H) continue;
                        size_t nidx = size_t(ny) * W + nx;
                        if (label[nidx] < 0 && color_of[nidx] == c.color) {
                            label[nidx] = id;
                            stack.push_back(nidx);
                        }
                    }
                }
                comps.push_back(c);
            }

        // Merge vertically stacked parts of one glyph (i/j dots, colons).
        std::vector<int> parent(comps.size());
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) {
            while (parent[size_t(a)] != a) a = parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
            return a;
        };
        for (size_t i = 0; i < comps.size(); ++i)
            for (size_t j = i + 1; j < comps.size(); ++j) {
                const Comp &a = comps[i], &b = comps[j];
                if (a.color != b.color) continue;
                int ox = std::min(a.x1, b.x1) - std::max(a.x0, b.x0) + 1;
                int minw = std::min(a.x1 - a.x0, b.x1 - b.x0) + 1;
                int gap = std::max(a.y0, b.y0) - std::min(a.y1, b.y1) - 1;
                int maxh = std::max(a.y1 - a.y0, b.y1 - b.y0) + 1;
                if (ox * 2 >= minw && gap <= maxh) parent[size_t(find(int(i)))] = find(int(j));
            }
        std::map<int, Comp> merged;
        std::vector<int> root_of(comps.size());
        for (size_t i = 0; i < comps.size(); ++i) {
            int r = find(int(i));
            root_of[i] = r;
            auto it = merged.find(r);
            if (it == merged.end()) {
                merged.emplace(r, comps[i]);
            } else {
                Comp& m = it->second;
                m.x0 = std::min(m.x0, comps[i].x0);
                m.x1 = std::max(m.x1, comps[i].x1);
                m.y0 = std::min(m.y0, comps[i].y0);
                m.y1 = std::max(m.y1, comps[i].y1);
                m.area += comps[i].area;
            }
        }

        std::vector<Comp> glyphs;
        for (auto& [root, c] : merged) {
            if (c.area < 6) continue;
            // Shadow rings enclose the glyph they outline: inside their box
            // the other ink dominates their own area. Drop those.
            int other = 0;
            for (int y = c.y0; y <= c.y1; ++y)
                for (int x = c.x0; x <= c.x1; ++x) {
                    int col = color_of[size_t(y) * W + x];
                    if (col >= 0 && col != c.color) ++other;
                }
            if (other >= int(0.8 * c.area)) continue;
            auto mask = fontops::downsample_mask_8x8(
                c.x0, c.y0, c.x1 - c.x0 + 1, c.y1 - c.y0 + 1, [&](int x, int y) {
                    size_t idx = size_t(y) * W + x;
                    return label[idx] >= 0 && root_of[size_t(label[idx])] == root &&
                           color_of[idx] == c.color;
                });
            double best = 0;
            char best_ch = 0;
            for (const auto& [ch, ref] : glyph_refs) {
                double dot = 0, nm = 0, nr = 0;
                for (int k = 0; k < 64; ++k) {
                    dot += mask[size_t(k)] * ref[size_t(k)];
                    nm += mask[size_t(k)] * mask[size_t(k)];
                    nr += ref[size_t(k)] * ref[size_t(k)];
                }
                double score = (nm > 0 && nr > 0) ? dot / std::sqrt(nm * nr) : 0.0;
                if (score > best) {
                    best = score;
                    best_ch = ch;
                }
            }
            if (best >= 0.80 && best_ch != 0) {
                c.ch = best_ch;
                c.score = best;
                glyphs.push_back(c);
            }
        }

        // Assemble lines (by vertical overlap) and words (by horizontal gap).
        std::sort(glyphs.begin(), glyphs.end(), [](const Comp& a, const Comp& b) {
            return a.y0 != b.y0 ? a.y0 < b.y0 : a.x0 < b.x0;
        });
        std::vector<std::vector<Comp>> lines;
        for (const Comp& g : glyphs) {
            bool placed = false;
            for (auto& line : lines) {
                const Comp& ref = line.back();
                int overlap = std::min(g.y1, ref.y1) - std::max(g.y0, ref.y0) + 1;
                int minh = std::min(g.y1 - g.y0, ref.y1 - ref.y0) + 1;
                if (overlap * 2 >= minh) {
                    line.push_back(g);
                    placed = true;
                    break;
                }
            }
            if (!placed) lines.push_back({g});
        }
        std::vector<std::string> phrases;
        for (auto& line : lines) {
            std::sort(line.begin(), line.end(),
                      [](const Comp& a, const Comp& b) { return a.x0 < b.x0; });
            int line_h = 0;
            for (const Comp& g : line) line_h = std::max(line_h, g.y1 - g.y0 + 1);
            std::string phrase(1, line[0].ch);
            for (size_t i = 1; i < line.size(); ++i) {
                int gap = line[i].x0 - line[i - 1].x1 - 1;
                if (gap > int(0.38 * line_h)) phrase += ' ';
                phrase += line[i].ch;
            }
            phrases.push_back(std::move(phrase));
        }
        return phrases;
    }

    // Frozen parameters, public for white-box tests.
    ad::Mat embedding, positional;
    ad::Mat w1, b1, gate_w, gate_b, w2, b2, w3;
    ad::Mat vis_w, vis_b, vis_proj;

private:
    static ad::Mat gaussian_matrix(int rows, int cols, uint64_t seed, std::string_view purpose,
                                   double std_dev) {
        Rng rng(seed, purpose);
        ad::Mat m(rows, cols);
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) m(r, c) = std_dev * rng.next_gaussian();
        return m;
    }

    static ad::Vec isru_vec(const ad::Vec& x) {
        return (x.array() / (1.0 + x.array().square()).sqrt()).matrix();
    }

    static ad::Vec sig01_vec(const ad::Vec& x) {
        return (0.5 + 0.5 * (x.array() / (1.0 + x.array().square()).sqrt())).matrix();
    }

    // Mirrors text_graph exactly; see the invariant test for path equality.
    ad::Vec forward_text(const ad::Mat& e) const {
        int L = int(e.cols());
        ad::Mat z = e + positional.leftCols(L);
        ad::Mat act = (w1 * z).colwise() + ad::Vec(b1.col(0));
        ad::Vec ctx = ad::Vec::Zero(kHidden);
        ad::Vec acc;
        for (int p = 0; p < L; ++p) {
            ad::Vec gate = sig01_vec(gate_w * ctx + gate_b.col(0));
            ad::Vec phi = isru_vec(act.col(p)).cwiseProduct(gate);
            acc = (p == 0) ? phi : ad::Vec(acc + phi);
            ctx = kAlpha * ctx + (1.0 - kAlpha) * act.col(p);
        }
        ad::Vec pooled = acc * (1.0 / std::sqrt(double(L)));
        ad::Vec h2 = isru_vec(w2 * pooled + b2.col(0));
        return w3 * h2;
    }

    ad::Vec block_means(const Image& image) const {
        int n = kImageSize / kBlock;
        ad::Vec u(n * n * 3);
        for (int by = 0; by < n; ++by)
            for (int bx = 0; bx < n; ++bx) {
                long sum[3] = {0, 0, 0};
                for (int y = by * kBlock; y < (by + 1) * kBlock; ++y)
                    for (int x = bx * kBlock; x < (bx + 1) * kBlock; ++x) {
                        const uint8_t* p = image.px(x, y);
                        for (int c = 0; c < 3; ++c) sum[c] += p[c];
                    }
                for (int c = 0; c < 3; ++c)
                    u[(size_t(by) * n + bx) * 3 + c] =
                        double(sum[c]) / (kBlock * kBlock) / 255.0 - 0.5;
            }
        return u;
    }

    void build_glyph_refs() {
        const std::string chars = "abcdefghijklmnopqrstuvwxyz0123456789";
        for (int font_id = 0; font_id < 4; ++font_id)
            for (char ch : chars) {
                auto mask = fontops::glyph_mask_8x8(font_id, ch);
                double total = 0;
                for (double v : mask) total += v;
                if (total > 0) glyph_refs.emplace_back(ch, mask);
            }
    }

    std::vector<std::pair<char, std::array<double, 64>>> glyph_refs;
};

}  // namespace dp
