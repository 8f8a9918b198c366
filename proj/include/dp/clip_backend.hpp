#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "dp/clip_bpe.hpp"
#include "dp/gateway.hpp"

// Pretrained backend: a CLIP-family dual encoder loaded from a ".dpck"
// checkpoint (see tools/export_clip_checkpoint.py for converting OpenAI or
// HuggingFace weights). The text transformer is built on the tape so the
// feature is differentiable with respect to the input embeddings; the vision
// transformer is a plain forward pass (images are data, not parameters).
//
// Checkpoint layout: "DPCK" magic, u32 version, u64 header length, JSON
// header (dims, temperature, tokenizer, tensor directory), then row-major
// f32 tensor data.

namespace dp {

class ClipModel final : public Model {
public:
    ClipModel(const std::string& model_id, const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) fail(ErrorKind::load, "cannot open checkpoint " + path.string());
        char magic[4];
        in.read(magic, 4);
        if (!in || std::string_view(magic, 4) != "DPCK")
            fail(ErrorKind::parse, "not a DPCK checkpoint: " + path.string());
        uint32_t version = 0;
        uint64_t header_len = 0;
        in.read(reinterpret_cast<char*>(&version), 4);
        in.read(reinterpret_cast<char*>(&header_len), 8);
        if (!in || version != 1)
            fail(ErrorKind::capability,
                 "unsupported checkpoint version " + std::to_string(version));
        std::string header_text(header_len, '\0');
        in.read(header_text.data(), std::streamsize(header_len));
        if (!in) fail(ErrorKind::parse, "truncated checkpoint header: " + path.string());
        nlohmann::json h;
        try {
            h = nlohmann::json::parse(header_text);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::parse, "bad checkpoint header: " + std::string(e.what()));
        }

        if (h.value("family", "clip") != "clip")
            fail(ErrorKind::capability, "unsupported model family: " + h.value("family", "?"));

        info_.model_id = model_id;
        info_.backend = Backend::pretrained;
        info_.m = h.at("embed_dim").get<int>();
        info_.temperature = h.at("temperature").get<double>();
        info_.context_length = h.at("context_length").get<int>();
        text_width_ = h.at("text").at("width").get<int>();
        text_layers_ = h.at("text").at("layers").get<int>();
        text_heads_ = h.at("text").at("heads").get<int>();
        info_.d = text_width_;
        vis_width_ = h.at("vision").at("width").get<int>();
        vis_layers_ = h.at("vision").at("layers").get<int>();
        vis_heads_ = h.at("vision").at("heads").get<int>();
        vis_patch_ = h.at("vision").at("patch").get<int>();
        vis_image_size_ = h.at("vision").at("image_size").get<int>();
        if (h.contains("image_mean"))
            for (int c = 0; c < 3; ++c) image_mean_[c] = h.at("image_mean").at(c).get<double>();
        if (h.contains("image_std"))
            for (int c = 0; c < 3; ++c) image_std_[c] = h.at("image_std").at(c).get<double>();

        if (h.contains("tokenizer")) {
            std::vector<std::string> vocab =
                h.at("tokenizer").at("vocab").get<std::vector<std::string>>();
            std::vector<std::pair<std::string, std::string>> merges;
            for (const auto& m : h.at("tokenizer").at("merges")) {
                merges.emplace_back(m.at(0).get<std::string>(), m.at(1).get<std::string>());
            }
            bpe_ = ClipBpe(std::move(vocab), merges);
        }

        uint64_t data_start = 4 + 4 + 8 + header_len;
        for (const auto& t : h.at("tensors")) {
            std::string name = t.at("name").get<std::string>();
            std::vector<long> shape = t.at("shape").get<std::vector<long>>();
            uint64_t offset = t.at("offset").get<uint64_t>();
            long rows = shape.at(0);
            long cols = shape.size() > 1 ? shape.at(1) : 1;
            in.seekg(std::streamoff(data_start + offset));
            std::vector<float> buf(size_t(rows) * size_t(cols));
            in.read(reinterpret_cast<char*>(buf.data()), std::streamsize(buf.size() * 4));
            if (!in) fail(ErrorKind::parse, "truncated tensor data for " + name);
            ad::Mat m(rows, cols);
            for (long r = 0; r < rows; ++r)  // row-major file order
                for (long c = 0; c < cols; ++c) m(r, c) = double(buf[size_t(r) * cols + c]);
            tensors_.emplace(std::move(name), std::move(m));
        }

        // Required tensors; fails early with the missing name.
        tensor("token_embedding.weight");
        tensor("positional_embedding");
        tensor("text_projection");
        tensor("ln_final.weight");
        for (int i = 0; i < text_layers_; ++i) block_tensors("transformer.resblocks." + std::to_string(i));
        tensor("visual.conv1.weight");
        tensor("visual.class_embedding");
        tensor("visual.positional_embedding");
        tensor("visual.ln_pre.weight");
        tensor("visual.ln_post.weight");
        tensor("visual.proj");
        for (int i = 0; i < vis_layers_; ++i)
            block_tensors("visual.transformer.resblocks." + std::to_string(i));
    }

    TokenSequence tokenize(const PromptTemplate& tmpl, const std::string& class_name) const override {
        if (class_name.empty()) fail(ErrorKind::input, "tokenize: empty class name");
        if (!bpe_.valid())
            fail(ErrorKind::capability, "checkpoint was exported without a tokenizer");
        TokenSequence t;
        t.ids.push_back(bpe_.sot());
        for (int id : bpe_.encode(tmpl.prefix())) t.ids.push_back(id);
        t.span_start = int(t.ids.size());
        for (int id : bpe_.encode(class_name)) t.ids.push_back(id);
        t.span_end = int(t.ids.size());
        if (t.span_end == t.span_start)
            fail(ErrorKind::input, "class name \"" + class_name + "\" produced no tokens");
        for (int id : bpe_.encode(tmpl.suffix())) t.ids.push_back(id);
        t.ids.push_back(bpe_.eot());
        t.eot_index = int(t.ids.size()) - 1;
        check_length(t.length());
        return t;
    }

    ad::Mat embed_tokens(const TokenSequence& t) const override {
        const ad::Mat& table = tensor("token_embedding.weight");  // vocab x width
        ad::Mat e(text_width_, t.length());
        for (int p = 0; p < t.length(); ++p) {
            int id = t.ids[size_t(p)];
            if (id < 0 || id >= table.rows())
                fail(ErrorKind::index,
                     "embed_tokens: token id " + std::to_string(id) + " outside vocabulary");
            e.col(p) = table.row(id).transpose();
        }
        return e;
    }

    ad::NodeId text_graph(ad::Tape& tape, ad::NodeId emb,
                          const EmbeddingSequence& meta) const override {
        int L = int(tape.value(emb).cols());
        check_length(L);
        if (meta.eot_index < 0 || meta.eot_index >= L)
            fail(ErrorKind::shape, "text_graph: sequence has no end sentinel index");
        ad::NodeId x = tape.add(
            emb, tape.constant(tensor("positional_embedding").topRows(L).transpose()));
        ad::Mat mask = ad::Mat::Zero(L, L);  // (key, query); keys after the query are masked
        for (int q = 0; q < L; ++q)
            for (int k = q + 1; k < L; ++k) mask(k, q) = -1e30;
        ad::NodeId mask_node = tape.constant(mask);
        for (int i = 0; i < text_layers_; ++i)
            x = transformer_block(tape, x, "transformer.resblocks." + std::to_string(i),
                                  text_heads_, &mask_node);
        x = layernorm(tape, x, "ln_final");
        ad::NodeId pooled = tape.slice_cols(x, meta.eot_index, 1);
        return tape.matmul(tape.constant(tensor("text_projection").transpose()), pooled);
    }

    ad::Vec encode_text(const std::string& text) const override {
        PromptTemplate whole("<CLS>");
        TokenSequence t = tokenize(whole, text);
        EmbeddingSequence e = embed(t);
        return encode_text_from_embeddings(e);
    }

    ad::Vec encode_image(const Image& image) const override {
        if (image.width != vis_image_size_ || image.height != vis_image_size_)
            fail(ErrorKind::shape, "encode_image: expected " + std::to_string(vis_image_size_) +
                                       "x" + std::to_string(vis_image_size_) + " input");
        int grid = vis_image_size_ / vis_patch_;
        int n_tokens = grid * grid + 1;
        const ad::Mat& conv = tensor("visual.conv1.weight");  // vwidth x 3*patch*patch

        ad::Tape tape;  // reuse the tape ops for a plain forward pass
        ad::Mat tokens(vis_width_, n_tokens);
        tokens.col(0) = tensor("visual.class_embedding").col(0);
        ad::Vec patch_vec(3 * vis_patch_ * vis_patch_);
        for (int gy = 0; gy < grid; ++gy)
            for (int gx = 0; gx < grid; ++gx) {
                long k = 0;
                for (int c = 0; c < 3; ++c)
                    for (int py = 0; py < vis_patch_; ++py)
                        for (int px = 0; px < vis_patch_; ++px) {
                            const uint8_t* p =
                                image.px(gx * vis_patch_ + px, gy * vis_patch_ + py);
                            patch_vec[k++] =
                                (double(p[c]) / 255.0 - image_mean_[c]) / image_std_[c];
                        }
                tokens.col(1 + gy * grid + gx) = conv * patch_vec;
            }
        ad::NodeId x = tape.constant(tokens +
                                     tensor("visual.positional_embedding").transpose());
        x = layernorm(tape, x, "visual.ln_pre");
        for (int i = 0; i < vis_layers_; ++i)
            x = transformer_block(tape, x, "visual.transformer.resblocks." + std::to_string(i),
                                  vis_heads_, nullptr);
        ad::NodeId pooled = tape.slice_cols(x, 0, 1);
        pooled = layernorm(tape, pooled, "visual.ln_post");
        ad::NodeId out = tape.matmul(tape.constant(tensor("visual.proj").transpose()), pooled);
        return tape.value(out).col(0);
    }

    uint64_t state_digest() const override {
        Digest dg;
        for (const auto& [name, m] : tensors_) {
            dg.update(name);
            dg.update_matrix(m);
        }
        double tau = info_.temperature;
        dg.update(&tau, sizeof tau);
        return dg.value();
    }

private:
    const ad::Mat& tensor(const std::string& name) const {
        auto it = tensors_.find(name);
        if (it == tensors_.end()) fail(ErrorKind::parse, "checkpoint lacks tensor " + name);
        return it->second;
    }

    void block_tensors(const std::string& prefix) const {
        for (const char* suffix :
             {".attn.in_proj_weight", ".attn.in_proj_bias", ".attn.out_proj.weight",
              ".attn.out_proj.bias", ".ln_1.weight", ".ln_1.bias", ".ln_2.weight", ".ln_2.bias",
              ".mlp.c_fc.weight", ".mlp.c_fc.bias", ".mlp.c_proj.weight", ".mlp.c_proj.bias"})
            tensor(prefix + suffix);
    }

    ad::NodeId layernorm(ad::Tape& tape, ad::NodeId x, const std::string& prefix) const {
        return tape.layernorm_cols(x, tensor(prefix + ".weight").col(0),
                                   tensor(prefix + ".bias").col(0));
    }

    ad::NodeId transformer_block(ad::Tape& tape, ad::NodeId x, const std::string& prefix,
                                 int heads, const ad::NodeId* causal_mask) const {
        int width = int(tape.value(x).rows());
        int head_dim = width / heads;
        ad::NodeId t = layernorm(tape, x, prefix + ".ln_1");
        ad::NodeId qkv = tape.add_colvec(
            tape.matmul(tape.constant(tensor(prefix + ".attn.in_proj_weight")), t),
            tape.constant(tensor(prefix + ".attn.in_proj_bias")));
        std::vector<ad::NodeId> head_outputs;
        for (int hd = 0; hd < heads; ++hd) {
            ad::NodeId q = tape.slice_rows(qkv, hd * head_dim, head_dim);
            ad::NodeId k = tape.slice_rows(qkv, width + hd * head_dim, head_dim);
            ad::NodeId v = tape.slice_rows(qkv, 2 * width + hd * head_dim, head_dim);
            ad::NodeId scores =
                tape.scale(tape.matmul(tape.transpose(k), q), 1.0 / std::sqrt(double(head_dim)));
            if (causal_mask) scores = tape.add(scores, *causal_mask);
            ad::NodeId attn = tape.softmax_cols(scores);
            head_outputs.push_back(tape.matmul(v, attn));
        }
        ad::NodeId merged = tape.vconcat(head_outputs);
        ad::NodeId attn_out = tape.add_colvec(
            tape.matmul(tape.constant(tensor(prefix + ".attn.out_proj.weight")), merged),
            tape.constant(tensor(prefix + ".attn.out_proj.bias")));
        x = tape.add(x, attn_out);
        ad::NodeId t2 = layernorm(tape, x, prefix + ".ln_2");
        ad::NodeId hidden = tape.quick_gelu(tape.add_colvec(
            tape.matmul(tape.constant(tensor(prefix + ".mlp.c_fc.weight")), t2),
            tape.constant(tensor(prefix + ".mlp.c_fc.bias"))));
        ad::NodeId mlp_out = tape.add_colvec(
            tape.matmul(tape.constant(tensor(prefix + ".mlp.c_proj.weight")), hidden),
            tape.constant(tensor(prefix + ".mlp.c_proj.bias")));
        return tape.add(x, mlp_out);
    }

    std::unordered_map<std::string, ad::Mat> tensors_;
    ClipBpe bpe_;
    int text_width_ = 0, text_layers_ = 0, text_heads_ = 0;
    int vis_width_ = 0, vis_layers_ = 0, vis_heads_ = 0, vis_patch_ = 0, vis_image_size_ = 0;
    double image_mean_[3] = {0.48145466, 0.4578275, 0.40821073};
    double image_std_[3] = {0.26862954, 0.26130258, 0.27577711};
};

}  // namespace dp
