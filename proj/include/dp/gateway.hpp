#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dp/autodiff.hpp"
#include "dp/common.hpp"
#include "dp/image.hpp"

// Uniform abstraction over a frozen dual-encoder vision-language model:
// image encoder, text encoder, tokenizer, word-embedding table and softmax
// temperature. Two backends implement it — a deterministic toy encoder for
// offline testing and a loader for exported pretrained checkpoints. All
// parameters are immutable after load.

namespace dp {

enum class Backend { pretrained, toy };

inline const char* to_string(Backend b) { return b == Backend::toy ? "toy" : "pretrained"; }

struct ModelInfo {
    std::string model_id;
    Backend backend = Backend::toy;
    int d = 0;               // word-embedding dimension
    int m = 0;               // joint feature dimension
    double temperature = 0;  // tau, read from the model, never trained here
    int context_length = 0;
};

// A word sequence with exactly one "<CLS>" slot for the class name.
struct PromptTemplate {
    std::string text;

    explicit PromptTemplate(std::string t) : text(std::move(t)) {
        if (text.find("<CLS>") == std::string::npos)
            fail(ErrorKind::template_, "prompt template has no <CLS> slot: \"" + text + "\"");
        if (text.find("<CLS>") != text.rfind("<CLS>"))
            fail(ErrorKind::template_, "prompt template has multiple <CLS> slots");
    }

    std::string prefix() const { return text.substr(0, text.find("<CLS>")); }
    std::string suffix() const { return text.substr(text.find("<CLS>") + 5); }
    std::string instantiate(const std::string& class_name) const {
        return prefix() + class_name + suffix();
    }
};

struct TokenSequence {
    std::vector<int> ids;
    int span_start = 0;  // [span_start, span_end) covers the class-name tokens
    int span_end = 0;
    int eot_index = -1;  // position of the end sentinel

    int length() const { return int(ids.size()); }
};

struct EmbeddingSequence {
    ad::Mat vectors;  // d x L, one column per position
    int span_start = 0;
    int span_end = 0;
    int eot_index = -1;
    std::vector<int> prefix_cols;  // columns occupied by inserted prefix copies

    int length() const { return int(vectors.cols()); }
};

class Model {
public:
    virtual ~Model() = default;

    const ModelInfo& info() const { return info_; }

    // Image feature for a preprocessed input. Images are data, not
    // parameters; no gradient support on this path.
    virtual ad::Vec encode_image(const Image& image) const = 0;

    // The model's native text path (tokenize + embed + encode in one go).
    virtual ad::Vec encode_text(const std::string& text) const = 0;

    virtual TokenSequence tokenize(const PromptTemplate& tmpl,
                                   const std::string& class_name) const = 0;

    // Frozen per-token lookup; columns are constants.
    virtual ad::Mat embed_tokens(const TokenSequence& tokens) const = 0;

    // Builds the text encoder as a differentiable graph over an embedding
    // node of shape d x L and returns the m x 1 feature node. `meta` carries
    // the positions the encoder needs (sequence end sentinel).
    virtual ad::NodeId text_graph(ad::Tape& tape, ad::NodeId embeddings,
                                  const EmbeddingSequence& meta) const = 0;

    // Digest of every frozen parameter buffer, for frozen-ness audits.
    virtual uint64_t state_digest() const = 0;

    // Feature for an embedding sequence (w or w^DP). Differentiable via
    // text_graph; this convenience wrapper evaluates the graph forward.
    ad::Vec encode_text_from_embeddings(const EmbeddingSequence& e) const {
        check_length(e.length());
        ad::Tape tape;
        ad::NodeId emb = tape.constant(e.vectors);
        ad::NodeId w = text_graph(tape, emb, e);
        return tape.value(w).col(0);
    }

    EmbeddingSequence embed(const TokenSequence& t) const {
        EmbeddingSequence e;
        e.vectors = embed_tokens(t);
        e.span_start = t.span_start;
        e.span_end = t.span_end;
        e.eot_index = t.eot_index;
        return e;
    }

    void check_length(int length) const {
        if (length > info_.context_length)
            fail(ErrorKind::length, "sequence of length " + std::to_string(length) +
                                        " exceeds context_length " +
                                        std::to_string(info_.context_length));
    }

protected:
    ModelInfo info_;
};

using EncoderHandle = std::shared_ptr<const Model>;

}  // namespace dp
