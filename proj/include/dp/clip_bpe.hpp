#pragma once

#include <cctype>
#include <cstring>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dp/common.hpp"

// Byte-pair tokenizer of the CLIP family: lowercase, whitespace-cleaned
// input, per-chunk byte-level BPE with an end-of-word marker on the final
// symbol. Vocabulary and merge ranks come from the checkpoint. The chunk
// scanner handles ASCII text (letter runs, single digits, punctuation runs,
// the apostrophe contractions); non-ASCII bytes pass through the byte
// encoder as punctuation.

namespace dp {

class ClipBpe {
public:
    ClipBpe() = default;

    ClipBpe(std::vector<std::string> vocab, const std::vector<std::pair<std::string, std::string>>& merges)
        : vocab_(std::move(vocab)) {
        for (size_t i = 0; i < vocab_.size(); ++i) token_to_id_[vocab_[i]] = int(i);
        for (size_t i = 0; i < merges.size(); ++i)
            merge_rank_[merges[i].first + " " + merges[i].second] = int(i);
        auto need = [&](const char* tok) {
            auto it = token_to_id_.find(tok);
            if (it == token_to_id_.end())
                fail(ErrorKind::parse, std::string("BPE vocabulary lacks ") + tok);
            return it->second;
        };
        sot_ = need("<|startoftext|>");
        eot_ = need("<|endoftext|>");
        byte_encoder_ = bytes_to_unicode();
    }

    bool valid() const { return !vocab_.empty(); }
    int sot() const { return sot_; }
    int eot() const { return eot_; }
    int vocab_size() const { return int(vocab_.size()); }

    // Token ids for a text fragment (no sentinels).
    std::vector<int> encode(const std::string& text) const {
        std::vector<int> out;
        for (const std::string& chunk : split_chunks(clean(text))) {
            std::vector<std::string> symbols;
            for (unsigned char b : chunk) symbols.push_back(byte_encoder_[b]);
            if (symbols.empty()) continue;
            symbols.back() += "</w>";
            merge(symbols);
            for (const auto& s : symbols) {
                auto it = token_to_id_.find(s);
                if (it == token_to_id_.end())
                    fail(ErrorKind::index, "BPE symbol not in vocabulary: " + s);
                out.push_back(it->second);
            }
        }
        return out;
    }

    static std::string clean(const std::string& text) {
        std::string out;
        bool pending_space = false;
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                pending_space = !out.empty();
                continue;
            }
            if (pending_space) {
                out += ' ';
                pending_space = false;
            }
            out += char(std::tolower(static_cast<unsigned char>(c)));
        }
        return out;
    }

private:
    // GPT-2 style byte-to-unicode table (as UTF-8 strings).
    static std::vector<std::string> bytes_to_unicode() {
        auto utf8 = [](int cp) {
            std::string s;
            if (cp < 0x80) {
                s += char(cp);
            } else if (cp < 0x800) {
                s += char(0xC0 | (cp >> 6));
                s += char(0x80 | (cp & 0x3F));
            } else {
                s += char(0xE0 | (cp >> 12));
                s += char(0x80 | ((cp >> 6) & 0x3F));
                s += char(0x80 | (cp & 0x3F));
            }
            return s;
        };
        std::vector<int> codes(256, -1);
        auto keep = [&](int lo, int hi) {
            for (int b = lo; b <= hi; ++b) codes[size_t(b)] = b;
        };
        keep('!', '~');
        keep(0xA1, 0xAC);
        keep(0xAE, 0xFF);
        int n = 0;
        for (int b = 0; b < 256; ++b)
            if (codes[size_t(b)] < 0) codes[size_t(b)] = 256 + n++;
        std::vector<std::string> table(256);
        for (int b = 0; b < 256; ++b) table[size_t(b)] = utf8(codes[size_t(b)]);
        return table;
    }

    static std::vector<std::string> split_chunks(const std::string& text) {
        static const char* kContractions[] = {"'s", "'t", "'re", "'ve", "'m", "'ll", "'d"};
        std::vector<std::string> chunks;
        size_t i = 0;
        auto is_letter = [](char c) { return std::isalpha(static_cast<unsigned char>(c)); };
        auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)); };
        while (i < text.size()) {
            char c = text[i];
            if (c == ' ') {
                ++i;
                continue;
            }
            if (c == '\'') {
                bool matched = false;
                for (const char* con : kContractions) {
                    size_t len = std::strlen(con);
                    if (text.compare(i, len, con) == 0) {
                        chunks.emplace_back(text, i, len);
                        i += len;
                        matched = true;
                        break;
                    }
                }
                if (matched) continue;
            }
            if (is_letter(c)) {
                size_t j = i;
                while (j < text.size() && is_letter(text[j])) ++j;
                chunks.emplace_back(text, i, j - i);
                i = j;
                continue;
            }
            if (is_digit(c)) {
                chunks.emplace_back(1, c);  // one numeral per chunk
                ++i;
                continue;
            }
            size_t j = i;
            while (j < text.size() && text[j] != ' ' && !is_letter(text[j]) && !is_digit(text[j]))
                ++j;
            chunks.emplace_back(text, i, j - i);
            i = j;
        }
        return chunks;
    }

    void merge(std::vector<std::string>& symbols) const {
        while (symbols.size() >= 2) {
            int best_rank = INT32_MAX;
            size_t best = 0;
            for (size_t k = 0; k + 1 < symbols.size(); ++k) {
                auto it = merge_rank_.find(symbols[k] + " " + symbols[k + 1]);
                if (it != merge_rank_.end() && it->second < best_rank) {
                    best_rank = it->second;
                    best = k;
                }
            }
            if (best_rank == INT32_MAX) break;
            symbols[best] += symbols[best + 1];
            symbols.erase(symbols.begin() + long(best) + 1);
        }
    }

    std::vector<std::string> vocab_;
    std::unordered_map<std::string, int> token_to_id_;
    std::unordered_map<std::string, int> merge_rank_;
    std::vector<std::string> byte_encoder_;
    int sot_ = -1;
    int eot_ = -1;
};

}  // namespace dp
