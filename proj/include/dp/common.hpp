#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp {

// ---------------------------------------------------------------------------
// Errors. One exception type with a kind tag; the CLI maps kinds to exit
// codes (config/usage -> 2, everything else -> 1).
// ---------------------------------------------------------------------------

enum class ErrorKind {
    load,      // missing/unreadable model checkpoint
    capability,// unsupported model family or backend
    shape,     // dimension mismatch (images, vectors)
    length,    // sequence exceeds context_length
    template_, // prompt template without a class slot
    index,     // out-of-vocabulary token, class index out of range
    parse,     // malformed manifest/config/artifact file
    pairing,   // clean/attack manifests do not pair up
    render,    // text cannot be placed at any admissible size
    numeric,   // undefined math (zero-norm feature, divergence)
    config,    // invalid configuration or usage
    compat,    // dp/model mismatch at use time
    io,        // filesystem failure
    input,     // degenerate input data (0-pixel image, empty manifest)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

// ---------------------------------------------------------------------------
// Portable deterministic randomness.
//
// Everything stochastic in this project is derived from 64-bit counters via
// splitmix64, so results are bit-identical across platforms and runs and any
// draw can be reproduced from (seed, purpose, indices) without carrying
// generator state around. Gaussian draws use a 12-uniform sum, which keeps
// the arithmetic to IEEE +,-,* only.
// ---------------------------------------------------------------------------

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed-mixing for per-record derived seeds: hash64(dataset_seed, image_id).
inline uint64_t hash64(uint64_t a, uint64_t b) {
    return splitmix64(splitmix64(a) ^ b);
}

inline uint64_t hash64(uint64_t a, uint64_t b, uint64_t c) {
    return hash64(hash64(a, b), c);
}

// FNV-1a over a string, for turning labels/purposes into stream ids.
inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Counter-based stream of pseudo-random 64-bit words.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), counter_(0) {}
    Rng(uint64_t seed, std::string_view purpose)
        : seed_(hash64(seed, fnv1a(purpose))), counter_(0) {}

    uint64_t next_u64() { return splitmix64(seed_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    // Uniform in [0, 1) from the top 53 bits; exact dyadic rationals.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [lo, hi], inclusive. Rejection keeps it unbiased.
    int64_t next_int(int64_t lo, int64_t hi) {
        if (lo > hi) fail(ErrorKind::config, "next_int: empty range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<int64_t>(next_u64());  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t v = next_u64();
        while (v >= limit) v = next_u64();
        return lo + static_cast<int64_t>(v % span);
    }

    // Approximate standard normal: sum of 12 uniforms minus 6 (Irwin-Hall).
    // Adequate for weight init and noise; uses only exact IEEE arithmetic.
    double next_gaussian() {
        double s = 0.0;
        for (int i = 0; i < 12; ++i) s += next_double();
        return s - 6.0;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_int(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t seed_;
    uint64_t counter_;
};

// ---------------------------------------------------------------------------
// Byte digests, used for frozen-ness checks and config provenance.
// ---------------------------------------------------------------------------

class Digest {
public:
    void update(const void* data, size_t n) {
        const unsigned char* p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < n; ++i) {
            h_ ^= p[i];
            h_ *= 0x100000001b3ULL;
        }
    }
    void update(std::string_view s) { update(s.data(), s.size()); }
    void update_u64(uint64_t v) { update(&v, sizeof v); }
    template <typename Derived>
    void update_matrix(const Derived& m) {
        for (long c = 0; c < m.cols(); ++c)
            for (long r = 0; r < m.rows(); ++r) {
                double v = m(r, c);
                update(&v, sizeof v);
            }
    }
    uint64_t value() const { return h_; }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

private:
    uint64_t h_ = 0xcbf29ce484222325ULL;
};

// ---------------------------------------------------------------------------
// Small file helpers.
// ---------------------------------------------------------------------------

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io, "cannot write " + path.string());
    out << text;
}

}  // namespace dp
