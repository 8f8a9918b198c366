#pragma once

#include <cstdlib>
#include <memory>

#include "dp/clip_backend.hpp"
#include "dp/gateway.hpp"
#include "dp/toy_backend.hpp"

namespace dp {

// Checkpoint search directory: $MODEL_CACHE_DIR or ./models.
inline std::filesystem::path model_cache_dir() {
    if (const char* env = std::getenv("MODEL_CACHE_DIR")) return env;
    return "models";
}

// Loads a frozen dual encoder. Toy handles are generated from the id's seed;
// pretrained handles read "<cache>/<model_id>.dpck" (see tools/export scripts
// for producing checkpoints).
inline EncoderHandle load_model(const std::string& model_id, Backend backend) {
    if (backend == Backend::toy) return std::make_shared<ToyModel>(model_id);
    std::filesystem::path path = model_cache_dir() / (model_id + ".dpck");
    if (!std::filesystem::exists(path))
        fail(ErrorKind::load, "no checkpoint for model \"" + model_id + "\" at " + path.string() +
                                  " (set MODEL_CACHE_DIR)");
    return std::make_shared<ClipModel>(model_id, path);
}

}  // namespace dp
