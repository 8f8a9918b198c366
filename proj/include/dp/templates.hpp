#pragma once

#include <map>
#include <string>
#include <vector>

#include "dp/common.hpp"
#include "dp/gateway.hpp"

// Prompt template sets: the 81 hand-crafted training templates plus the
// fixed per-dataset inference prompts. One training template is sampled
// uniformly per iteration.

namespace dp {

inline const std::vector<std::string>& training_template_texts() {
    static const std::vector<std::string> kTemplates = {
        "<CLS>.",
        "a photo of a <CLS>.",
        "a bad photo of a <CLS>.",
        "a photo of many <CLS>.",
        "a sculpture of a <CLS>.",
        "a photo of the hard to see <CLS>.",
        "a low resolution photo of the <CLS>.",
        "a rendering of a <CLS>.",
        "graffiti of a <CLS>.",
        "a bad photo of the <CLS>.",
        "a cropped photo of the <CLS>.",
        "a tattoo of a <CLS>.",
        "the embroidered <CLS>.",
        "a photo of a hard to see <CLS>.",
        "a bright photo of a <CLS>.",
        "a photo of a clean <CLS>.",
        "a photo of a dirty <CLS>.",
        "a dark photo of the <CLS>.",
        "a drawing of a <CLS>.",
        "a photo of my <CLS>.",
        "the plastic <CLS>.",
        "a photo of the cool <CLS>.",
        "a close-up photo of a <CLS>.",
        "a black and white photo of the <CLS>.",
        "a painting of the <CLS>.",
        "a painting of a <CLS>.",
        "a pixelated photo of the <CLS>.",
        "a sculpture of the <CLS>.",
        "a bright photo of the <CLS>.",
        "a cropped photo of a <CLS>.",
        "a plastic <CLS>.",
        "a photo of the dirty <CLS>.",
        "a jpeg corrupted photo of a <CLS>.",
        "a blurry photo of the <CLS>.",
        "a photo of the <CLS>.",
        "a good photo of the <CLS>.",
        "a rendering of the <CLS>.",
        "a <CLS> in a video game.",
        "a photo of one <CLS>.",
        "a doodle of a <CLS>.",
        "a close-up photo of the <CLS>.",
        "the origami <CLS>.",
        "the <CLS> in a video game.",
        "a sketch of a <CLS>.",
        "a doodle of the <CLS>.",
        "a origami <CLS>.",
        "a low resolution photo of a <CLS>.",
        "the toy <CLS>.",
        "a rendition of the <CLS>.",
        "a photo of the clean <CLS>.",
        "a photo of a large <CLS>.",
        "a rendition of a <CLS>.",
        "a photo of a nice <CLS>.",
        "a photo of a weird <CLS>.",
        "a blurry photo of a <CLS>.",
        "a cartoon <CLS>.",
        "art of a <CLS>.",
        "a sketch of the <CLS>.",
        "a embroidered <CLS>.",
        "a pixelated photo of a <CLS>.",
        "itap of the <CLS>.",
        "a jpeg corrupted photo of the <CLS>.",
        "a good photo of a <CLS>.",
        "a plushie <CLS>.",
        "a photo of the nice <CLS>.",
        "a photo of the small <CLS>.",
        "a photo of the weird <CLS>.",
        "the cartoon <CLS>.",
        "art of the <CLS>.",
        "a drawing of the <CLS>.",
        "a photo of the large <CLS>.",
        "a black and white photo of a <CLS>.",
        "the plushie <CLS>.",
        "a dark photo of a <CLS>.",
        "itap of a <CLS>.",
        "graffiti of the <CLS>.",
        "a toy <CLS>.",
        "itap of my <CLS>.",
        "a photo of a cool <CLS>.",
        "a photo of a small <CLS>.",
        "a tattoo of the <CLS>.",
    };
    return kTemplates;
}

inline const std::vector<PromptTemplate>& training_templates() {
    static const std::vector<PromptTemplate> kParsed = [] {
        std::vector<PromptTemplate> out;
        for (const auto& t : training_template_texts()) out.emplace_back(t);
        return out;
    }();
    return kParsed;
}

inline std::string template_set_hash() {
    Digest dg;
    for (const auto& t : training_template_texts()) {
        dg.update(t);
        dg.update("\n");
    }
    return dg.hex();
}

// Fixed inference prompt per dataset; unknown datasets fall back to the
// generic photo prompt (also used for real-world attack sets).
inline std::string inference_prompt_text(const std::string& dataset_id) {
    static const std::map<std::string, std::string> kPrompts = {
        {"imagenet", "a photo of a <CLS>."},
        {"caltech101", "a photo of a <CLS>."},
        {"oxfordpets", "a photo of a <CLS>, a type of pet."},
        {"stanfordcars", "a photo of a <CLS>."},
        {"flowers102", "a photo of a <CLS>, a type of flower."},
        {"food101", "a photo of a <CLS>, a type of food."},
        {"fgvcaircraft", "a photo of a <CLS>, a type of aircraft."},
        {"dtd", "<CLS> texture."},
        {"sun397", "a photo of a <CLS>."},
        {"eurosat", "a centered satellite photo of a <CLS>."},
    };
    auto it = kPrompts.find(dataset_id);
    return it != kPrompts.end() ? it->second : "a photo of a <CLS>.";
}

inline PromptTemplate inference_prompt(const std::string& dataset_id) {
    return PromptTemplate(inference_prompt_text(dataset_id));
}

}  // namespace dp
