#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dp/attack.hpp"
#include "dp/common.hpp"

// Line-delimited JSON manifests. A manifest binds images to labels and, for
// attacked sets, to the full render parameters, so any dataset can be
// regenerated and verified byte for byte. An optional leading meta line
// carries the candidate class names; relative image paths resolve against
// the manifest's own directory.

namespace dp {

using json = nlohmann::json;

struct CleanRecord {
    std::string image;
    int true_class = -1;

    bool operator==(const CleanRecord&) const = default;
};

struct DetectionRecord {
    std::string image;
    std::vector<std::pair<int, Box>> boxes;

    bool operator==(const DetectionRecord&) const = default;
};

template <typename Record>
struct Manifest {
    std::vector<Record> records;
    std::vector<std::string> class_names;  // empty when the manifest has no meta line
    std::filesystem::path directory;       // for resolving relative image paths

    std::filesystem::path resolve(const std::string& image_path) const {
        std::filesystem::path p(image_path);
        return p.is_absolute() ? p : directory / p;
    }
};

using CleanManifest = Manifest<CleanRecord>;
using AttackManifest = Manifest<AttackRecord>;
using DetectionManifest = Manifest<DetectionRecord>;

// ---- JSON (de)serialization of the record types ---------------------------

inline json to_json(const CleanRecord& r) {
    return json{{"image", r.image}, {"true_class", r.true_class}};
}

inline json to_json(const Box& b) {
    return json{{"x0", b.x0}, {"y0", b.y0}, {"x1", b.x1}, {"y1", b.y1}};
}

inline json to_json(const DetectionRecord& r) {
    json boxes = json::array();
    for (const auto& [cls, box] : r.boxes) {
        json jb = to_json(box);
        jb["class"] = cls;
        boxes.push_back(jb);
    }
    return json{{"image", r.image}, {"boxes", boxes}};
}

inline json to_json(const AttackRecord& r) {
    json j{{"image", r.output_image},
           {"source", r.source_image},
           {"true_class", r.true_class},
           {"attack_class", r.attack_class},
           {"seed", r.spec.seed},
           {"font", to_string(r.spec.font)},
           {"font_name", font_name(r.spec.font)},
           {"size_pt", r.spec.size_pt},
           {"color", to_string(r.spec.color)},
           {"shadow_color", to_string(r.spec.shadow_color)},
           {"x", r.spec.x},
           {"y", r.spec.y},
           {"text", r.spec.text}};
    if (r.box) {
        json jb = to_json(*r.box);
        for (auto& [k, v] : jb.items()) j["box_" + k] = v;
    }
    if (r.skipped) j["skipped"] = true;
    return j;
}

inline Box box_from_json(const json& j, const std::string& prefix = "") {
    Box b;
    b.x0 = j.at(prefix + "x0").get<int>();
    b.y0 = j.at(prefix + "y0").get<int>();
    b.x1 = j.at(prefix + "x1").get<int>();
    b.y1 = j.at(prefix + "y1").get<int>();
    return b;
}

inline void from_json_record(const json& j, CleanRecord& r) {
    r.image = j.at("image").get<std::string>();
    r.true_class = j.at("true_class").get<int>();
}

inline void from_json_record(const json& j, DetectionRecord& r) {
    r.image = j.at("image").get<std::string>();
    for (const auto& jb : j.at("boxes")) {
        r.boxes.emplace_back(jb.at("class").get<int>(), box_from_json(jb));
    }
}

inline void from_json_record(const json& j, AttackRecord& r) {
    r.output_image = j.at("image").get<std::string>();
    r.source_image = j.value("source", std::string());
    r.true_class = j.at("true_class").get<int>();
    r.attack_class = j.at("attack_class").get<int>();
    r.spec.seed = j.at("seed").get<uint64_t>();
    r.spec.font = attack_font_from_string(j.at("font").get<std::string>());
    r.spec.size_pt = j.at("size_pt").get<int>();
    r.spec.color = ink_color_from_string(j.at("color").get<std::string>());
    r.spec.shadow_color = ink_color_from_string(j.at("shadow_color").get<std::string>());
    r.spec.x = j.at("x").get<int>();
    r.spec.y = j.at("y").get<int>();
    r.spec.text = j.at("text").get<std::string>();
    if (j.contains("box_x0")) r.box = box_from_json(j, "box_");
    r.skipped = j.value("skipped", false);
}

// ---- manifest I/O ----------------------------------------------------------

template <typename Record>
inline void write_manifest(const Manifest<Record>& m, const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io, "cannot write manifest " + path.string());
    if (!m.class_names.empty()) {
        json meta{{"meta", true}, {"class_names", m.class_names}};
        out << meta.dump() << '\n';
    }
    for (const auto& r : m.records) out << to_json(r).dump() << '\n';
}

template <typename Record>
inline Manifest<Record> read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open manifest " + path.string());
    Manifest<Record> m;
    m.directory = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            fail(ErrorKind::parse,
                 path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        try {
            if (j.is_object() && j.value("meta", false)) {
                m.class_names = j.value("class_names", std::vector<std::string>{});
                continue;
            }
            Record r;
            from_json_record(j, r);
            m.records.push_back(std::move(r));
        } catch (const json::exception& e) {
            fail(ErrorKind::parse,
                 path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return m;
}

inline std::vector<std::string> read_class_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open class list " + path.string());
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) names.push_back(line);
    }
    return names;
}

inline void write_class_list(const std::vector<std::string>& names,
                             const std::filesystem::path& path) {
    std::string text;
    for (const auto& n : names) {
        text += n;
        text += '\n';
    }
    write_text_file(path, text);
}

}  // namespace dp
