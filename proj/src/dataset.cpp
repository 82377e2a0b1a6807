#include "skelforge/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "skelforge/rng.hpp"

namespace skelforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string checked_name(const json& v, const char* what) {
    const std::string s = v.get<std::string>();
    if (s.empty()) throw ValidationError(std::string(what) + " must not be empty");
    if (s.find_first_of(",\n\r/\\") != std::string::npos)
        throw ValidationError(std::string(what) + " '" + s +
                              "' must not contain commas, slashes or newlines");
    return s;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

RecordingPlan build_plan(const std::string& document_text) {
    json doc;
    try {
        doc = json::parse(document_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("plan document does not parse: ") + e.what());
    }
    if (!doc.contains("categories") || !doc["categories"].is_array() || doc["categories"].empty())
        throw ValidationError("plan document has no categories");

    RecordingPlan plan;
    plan.digest = hex64(fnv1a64(doc.dump()));
    std::set<int> labels;
    for (const auto& c : doc["categories"]) {
        PlannedCategory cat;
        cat.name = checked_name(c.at("name"), "category name");
        if (!c.contains("actions") || !c["actions"].is_array() || c["actions"].empty())
            throw ValidationError("category '" + cat.name + "' has no actions");
        for (const auto& a : c["actions"]) {
            PlannedAction act;
            act.name = checked_name(a.at("name"), "action name");
            act.label_id = a.at("label_id").get<int>();
            if (!labels.insert(act.label_id).second)
                throw ValidationError("duplicate label_id " + std::to_string(act.label_id));
            if (!a.contains("animations") || !a["animations"].is_array() ||
                a["animations"].empty())
                throw ValidationError("action '" + act.name + "' has an empty animations list");
            for (const auto& an : a["animations"]) {
                PlannedAnimation pa;
                pa.animation_id = checked_name(an.at("animation_id"), "animation_id");
                pa.variants = an.value("variants", 1);
                pa.viewpoints = an.value("viewpoints", 1);
                if (pa.variants < 1 || pa.viewpoints < 1)
                    throw ValidationError("animation '" + pa.animation_id +
                                          "' needs at least one variant and one viewpoint");
                act.animations.push_back(pa);
                for (int v = 0; v < pa.variants; ++v)
                    for (int w = 0; w < pa.viewpoints; ++w)
                        plan.clips.push_back({cat.name, act.name, pa.animation_id, v, w,
                                              act.label_id});
            }
            cat.actions.push_back(std::move(act));
        }
        plan.categories.push_back(std::move(cat));
    }
    return plan;
}

RecordingPlan build_plan_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open plan file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return build_plan(ss.str());
}

std::string relative_clip_path(const PlannedClip& clip) {
    char variant[32], view[32];
    std::snprintf(variant, sizeof(variant), "variant_%02d", clip.variant_id);
    std::snprintf(view, sizeof(view), "view_%02d", clip.viewpoint_id);
    return clip.category + "/" + clip.action + "/" + clip.animation_id + "/" + variant + "/" +
           view;
}

ClipManifest execute_plan(const RecordingPlan& plan,
                          const std::map<std::string, AnimationSet>& animations,
                          const TrajectoryProvider& trajectories,
                          const SkeletonTopology& topology, const CameraIntrinsics& intrinsics,
                          const fs::path& out_root) {
    ClipManifest manifest;
    manifest.plan_digest = plan.digest;
    for (const PlannedClip& clip : plan.clips) {
        const auto it = animations.find(clip.animation_id);
        if (it == animations.end())
            throw ValidationError("plan references unknown animation '" + clip.animation_id +
                                  "'");
        const AnimationSet& set = it->second;
        if (clip.variant_id >= static_cast<int>(set.sequences.size()))
            throw ValidationError("animation '" + clip.animation_id + "' has no variant " +
                                  std::to_string(clip.variant_id));
        const RotationSequence& seq = set.sequences[clip.variant_id];

        const std::string rel = relative_clip_path(clip);
        try {
            const CameraTrajectory traj = trajectories(clip);
            const std::vector<RasterFrame> frames = render_clip(seq, topology, traj, intrinsics);
            const fs::path dir = out_root / rel;
            fs::create_directories(dir);
            for (std::size_t f = 0; f < frames.size(); ++f) {
                char name[32];
                std::snprintf(name, sizeof(name), "frame_%06zu.ppm", f);
                write_ppm(frames[f], (dir / name).string());
            }
            ClipRecord rec;
            rec.category = clip.category;
            rec.action = clip.action;
            rec.animation_id = clip.animation_id;
            rec.variant_id = clip.variant_id;
            rec.viewpoint_id = clip.viewpoint_id;
            rec.clip_path = rel;
            rec.start_frame = 0;
            rec.end_frame = static_cast<long>(frames.size()) - 1;
            rec.label_id = clip.label_id;
            manifest.records.push_back(std::move(rec));
        } catch (const std::runtime_error& e) {
            throw RuntimeError("clip " + rel + ": " + e.what());
        }
    }
    std::sort(manifest.records.begin(), manifest.records.end(),
              [](const ClipRecord& a, const ClipRecord& b) { return a.clip_path < b.clip_path; });
    return manifest;
}

void write_manifest(const ClipManifest& manifest, const fs::path& path) {
    std::vector<const ClipRecord*> rows;
    rows.reserve(manifest.records.size());
    for (const auto& r : manifest.records) rows.push_back(&r);
    std::sort(rows.begin(), rows.end(),
              [](const ClipRecord* a, const ClipRecord* b) { return a->clip_path < b->clip_path; });

    std::ofstream out(path, std::ios::binary);
    if (!out) throw RuntimeError("cannot write manifest '" + path.string() + "'");
    out << "category,action,animation_id,variant_id,viewpoint_id,clip_path,start_frame,"
           "end_frame,label_id\n";
    for (const ClipRecord* r : rows)
        out << r->category << ',' << r->action << ',' << r->animation_id << ',' << r->variant_id
            << ',' << r->viewpoint_id << ',' << r->clip_path << ',' << r->start_frame << ','
            << r->end_frame << ',' << r->label_id << '\n';
    if (!out) throw RuntimeError("short write on manifest '" + path.string() + "'");
}

ClipManifest read_manifest(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open manifest '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line))
        throw ValidationError("manifest '" + path.string() + "' is empty");
    if (line != "category,action,animation_id,variant_id,viewpoint_id,clip_path,start_frame,"
                "end_frame,label_id")
        throw ValidationError("manifest '" + path.string() + "' has an unexpected header");

    ClipManifest manifest;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) cols.push_back(col);
        if (cols.size() != 9)
            throw ValidationError("manifest line " + std::to_string(lineno) +
                                  " does not have 9 columns");
        ClipRecord r;
        r.category = cols[0];
        r.action = cols[1];
        r.animation_id = cols[2];
        r.variant_id = std::stoi(cols[3]);
        r.viewpoint_id = std::stoi(cols[4]);
        r.clip_path = cols[5];
        r.start_frame = std::stol(cols[6]);
        r.end_frame = std::stol(cols[7]);
        r.label_id = std::stoi(cols[8]);
        manifest.records.push_back(std::move(r));
    }
    return manifest;
}

}  // namespace skelforge
