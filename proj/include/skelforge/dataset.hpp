#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "skelforge/dsi.hpp"
#include "skelforge/render.hpp"

namespace skelforge {

struct PlannedAnimation {
    std::string animation_id;
    int variants = 1;
    int viewpoints = 1;
};

struct PlannedAction {
    std::string name;
    int label_id = 0;
    std::vector<PlannedAnimation> animations;
};

struct PlannedCategory {
    std::string name;
    std::vector<PlannedAction> actions;
};

// One clip of the cartesian expansion variants x viewpoints.
struct PlannedClip {
    std::string category;
    std::string action;
    std::string animation_id;
    int variant_id = 0;
    int viewpoint_id = 0;
    int label_id = 0;
};

struct RecordingPlan {
    std::vector<PlannedCategory> categories;
    std::vector<PlannedClip> clips;
    std::string digest;  // stable hash of the plan document, for traceability
};

// Parses and fully expands a plan document:
// {categories:[{name, actions:[{name, label_id, animations:[{animation_id,
// variants, viewpoints}]}]}]}. Label ids must be unique across the plan.
RecordingPlan build_plan(const std::string& document_text);
RecordingPlan build_plan_file(const std::string& path);

struct ClipRecord {
    std::string category;
    std::string action;
    std::string animation_id;
    int variant_id = 0;
    int viewpoint_id = 0;
    std::string clip_path;  // relative to the dataset root
    long start_frame = 0;
    long end_frame = 0;
    int label_id = 0;
};

struct ClipManifest {
    std::vector<ClipRecord> records;  // sorted by clip_path
    std::string plan_digest;
};

using TrajectoryProvider = std::function<CameraTrajectory(const PlannedClip&)>;

// Renders every planned clip into out_root/category/action/animation/variant/
// viewpoint/frame_%06d.ppm. Clips are born single-action, so each record's
// label covers its whole frame range by construction.
ClipManifest execute_plan(const RecordingPlan& plan,
                          const std::map<std::string, AnimationSet>& animations,
                          const TrajectoryProvider& trajectories,
                          const SkeletonTopology& topology, const CameraIntrinsics& intrinsics,
                          const std::filesystem::path& out_root);

// CSV with the fixed header, rows sorted lexicographically by clip_path,
// UTF-8 with LF line endings.
void write_manifest(const ClipManifest& manifest, const std::filesystem::path& path);
ClipManifest read_manifest(const std::filesystem::path& path);

std::string relative_clip_path(const PlannedClip& clip);

}  // namespace skelforge
