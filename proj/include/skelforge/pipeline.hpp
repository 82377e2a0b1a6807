#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skelforge/dataset.hpp"
#include "skelforge/io.hpp"

namespace skelforge {

struct PipelineConfig {
    std::string topology_path;  // empty means the bundled default topology
    std::string input_path;     // coordinate sequence document
    std::string animation_id = "anim00";
    DsiParams dsi;
    RcmParams rcm;
    CameraIntrinsics intrinsics;
    std::string plan_path;
    std::string out_root;
    std::uint64_t seed = 0;

    // Rejects unresolvable paths before any work starts.
    void validate() const;
};

PipelineConfig load_pipeline_config(const std::string& path);

// Deterministic per-stage seed derivation. The standalone subcommands accept
// these seeds explicitly, so a chained invocation reproduces `run` exactly.
std::uint64_t dsi_stage_seed(std::uint64_t global_seed);
std::uint64_t trajectory_stage_seed(std::uint64_t global_seed, const std::string& animation_id,
                                    int variant, int viewpoint);

struct RunReport {
    ClipManifest manifest;
    std::size_t input_frames = 0;
    std::size_t output_frames = 0;
    std::size_t clip_count = 0;
    std::vector<std::pair<std::string, double>> stage_seconds;
    double total_seconds = 0.0;
};

// parse -> convert -> interpolate -> variants+smooth -> trajectories ->
// render/build -> manifest. Every stage writes its artifact under
// out_root/_quarantine; on success the outputs move to out_root/{work,clips,
// manifest.csv}; on failure the quarantine directory is left for inspection.
RunReport run_pipeline(const PipelineConfig& config, Warnings* warnings = nullptr);

std::string run_summary(const RunReport& report);

}  // namespace skelforge
