#include "skelforge/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace skelforge {

namespace fs = std::filesystem;
using nlohmann::json;

void PipelineConfig::validate() const {
    dsi.validate();
    rcm.validate();
    intrinsics.validate();
    if (input_path.empty() || !fs::exists(input_path))
        throw ValidationError("config: input sequence '" + input_path + "' does not exist");
    if (plan_path.empty() || !fs::exists(plan_path))
        throw ValidationError("config: plan document '" + plan_path + "' does not exist");
    if (!topology_path.empty() && !fs::exists(topology_path))
        throw ValidationError("config: topology document '" + topology_path + "' does not exist");
    if (out_root.empty()) throw ValidationError("config: out_root is not set");
    if (animation_id.empty() ||
        animation_id.find_first_of(",\n\r/\\") != std::string::npos)
        throw ValidationError("config: animation_id must be a plain name");
}

PipelineConfig load_pipeline_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open config '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("config '" + path + "' does not parse: " + std::string(e.what()));
    }

    PipelineConfig cfg;
    cfg.topology_path = doc.value("topology", "");
    cfg.input_path = doc.value("input", "");
    cfg.animation_id = doc.value("animation_id", cfg.animation_id);
    cfg.plan_path = doc.value("plan", "");
    cfg.out_root = doc.value("out_root", "");
    cfg.seed = doc.value("seed", 0ULL);

    // Paths in the config resolve relative to the config file.
    const fs::path base = fs::path(path).parent_path();
    auto resolve = [&](std::string& p) {
        if (!p.empty() && fs::path(p).is_relative()) p = (base / p).string();
    };
    resolve(cfg.topology_path);
    resolve(cfg.input_path);
    resolve(cfg.plan_path);
    resolve(cfg.out_root);

    if (doc.contains("dsi")) {
        const json& d = doc["dsi"];
        cfg.dsi.threshold = d.value("threshold", cfg.dsi.threshold);
        cfg.dsi.delta = d.value("delta", cfg.dsi.delta);
        cfg.dsi.eta = d.value("eta", cfg.dsi.eta);
        cfg.dsi.variants = d.value("variants", cfg.dsi.variants);
        cfg.dsi.noise_low = d.value("noise_low", cfg.dsi.noise_low);
        cfg.dsi.noise_high = d.value("noise_high", cfg.dsi.noise_high);
        if (d.contains("spans")) {
            cfg.dsi.spans.clear();
            for (const auto& s : d["spans"]) cfg.dsi.spans.push_back(s.get<double>());
        }
    }
    if (doc.contains("rcm")) {
        const json& r = doc["rcm"];
        cfg.rcm.mag_low = r.value("mag_low", cfg.rcm.mag_low);
        cfg.rcm.mag_high = r.value("mag_high", cfg.rcm.mag_high);
        cfg.rcm.theta_low = r.value("theta_low", cfg.rcm.theta_low);
        cfg.rcm.theta_high = r.value("theta_high", cfg.rcm.theta_high);
        cfg.rcm.z_low = r.value("z_low", cfg.rcm.z_low);
        cfg.rcm.z_high = r.value("z_high", cfg.rcm.z_high);
        cfg.rcm.moves = r.value("moves", cfg.rcm.moves);
        cfg.rcm.hold_frames = r.value("hold_frames", cfg.rcm.hold_frames);
    }
    if (doc.contains("intrinsics")) {
        const json& i = doc["intrinsics"];
        cfg.intrinsics.width = i.value("width", cfg.intrinsics.width);
        cfg.intrinsics.height = i.value("height", cfg.intrinsics.height);
        cfg.intrinsics.focal_px = i.value("focal_px", cfg.intrinsics.focal_px);
        cfg.intrinsics.cx = i.value("cx", cfg.intrinsics.width / 2.0);
        cfg.intrinsics.cy = i.value("cy", cfg.intrinsics.height / 2.0);
    }
    return cfg;
}

std::uint64_t dsi_stage_seed(std::uint64_t global_seed) { return sub_seed(global_seed, "dsi"); }

std::uint64_t trajectory_stage_seed(std::uint64_t global_seed, const std::string& animation_id,
                                    int variant, int viewpoint) {
    return sub_seed(global_seed, "rcm", animation_id, static_cast<std::uint64_t>(variant),
                    static_cast<std::uint64_t>(viewpoint));
}

namespace {

class StageTimer {
public:
    explicit StageTimer(RunReport& report) : report_(report) {}

    template <typename F>
    auto run(const std::string& name, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            if constexpr (std::is_void_v<decltype(f())>) {
                f();
                record(name, t0);
            } else {
                auto result = f();
                record(name, t0);
                return result;
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const std::runtime_error& e) {
            throw RuntimeError("stage " + name + ": " + e.what());
        }
    }

private:
    void record(const std::string& name, std::chrono::steady_clock::time_point t0) {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.stage_seconds.emplace_back(name, s);
        report_.total_seconds += s;
    }

    RunReport& report_;
};

}  // namespace

RunReport run_pipeline(const PipelineConfig& config, Warnings* warnings) {
    config.validate();
    RunReport report;
    StageTimer timer(report);

    const fs::path out_root = config.out_root;
    const fs::path quarantine = out_root / "_quarantine";
    fs::remove_all(quarantine);
    const fs::path work = quarantine / "work";
    fs::create_directories(work);

    const SkeletonTopology topology = timer.run("topology", [&] {
        return config.topology_path.empty() ? default_topology()
                                            : load_topology_file(config.topology_path);
    });
    const std::vector<std::string> names = topology.joint_names();
    const std::vector<double> weights = topology.weights();

    const RecordingPlan plan = timer.run("plan", [&] { return build_plan_file(config.plan_path); });
    for (const PlannedClip& clip : plan.clips) {
        if (clip.animation_id != config.animation_id)
            throw ValidationError("plan references animation '" + clip.animation_id +
                                  "' but the config provides '" + config.animation_id + "'");
        if (clip.variant_id >= config.dsi.variants)
            throw ValidationError("plan asks for variant " + std::to_string(clip.variant_id) +
                                  " but dsi.variants is " + std::to_string(config.dsi.variants));
    }

    // convert
    const RotationSequence rotation = timer.run("convert", [&] {
        const CoordinateFile coords = parse_coordinate_file(config.input_path);
        if (coords.joint_names != names)
            throw ValidationError("input joint_names do not match the topology joint order");
        RotationSequence seq = sequence_to_rotation(topology, coords.seq, warnings);
        write_rotation_file((work / "rot.json").string(), seq, names);
        report.input_frames = seq.frame_count();
        return seq;
    });

    // interpolate
    DsiParams dsi = config.dsi;
    dsi.seed = dsi_stage_seed(config.seed);
    const RotationSequence interpolated = timer.run("interpolate", [&] {
        DsiInterpolation interp = dsi_interpolate(rotation, dsi, weights, warnings);
        write_rotation_file((work / "interp.json").string(), interp.seq, names);
        report.output_frames = interp.seq.frame_count();
        return interp.seq;
    });

    // variants + smoothing
    const fs::path variants_root = work / "variants";
    const AnimationSet animation_set = timer.run("variants", [&] {
        AnimationSet set = variants_and_smooth(interpolated, dsi, warnings);
        write_animation_set((variants_root / config.animation_id).string(), set, names);
        return set;
    });

    // camera trajectories, one per planned (variant, viewpoint)
    const fs::path traj_root = work / "traj" / config.animation_id;
    timer.run("camera", [&] {
        fs::create_directories(traj_root);
        for (const PlannedClip& clip : plan.clips) {
            RcmParams rcm = config.rcm;
            rcm.seed = trajectory_stage_seed(config.seed, clip.animation_id, clip.variant_id,
                                             clip.viewpoint_id);
            const Vec3 origin = animation_set.sequences[clip.variant_id].root_positions.front();
            const CameraTrajectory traj = rcm_trajectory(origin, rcm);
            char name[48];
            std::snprintf(name, sizeof(name), "v%02d_w%02d.json", clip.variant_id,
                          clip.viewpoint_id);
            write_trajectory_file((traj_root / name).string(), traj);
        }
    });

    // render + manifest
    const ClipManifest manifest = timer.run("build", [&] {
        std::map<std::string, AnimationSet> sets;
        sets.emplace(config.animation_id, animation_set);
        TrajectoryProvider provider = [&](const PlannedClip& clip) {
            char name[48];
            std::snprintf(name, sizeof(name), "v%02d_w%02d.json", clip.variant_id,
                          clip.viewpoint_id);
            return read_trajectory_file((traj_root / name).string());
        };
        ClipManifest m = execute_plan(plan, sets, provider, topology, config.intrinsics,
                                      quarantine / "clips");
        write_manifest(m, quarantine / "manifest.csv");
        return m;
    });

    // Promote the quarantined outputs.
    timer.run("publish", [&] {
        fs::remove_all(out_root / "work");
        fs::remove_all(out_root / "clips");
        fs::remove(out_root / "manifest.csv");
        fs::rename(work, out_root / "work");
        fs::rename(quarantine / "clips", out_root / "clips");
        fs::rename(quarantine / "manifest.csv", out_root / "manifest.csv");
        fs::remove_all(quarantine);
    });

    report.manifest = manifest;
    report.clip_count = manifest.records.size();
    return report;
}

std::string run_summary(const RunReport& report) {
    std::ostringstream out;
    out << "clips: " << report.clip_count << "\n";
    out << "frames: " << report.input_frames << " -> " << report.output_frames << "\n";
    for (const auto& [name, seconds] : report.stage_seconds) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "  %-12s %8.3f s", name.c_str(), seconds);
        out << buf << "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "total: %.3f s", report.total_seconds);
    out << buf << "\n";
    return out.str();
}

}  // namespace skelforge
