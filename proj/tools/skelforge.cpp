#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "skelforge/pipeline.hpp"

namespace fs = std::filesystem;
using namespace skelforge;

namespace {

Vec3 parse_xyz(const std::string& s) {
    Vec3 v;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3)
        throw ValidationError("expected x,y,z but got '" + s + "'");
    return v;
}

SkeletonTopology topology_or_default(const std::string& path) {
    return path.empty() ? default_topology() : load_topology_file(path);
}

void add_intrinsics_flags(CLI::App* cmd, CameraIntrinsics& intr, double& cx, double& cy) {
    cmd->add_option("--width", intr.width, "Frame width in pixels");
    cmd->add_option("--height", intr.height, "Frame height in pixels");
    cmd->add_option("--focal", intr.focal_px, "Focal length in pixels");
    cmd->add_option("--cx", cx, "Principal point x (default: center)");
    cmd->add_option("--cy", cy, "Principal point y (default: center)");
}

CameraIntrinsics finish_intrinsics(CameraIntrinsics intr, double cx, double cy) {
    intr.cx = cx >= 0.0 ? cx : intr.width / 2.0;
    intr.cy = cy >= 0.0 ? cy : intr.height / 2.0;
    intr.validate();
    return intr;
}

void print_warnings(const Warnings& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skelforge: turns coordinate skeleton sequences into rotation animations, "
                 "random camera paths and auto-labeled stick-figure datasets"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Global seed; stages derive independent streams from it");

    // convert
    auto* convert = app.add_subcommand("convert", "Coordinate sequence to rotation animation");
    std::string cv_topology, cv_in, cv_out;
    convert->add_option("--topology", cv_topology, "Topology document (default: bundled 53-joint)");
    convert->add_option("--in", cv_in, "Coordinate sequence file")->required();
    convert->add_option("--out", cv_out, "Rotation animation file")->required();

    // interpolate
    auto* interpolate = app.add_subcommand("interpolate", "Segment and interpolate a rotation animation");
    std::string ip_topology, ip_in, ip_out, ip_params;
    interpolate->add_option("--topology", ip_topology, "Topology document for joint weights");
    interpolate->add_option("--in", ip_in, "Rotation animation file")->required();
    interpolate->add_option("--out", ip_out, "Interpolated rotation animation file")->required();
    interpolate->add_option("--params", ip_params, "DSI params document");

    // variants
    auto* variants = app.add_subcommand("variants", "Random variants plus supersmoothing");
    std::string va_in, va_out, va_params;
    int va_count = -1;
    std::uint64_t va_seed = 0;
    bool va_seed_given = false;
    variants->add_option("--in", va_in, "Interpolated rotation animation file")->required();
    variants->add_option("--out-dir", va_out, "Directory for variant files and index")->required();
    variants->add_option("--params", va_params, "DSI params document");
    variants->add_option("--count", va_count, "Number of variants");
    variants->add_option("--seed", va_seed, "Stage seed (overrides params and global)")
        ->each([&](const std::string&) { va_seed_given = true; });

    // camera
    auto* camera = app.add_subcommand("camera", "Generate one random camera trajectory");
    std::string cm_origin = "0,0,0", cm_out;
    RcmParams cm_params;
    std::uint64_t cm_seed = 0;
    bool cm_seed_given = false;
    camera->add_option("--origin", cm_origin, "Character origin x,y,z");
    camera->add_option("--moves", cm_params.moves, "Number of camera moves");
    camera->add_option("--hold", cm_params.hold_frames, "Frames held per position");
    camera->add_option("--mag-low", cm_params.mag_low, "Min horizontal step, meters");
    camera->add_option("--mag-high", cm_params.mag_high, "Max horizontal step, meters");
    camera->add_option("--theta-low", cm_params.theta_low, "Min step azimuth, radians");
    camera->add_option("--theta-high", cm_params.theta_high, "Max step azimuth, radians");
    camera->add_option("--z-low", cm_params.z_low, "Min vertical step, meters");
    camera->add_option("--z-high", cm_params.z_high, "Max vertical step, meters");
    camera->add_option("--seed", cm_seed, "Trajectory seed (overrides global)")
        ->each([&](const std::string&) { cm_seed_given = true; });
    camera->add_option("--out", cm_out, "Trajectory file")->required();

    // render
    auto* render = app.add_subcommand("render", "Render a rotation animation through a trajectory");
    std::string rd_topology, rd_in, rd_traj, rd_out;
    CameraIntrinsics rd_intr;
    double rd_cx = -1.0, rd_cy = -1.0;
    render->add_option("--topology", rd_topology, "Topology document");
    render->add_option("--in", rd_in, "Rotation animation file")->required();
    render->add_option("--traj", rd_traj, "Trajectory file")->required();
    render->add_option("--out", rd_out, "Output frame directory")->required();
    add_intrinsics_flags(render, rd_intr, rd_cx, rd_cy);

    // build
    auto* build = app.add_subcommand("build", "Render a recording plan into a labeled dataset");
    std::string bd_plan, bd_topology, bd_variants, bd_traj, bd_out;
    CameraIntrinsics bd_intr;
    double bd_cx = -1.0, bd_cy = -1.0;
    build->add_option("--plan", bd_plan, "Recording plan document")->required();
    build->add_option("--topology", bd_topology, "Topology document");
    build->add_option("--variants-root", bd_variants, "Directory with <animation_id>/variant files")
        ->required();
    build->add_option("--traj-root", bd_traj, "Directory with <animation_id>/v##_w##.json files")
        ->required();
    build->add_option("--out", bd_out, "Dataset root")->required();
    add_intrinsics_flags(build, bd_intr, bd_cx, bd_cy);

    // run
    auto* run = app.add_subcommand("run", "Execute the whole pipeline from a config");
    std::string rn_config;
    run->add_option("--config", rn_config, "Pipeline config document")->required();

    // Let the global --seed appear after a subcommand name as well.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Warnings warnings;
    try {
        if (convert->parsed()) {
            const SkeletonTopology topo = topology_or_default(cv_topology);
            const CoordinateFile coords = parse_coordinate_file(cv_in);
            if (coords.joint_names != topo.joint_names())
                throw ValidationError("input joint_names do not match the topology joint order");
            const RotationSequence seq = sequence_to_rotation(topo, coords.seq, &warnings);
            write_rotation_file(cv_out, seq, topo.joint_names());
            std::cout << "wrote " << cv_out << " (" << seq.frame_count() << " frames)\n";
        } else if (interpolate->parsed()) {
            const SkeletonTopology topo = topology_or_default(ip_topology);
            DsiParams params = ip_params.empty() ? DsiParams{} : read_dsi_params(ip_params);
            const RotationFile rot = read_rotation_file(ip_in);
            const DsiInterpolation interp =
                dsi_interpolate(rot.seq, params, topo.weights(), &warnings);
            write_rotation_file(ip_out, interp.seq, rot.joint_order);
            std::cout << "wrote " << ip_out << " (" << rot.seq.frame_count() << " -> "
                      << interp.seq.frame_count() << " frames)\n";
        } else if (variants->parsed()) {
            DsiParams params = va_params.empty() ? DsiParams{} : read_dsi_params(va_params);
            if (va_count > 0) params.variants = va_count;
            if (va_seed_given) params.seed = va_seed;
            const RotationFile rot = read_rotation_file(va_in);
            const AnimationSet set = variants_and_smooth(rot.seq, params, &warnings);
            write_animation_set(va_out, set, rot.joint_order);
            std::cout << "wrote " << set.sequences.size() << " variants under " << va_out << "\n";
        } else if (camera->parsed()) {
            cm_params.seed = cm_seed_given ? cm_seed : seed;
            const CameraTrajectory traj = rcm_trajectory(parse_xyz(cm_origin), cm_params);
            write_trajectory_file(cm_out, traj);
            std::cout << "wrote " << cm_out << " (" << traj.poses.size() << " poses)\n";
        } else if (render->parsed()) {
            const SkeletonTopology topo = topology_or_default(rd_topology);
            const RotationFile rot = read_rotation_file(rd_in);
            const CameraTrajectory traj = read_trajectory_file(rd_traj);
            const CameraIntrinsics intr = finish_intrinsics(rd_intr, rd_cx, rd_cy);
            const std::vector<RasterFrame> frames = render_clip(rot.seq, topo, traj, intr);
            fs::create_directories(rd_out);
            for (std::size_t f = 0; f < frames.size(); ++f) {
                char name[32];
                std::snprintf(name, sizeof(name), "frame_%06zu.ppm", f);
                write_ppm(frames[f], (fs::path(rd_out) / name).string());
            }
            std::cout << "wrote " << frames.size() << " frames under " << rd_out << "\n";
        } else if (build->parsed()) {
            const SkeletonTopology topo = topology_or_default(bd_topology);
            const CameraIntrinsics intr = finish_intrinsics(bd_intr, bd_cx, bd_cy);
            const RecordingPlan plan = build_plan_file(bd_plan);
            std::set<std::string> ids;
            for (const auto& clip : plan.clips) ids.insert(clip.animation_id);
            std::map<std::string, AnimationSet> sets;
            for (const auto& id : ids)
                sets.emplace(id, read_animation_set((fs::path(bd_variants) / id).string()));
            TrajectoryProvider provider = [&](const PlannedClip& clip) {
                char name[48];
                std::snprintf(name, sizeof(name), "v%02d_w%02d.json", clip.variant_id,
                              clip.viewpoint_id);
                return read_trajectory_file(
                    (fs::path(bd_traj) / clip.animation_id / name).string());
            };
            const ClipManifest manifest =
                execute_plan(plan, sets, provider, topo, intr, fs::path(bd_out) / "clips");
            write_manifest(manifest, fs::path(bd_out) / "manifest.csv");
            std::cout << "wrote " << manifest.records.size() << " clips under " << bd_out << "\n";
        } else if (run->parsed()) {
            PipelineConfig config = load_pipeline_config(rn_config);
            if (app.count("--seed") > 0) config.seed = seed;
            const RunReport report = run_pipeline(config, &warnings);
            print_warnings(warnings);
            std::cout << run_summary(report);
            return 0;
        }
        print_warnings(warnings);
        return 0;
    } catch (const ValidationError& e) {
        print_warnings(warnings);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        print_warnings(warnings);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
