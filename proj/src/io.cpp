#include "skelforge/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace skelforge {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json load_json(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(std::string("cannot open ") + what + " '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string(what) + " '" + path + "' does not parse: " + e.what());
    }
}

void dump_json(const json& doc, const std::string& path, const char* what) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RuntimeError(std::string("cannot write ") + what + " '" + path + "'");
    out << doc.dump(1) << '\n';
    if (!out) throw RuntimeError(std::string("short write on ") + what + " '" + path + "'");
}

double finite_number(const json& v, const std::string& where) {
    if (!v.is_number())
        throw ValidationError(where + " is not a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ValidationError(where + " is not finite");
    return d;
}

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec3_at(const json& a, const std::string& where) {
    if (!a.is_array() || a.size() != 3)
        throw ValidationError(where + " must be a 3-element array");
    return {finite_number(a[0], where + "[0]"), finite_number(a[1], where + "[1]"),
            finite_number(a[2], where + "[2]")};
}

}  // namespace

CoordinateFile parse_coordinate_file(const std::string& path) {
    const json doc = load_json(path, "coordinate file");
    CoordinateFile out;
    if (!doc.contains("fps")) throw ValidationError("coordinate file is missing 'fps'");
    out.seq.fps = finite_number(doc["fps"], "fps");
    if (out.seq.fps <= 0.0) throw ValidationError("coordinate file fps must be positive");

    if (!doc.contains("joint_names") || !doc["joint_names"].is_array())
        throw ValidationError("coordinate file is missing 'joint_names'");
    for (const auto& n : doc["joint_names"]) out.joint_names.push_back(n.get<std::string>());

    if (!doc.contains("frames") || !doc["frames"].is_array() || doc["frames"].empty())
        throw ValidationError("coordinate file needs at least one frame");
    const std::size_t joints = out.joint_names.size();
    std::size_t fno = 0;
    for (const auto& frame : doc["frames"]) {
        if (!frame.is_array() || frame.size() != joints)
            throw ValidationError("frame " + std::to_string(fno) + " does not have " +
                                  std::to_string(joints) + " joints");
        CoordinatePose pose;
        for (std::size_t j = 0; j < joints; ++j)
            pose.positions.push_back(vec3_at(
                frame[j], "frame " + std::to_string(fno) + " joint '" + out.joint_names[j] + "'"));
        out.seq.frames.push_back(std::move(pose));
        ++fno;
    }
    return out;
}

void write_coordinate_file(const std::string& path, const CoordinateSequence& seq,
                           const std::vector<std::string>& joint_names) {
    json doc;
    doc["fps"] = seq.fps;
    doc["joint_names"] = joint_names;
    json frames = json::array();
    for (const auto& pose : seq.frames) {
        json frame = json::array();
        for (const auto& p : pose.positions) frame.push_back(to_json(p));
        frames.push_back(std::move(frame));
    }
    doc["frames"] = std::move(frames);
    dump_json(doc, path, "coordinate file");
}

RotationFile read_rotation_file(const std::string& path) {
    const json doc = load_json(path, "rotation file");
    RotationFile out;
    out.seq.fps = finite_number(doc.at("fps"), "fps");
    if (out.seq.fps <= 0.0) throw ValidationError("rotation file fps must be positive");
    for (const auto& n : doc.at("joint_order")) out.joint_order.push_back(n.get<std::string>());
    const std::size_t joints = out.joint_order.size();

    const json& roots = doc.at("root_positions");
    const json& quats = doc.at("quaternions");
    if (!roots.is_array() || !quats.is_array() || roots.size() != quats.size() || roots.empty())
        throw ValidationError("rotation file frame arrays are inconsistent");
    for (std::size_t f = 0; f < roots.size(); ++f) {
        out.seq.root_positions.push_back(vec3_at(roots[f], "root_positions[" + std::to_string(f) + "]"));
        const json& frame = quats[f];
        if (!frame.is_array() || frame.size() != joints)
            throw ValidationError("quaternion frame " + std::to_string(f) +
                                  " does not match joint_order");
        std::vector<Quat> qs;
        qs.reserve(joints);
        for (std::size_t j = 0; j < joints; ++j) {
            const json& q = frame[j];
            if (!q.is_array() || q.size() != 4)
                throw ValidationError("quaternion at frame " + std::to_string(f) + " joint " +
                                      std::to_string(j) + " must be [x,y,z,w]");
            const std::string where = "quaternion[" + std::to_string(f) + "][" + std::to_string(j) + "]";
            qs.push_back({finite_number(q[0], where), finite_number(q[1], where),
                          finite_number(q[2], where), finite_number(q[3], where)});
        }
        out.seq.frames.push_back(std::move(qs));
    }
    return out;
}

void write_rotation_file(const std::string& path, const RotationSequence& seq,
                         const std::vector<std::string>& joint_order) {
    json doc;
    doc["fps"] = seq.fps;
    doc["joint_order"] = joint_order;
    json roots = json::array();
    for (const auto& p : seq.root_positions) roots.push_back(to_json(p));
    doc["root_positions"] = std::move(roots);
    json frames = json::array();
    for (const auto& frame : seq.frames) {
        json fj = json::array();
        for (const auto& q : frame) fj.push_back(json::array({q.x, q.y, q.z, q.w}));
        frames.push_back(std::move(fj));
    }
    doc["quaternions"] = std::move(frames);
    dump_json(doc, path, "rotation file");
}

CameraTrajectory read_trajectory_file(const std::string& path) {
    const json doc = load_json(path, "trajectory file");
    CameraTrajectory traj;
    if (!doc.contains("poses") || !doc["poses"].is_array() || doc["poses"].empty())
        throw ValidationError("trajectory file has no poses");
    std::size_t i = 0;
    for (const auto& p : doc["poses"]) {
        CameraPose pose;
        pose.position = vec3_at(p.at("position"), "pose " + std::to_string(i) + " position");
        pose.look_at = vec3_at(p.at("look_at"), "pose " + std::to_string(i) + " look_at");
        if (p.contains("up_hint"))
            pose.up_hint = vec3_at(p["up_hint"], "pose " + std::to_string(i) + " up_hint");
        traj.poses.push_back(pose);
        const int hold = p.value("hold_frames", 1);
        if (hold < 1)
            throw ValidationError("pose " + std::to_string(i) + " hold_frames must be positive");
        traj.hold_frames.push_back(hold);
        ++i;
    }
    return traj;
}

void write_trajectory_file(const std::string& path, const CameraTrajectory& traj) {
    json poses = json::array();
    for (std::size_t i = 0; i < traj.poses.size(); ++i) {
        json p;
        p["position"] = to_json(traj.poses[i].position);
        p["look_at"] = to_json(traj.poses[i].look_at);
        p["up_hint"] = to_json(traj.poses[i].up_hint);
        p["hold_frames"] = traj.hold_frames[i];
        poses.push_back(std::move(p));
    }
    json doc;
    doc["poses"] = std::move(poses);
    dump_json(doc, path, "trajectory file");
}

namespace {

DsiParams dsi_params_from_json(const json& j) {
    DsiParams p;
    p.threshold = j.value("threshold", p.threshold);
    p.delta = j.value("delta", p.delta);
    p.eta = j.value("eta", p.eta);
    p.variants = j.value("variants", p.variants);
    p.noise_low = j.value("noise_low", p.noise_low);
    p.noise_high = j.value("noise_high", p.noise_high);
    p.seed = j.value("seed", p.seed);
    if (j.contains("spans")) {
        p.spans.clear();
        for (const auto& s : j["spans"]) p.spans.push_back(s.get<double>());
    }
    p.validate();
    return p;
}

}  // namespace

DsiParams read_dsi_params(const std::string& path) {
    return dsi_params_from_json(load_json(path, "dsi params file"));
}

void write_animation_set(const std::string& dir, const AnimationSet& set,
                         const std::vector<std::string>& joint_order) {
    fs::create_directories(dir);
    json index;
    index["variants"] = json::array();
    for (std::size_t v = 0; v < set.sequences.size(); ++v) {
        char name[32];
        std::snprintf(name, sizeof(name), "variant_%02zu.json", v);
        write_rotation_file((fs::path(dir) / name).string(), set.sequences[v], joint_order);
        json entry;
        entry["file"] = name;
        entry["seed"] = set.variant_seeds[v];
        index["variants"].push_back(std::move(entry));
    }
    dump_json(index, (fs::path(dir) / "index.json").string(), "variant index");
}

AnimationSet read_animation_set(const std::string& dir) {
    const json index = load_json((fs::path(dir) / "index.json").string(), "variant index");
    AnimationSet set;
    if (!index.contains("variants") || !index["variants"].is_array() || index["variants"].empty())
        throw ValidationError("variant index in '" + dir + "' lists no variants");
    for (const auto& entry : index["variants"]) {
        const std::string file = entry.at("file").get<std::string>();
        set.sequences.push_back(read_rotation_file((fs::path(dir) / file).string()).seq);
        set.variant_seeds.push_back(entry.value("seed", 0ULL));
    }
    return set;
}

}  // namespace skelforge
