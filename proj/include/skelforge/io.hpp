#pragma once

#include <string>
#include <vector>

#include "skelforge/camera.hpp"
#include "skelforge/dsi.hpp"
#include "skelforge/render.hpp"
#include "skelforge/rotation.hpp"
#include "skelforge/skeleton.hpp"

namespace skelforge {

// Coordinate sequence document: {fps, joint_names, frames[[x,y,z]...]}, meters.
struct CoordinateFile {
    CoordinateSequence seq;
    std::vector<std::string> joint_names;
};

CoordinateFile parse_coordinate_file(const std::string& path);
void write_coordinate_file(const std::string& path, const CoordinateSequence& seq,
                           const std::vector<std::string>& joint_names);

// Rotation animation document: {fps, joint_order, root_positions, quaternions}
// with quaternions stored [x,y,z,w]. Doubles are serialized with
// shortest-round-trip precision, so read-back is bit exact.
struct RotationFile {
    RotationSequence seq;
    std::vector<std::string> joint_order;
};

RotationFile read_rotation_file(const std::string& path);
void write_rotation_file(const std::string& path, const RotationSequence& seq,
                         const std::vector<std::string>& joint_order);

CameraTrajectory read_trajectory_file(const std::string& path);
void write_trajectory_file(const std::string& path, const CameraTrajectory& traj);

// DsiParams as a JSON object ({threshold, delta, eta, variants, noise_low,
// noise_high, seed, spans}); absent fields keep their defaults.
DsiParams read_dsi_params(const std::string& path);

// Variant set directory: variant_%02d.json per sequence plus index.json
// listing files and the per-variant seeds.
void write_animation_set(const std::string& dir, const AnimationSet& set,
                         const std::vector<std::string>& joint_order);
AnimationSet read_animation_set(const std::string& dir);

}  // namespace skelforge
