#include "skelforge/camera.hpp"

#include <cmath>

namespace skelforge {

void RcmParams::validate() const {
    if (!(mag_low <= mag_high)) throw ValidationError("rcm: mag_low must be <= mag_high");
    if (!(theta_low <= theta_high)) throw ValidationError("rcm: theta_low must be <= theta_high");
    if (!(z_low <= z_high)) throw ValidationError("rcm: z_low must be <= z_high");
    if (mag_low < 0.0) throw ValidationError("rcm: mag_low must be nonnegative");
    if (moves < 0) throw ValidationError("rcm: moves must be nonnegative");
    if (hold_frames < 1) throw ValidationError("rcm: hold_frames must be positive");
}

Vec3 rcm_step(const Vec3& pos, const RcmParams& params, Rng& rng) {
    // Draw order is part of the reproducibility contract.
    const double magnitude = rng.uniform(params.mag_low, params.mag_high);
    const double theta = rng.uniform(params.theta_low, params.theta_high);
    const double dz = rng.uniform(params.z_low, params.z_high);
    return pos + Vec3{magnitude * std::cos(theta), magnitude * std::sin(theta), dz};
}

CameraTrajectory rcm_trajectory(const Vec3& origin, const RcmParams& params) {
    params.validate();
    CameraTrajectory traj;
    Rng rng(params.seed);
    // The camera cannot look at its own position; nudge the start.
    Vec3 pos = origin + Vec3{-0.01, 0.0, 0.0};
    traj.poses.push_back({pos, origin, {0, 0, 1}});
    traj.hold_frames.push_back(params.hold_frames);
    for (int m = 0; m < params.moves; ++m) {
        pos = rcm_step(pos, params, rng);
        traj.poses.push_back({pos, origin, {0, 0, 1}});
        traj.hold_frames.push_back(params.hold_frames);
    }
    return traj;
}

CameraBasis look_at_orientation(const CameraPose& pose) {
    const Vec3 view = pose.look_at - pose.position;
    if (view.norm() < 1e-12)
        throw ValidationError("look_at_orientation: camera position equals the target");
    const Vec3 forward = view / view.norm();
    const Vec3 right_raw = cross(forward, pose.up_hint);
    if (right_raw.norm() < 1e-9)
        throw RuntimeError("look_at_orientation: view direction parallel to up_hint");
    const Vec3 right = right_raw / right_raw.norm();
    return {right, cross(right, forward), forward};
}

}  // namespace skelforge
