#pragma once

#include <cstdint>
#include <vector>

#include "skelforge/math.hpp"
#include "skelforge/rng.hpp"

namespace skelforge {

struct RcmParams {
    double mag_low = 1.0, mag_high = 3.0;      // horizontal step length, meters
    double theta_low = -kPi, theta_high = kPi; // step azimuth, radians
    double z_low = -0.5, z_high = 0.5;         // signed vertical step, meters
    int moves = 8;
    int hold_frames = 30;
    std::uint64_t seed = 0;

    void validate() const;
};

struct CameraPose {
    Vec3 position;
    Vec3 look_at;           // the character origin
    Vec3 up_hint{0, 0, 1};
};

struct CameraTrajectory {
    std::vector<CameraPose> poses;
    std::vector<int> hold_frames;  // per pose
};

struct CameraBasis {
    Vec3 right, up, forward;
};

// One random move: draws (magnitude, theta, z) in that fixed order and
// returns pos + (mag*cos(theta), mag*sin(theta), z).
Vec3 rcm_step(const Vec3& pos, const RcmParams& params, Rng& rng);

// Pose 0 sits at the origin (nudged 0.01 m along -x so the view is defined),
// every later pose extends the walk by rcm_step, and every pose looks at the
// origin. Same params and seed give a byte-identical trajectory.
CameraTrajectory rcm_trajectory(const Vec3& origin, const RcmParams& params);

// Orthonormal view basis: forward toward the target, right = forward x up_hint,
// up completing the frame. Throws when the view direction is parallel to
// up_hint.
CameraBasis look_at_orientation(const CameraPose& pose);

}  // namespace skelforge
