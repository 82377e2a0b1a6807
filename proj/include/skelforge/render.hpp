#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skelforge/camera.hpp"
#include "skelforge/rotation.hpp"
#include "skelforge/skeleton.hpp"

namespace skelforge {

struct CameraIntrinsics {
    double focal_px = 500.0;
    double cx = 320.0, cy = 240.0;
    int width = 640, height = 480;

    void validate() const;
};

struct RasterFrame {
    int width = 0, height = 0;
    std::vector<std::uint8_t> pixels;  // RGB, row-major
    bool blank = false;                // every joint was behind the camera

    std::uint8_t* at(int x, int y) { return pixels.data() + 3 * (y * width + x); }
};

struct Projection {
    bool behind = false;
    double u = 0.0, v = 0.0;
};

// Pinhole projection through the look-at basis. Points with forward depth
// <= 1e-6 m report behind-camera instead of projecting.
Projection project(const Vec3& point_world, const CameraPose& pose,
                   const CameraIntrinsics& intr);

// Stick figure: one line segment per bone, a filled disc per joint, colored by
// DOF class, on a solid background. Deterministic bytes for identical inputs.
RasterFrame render_frame(const CoordinatePose& pose, const SkeletonTopology& topology,
                         const CameraPose& cam, const CameraIntrinsics& intr);

// Per-frame FK and rendering with the camera pose active under the
// trajectory's hold_frames schedule, cycling when the poses run out.
std::vector<RasterFrame> render_clip(const RotationSequence& seq,
                                     const SkeletonTopology& topology,
                                     const CameraTrajectory& traj,
                                     const CameraIntrinsics& intr);
std::vector<RasterFrame> render_clip(const CoordinateSequence& seq,
                                     const SkeletonTopology& topology,
                                     const CameraTrajectory& traj,
                                     const CameraIntrinsics& intr);

// Index of the trajectory pose active for animation frame `frame`.
std::size_t camera_pose_for_frame(const CameraTrajectory& traj, std::size_t frame);

// Binary PPM (P6), bit-exact.
void write_ppm(const RasterFrame& frame, const std::string& path);
std::string ppm_bytes(const RasterFrame& frame);

}  // namespace skelforge
