#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skelforge/math.hpp"
#include "skelforge/skeleton.hpp"

namespace skelforge {

// Extrinsic Tait-Bryan angles applied in x-y-z order about fixed axes:
// roll alpha about x, pitch beta about y, yaw gamma about z. beta is
// elevation-positive (a +beta pitch lifts the +x axis toward +z), which is
// the opposite sense of the right-handed rot_y.
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

struct GammaBeta {
    double gamma = 0.0;
    double beta = 0.0;
};

struct AxisAngle {
    Vec3 axis{0, 0, 1};
    double theta = 0.0;  // radians in [0, pi]
};

// Composite rotation of the angles applied in x-y-z order. Carries (1,0,0)
// to azimuth gamma / elevation beta, and rolls the frame about the bone axis
// by alpha first.
Mat3 euler_rotation(const EulerAngles& e);
Quat euler_quaternion(const EulerAngles& e);

// Signed azimuth (from +x, about z) and elevation (from the xOy plane) of v.
// Throws when v is parallel to the z-axis (projection norm < 1e-9 after
// normalization); callers fall back to the axis-angle path there.
GammaBeta euler_gamma_beta(const Vec3& v);

// Roll about the bone axis recovered from a reference vector r: r is
// un-rotated by the yaw then the pitch of v, and alpha is the signed angle
// from +y to the result's projection onto the yOz plane. Throws when r is
// parallel to v or the projection degenerates.
double euler_alpha(const Vec3& v, const Vec3& r, double gamma, double beta);

// Minimal rotation carrying v0 onto v1: axis from the cross product, angle in
// [0, pi]. Parallel inputs return theta 0 with the fixed axis (0,0,1);
// antiparallel inputs pick the deterministic perpendicular of v0.
AxisAngle axis_angle_between(const Vec3& v0, const Vec3& v1);

// Unit quaternion (sin(theta/2) * axis, cos(theta/2)), hemisphere-canonical.
Quat quaternion_from_axis_angle(const Vec3& unit_axis, double theta);
inline Quat quaternion_from_axis_angle(const AxisAngle& aa) {
    return quaternion_from_axis_angle(aa.axis, aa.theta);
}

// Re-expresses a world rotation in the parent's frame:
// inverse(parent) * child. Both inputs must be unit.
Quat quaternion_world_to_local(const Quat& q_child_world, const Quat& q_parent_world);

// Applies the inverse rigid transform to a world point. Throws when the
// rotation block is not orthonormal with determinant +1.
Vec3 point_world_to_local(const Vec3& p_world, const TransformationMatrix& parent_transform);

// One frame in rotation form: per-joint local quaternions plus the root
// position. roll_fallback marks ThreeD joints whose twist could not be
// recovered (bone vertical in its rest frame, or reference collinear) and was
// replaced by the minimal rotation.
struct RotationPose {
    Vec3 root_position;
    std::vector<Quat> local_quaternions;
    std::vector<std::uint8_t> roll_fallback;
};

struct RotationSequence {
    double fps = 30.0;
    std::vector<Vec3> root_positions;        // per frame
    std::vector<std::vector<Quat>> frames;   // frames[f][j]

    std::size_t frame_count() const { return frames.size(); }
    std::size_t joint_count() const { return frames.empty() ? 0 : frames[0].size(); }
};

// Converts node coordinates to local rotations, parent before child. For each
// joint the world rotation carrying the rest bone direction to the observed
// bone vector is re-expressed in the parent frame and projected onto the
// joint's DOF class.
RotationPose pose_to_rotation(const SkeletonTopology& topology, const CoordinatePose& pose,
                              Warnings* warnings = nullptr);

// Per-frame conversion followed by the sequential hemisphere-alignment pass.
RotationSequence sequence_to_rotation(const SkeletonTopology& topology,
                                      const CoordinateSequence& seq,
                                      Warnings* warnings = nullptr);

// Flips quaternions so consecutive same-joint frames have nonnegative dot.
void align_hemisphere(RotationSequence& seq);
bool is_hemisphere_continuous(const RotationSequence& seq);

// Checks the per-class constraints: Static identity, Root yaw-only, OneD pure
// hinge rotation, TwoD zero twist about the bone axis.
bool is_dof_respecting(const SkeletonTopology& topology, std::span<const Quat> locals,
                       double tol = 1e-6, std::string* why = nullptr);

}  // namespace skelforge
