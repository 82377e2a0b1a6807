#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skelforge/math.hpp"

namespace skelforge {

// Rotational degrees of freedom of a bone joint. Root turns about the world
// vertical only; ThreeD is unconstrained; TwoD has no twist about the bone
// axis; OneD is a hinge; Static never moves.
enum class DofClass { Root, ThreeD, TwoD, OneD, Static };

const char* to_string(DofClass c);
DofClass dof_class_from_string(const std::string& s);

struct JointSpec {
    int id = 0;
    std::string name;
    std::optional<int> parent;           // document id, not index
    DofClass dof_class = DofClass::Static;
    std::optional<int> reference_child;  // document id; twist reference for ThreeD joints
    double weight = 1.0;                 // contribution to frame-to-frame angular distance
    Vec3 rest_direction{1, 0, 0};        // unit bone direction in the rest pose
};

// The joint hierarchy plus everything derivable from the rest pose that the
// converters need: per-joint rest frames and hinge axes. Immutable after load.
class SkeletonTopology {
public:
    std::vector<JointSpec> joints;       // topological order, parents first
    std::vector<double> bone_lengths;    // meters; ignored for the root

    std::size_t joint_count() const { return joints.size(); }
    std::size_t root_index() const { return root_; }

    std::size_t index_of_id(int id) const;
    std::optional<std::size_t> parent_index(std::size_t j) const;
    std::optional<std::size_t> reference_index(std::size_t j) const;
    const std::vector<std::size_t>& children(std::size_t j) const { return children_[j]; }

    // Orthonormal rest frame of joint j, columns (X0, Y0, Z0): X0 is the rest
    // bone direction, Y0 the twist-reference direction projected off the bone,
    // Z0 their cross product. The root's frame is the world frame.
    const Mat3& rest_frame(std::size_t j) const { return rest_frames_[j]; }

    // True when Y0 comes from a designated, rest-noncollinear reference child
    // rather than the canonical fallback axis.
    bool reference_frame_ok(std::size_t j) const { return ref_ok_[j]; }

    // Hinge axis of a OneD joint, expressed in the parent frame.
    const Vec3& hinge_axis(std::size_t j) const { return hinges_[j]; }

    std::vector<double> weights() const;
    std::vector<std::string> joint_names() const;

    // Called by load_topology; validates invariants and precomputes frames.
    void finalize();

private:
    std::size_t root_ = 0;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<Mat3> rest_frames_;
    std::vector<std::uint8_t> ref_ok_;
    std::vector<Vec3> hinges_;
};

struct CoordinatePose {
    std::vector<Vec3> positions;  // meters, world frame
};

struct CoordinateSequence {
    double fps = 30.0;
    std::vector<CoordinatePose> frames;
};

// Parses and validates a topology document (JSON text with one record per
// joint: id, name, parent, dof_class, reference_child, weight, rest_direction,
// bone_length). rest_direction is normalized on load.
SkeletonTopology load_topology(const std::string& document_text);
SkeletonTopology load_topology_file(const std::string& path);

// The bundled 53-joint configuration (z-up, meters, near-T rest pose with
// slightly bent hinges so twist references are well defined at rest).
const std::string& default_topology_document();
SkeletonTopology default_topology();

// position(joint) - position(parent). Throws for the root.
Vec3 bone_vector(const CoordinatePose& pose, std::size_t joint, const SkeletonTopology& topology);

// Euclidean bone lengths of a pose; the root entry is 0. Throws on a
// degenerate (near-coincident) bone.
std::vector<double> measure_bone_lengths(const CoordinatePose& pose,
                                         const SkeletonTopology& topology);

// Composes local rotations parent-before-child and places every joint at
// parent + world_rotation * (rest_direction * bone_length).
CoordinatePose forward_kinematics(const SkeletonTopology& topology,
                                  std::span<const Quat> local_rotations,
                                  const Vec3& root_position);

// FK with identity rotations.
CoordinatePose rest_pose(const SkeletonTopology& topology, const Vec3& root_position = {});

}  // namespace skelforge
