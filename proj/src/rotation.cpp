#include "skelforge/rotation.hpp"

#include <algorithm>
#include <cmath>

namespace skelforge {

Mat3 euler_rotation(const EulerAngles& e) {
    // beta is elevation-positive, hence the sign flip on rot_y.
    return rot_z(e.gamma) * rot_y(-e.beta) * rot_x(e.alpha);
}

Quat euler_quaternion(const EulerAngles& e) {
    const Quat qz = quat_about({0, 0, 1}, e.gamma);
    const Quat qy = quat_about({0, 1, 0}, -e.beta);
    const Quat qx = quat_about({1, 0, 0}, e.alpha);
    return hamilton(hamilton(qz, qy), qx);
}

GammaBeta euler_gamma_beta(const Vec3& v) {
    const double n = v.norm();
    if (n < 1e-12) throw ValidationError("euler_gamma_beta: zero-length vector");
    const Vec3 u = v / n;
    const double h = std::hypot(u.x, u.y);
    if (h < 1e-9)
        throw RuntimeError("euler_gamma_beta: vector parallel to the z-axis, azimuth undefined");
    return {std::atan2(u.y, u.x), std::atan2(u.z, h)};
}

double euler_alpha(const Vec3& v, const Vec3& r, double gamma, double beta) {
    const double nv = v.norm(), nr = r.norm();
    if (nv < 1e-12 || nr < 1e-12) throw ValidationError("euler_alpha: zero-length input");
    if (cross(v / nv, r / nr).norm() < 1e-9)
        throw RuntimeError("euler_alpha: reference parallel to target, roll undefined");
    // Un-yaw then un-pitch; what remains of r is its pure roll about x.
    const Vec3 r_x = rot_y(beta) * (rot_z(-gamma) * r);
    if (std::hypot(r_x.y, r_x.z) < 1e-9)
        throw RuntimeError("euler_alpha: reference projects to nothing on the yOz plane");
    return std::atan2(r_x.z, r_x.y);
}

AxisAngle axis_angle_between(const Vec3& v0, const Vec3& v1) {
    const double n0 = v0.norm(), n1 = v1.norm();
    if (n0 < 1e-12 || n1 < 1e-12)
        throw ValidationError("axis_angle_between: zero-length vector");
    const Vec3 u0 = v0 / n0, u1 = v1 / n1;
    const Vec3 c = cross(u0, u1);
    const double cn = c.norm();
    const double d = dot(u0, u1);
    if (cn < 1e-12) {
        if (d > 0.0) return {{0, 0, 1}, 0.0};
        // Antiparallel: deterministic perpendicular of u0.
        return {normalized(cross(u0, least_aligned_axis(u0))), kPi};
    }
    return {c / cn, std::atan2(cn, d)};
}

Quat quaternion_from_axis_angle(const Vec3& unit_axis, double theta) {
    if (std::abs(unit_axis.norm() - 1.0) > 1e-9)
        throw ValidationError("quaternion_from_axis_angle: axis is not unit length");
    return canonical(quat_about(unit_axis, theta));
}

Quat quaternion_world_to_local(const Quat& q_child_world, const Quat& q_parent_world) {
    if (!nearly_unit(q_child_world, 1e-6) || !nearly_unit(q_parent_world, 1e-6))
        throw ValidationError("quaternion_world_to_local: non-unit quaternion");
    return hamilton(inverse(q_parent_world), q_child_world);
}

Vec3 point_world_to_local(const Vec3& p_world, const TransformationMatrix& parent_transform) {
    if (!is_rigid(parent_transform.rotation, 1e-9))
        throw ValidationError("point_world_to_local: transform is not rigid");
    return parent_transform.apply_inverse(p_world);
}

namespace {

// Coordinates of a world/parent-frame vector in the joint's rest frame.
Vec3 to_rest_coords(const Mat3& rest_frame, const Vec3& v) {
    return rest_frame.transposed() * v;
}

Quat root_yaw(const SkeletonTopology& topo, const CoordinatePose& pose, Warnings* warnings) {
    const std::size_t root = topo.root_index();
    const auto ref = topo.reference_index(root);
    if (!ref) {
        warn(warnings, "root has no reference_child; heading left at zero yaw");
        return Quat::identity();
    }
    const Vec3 rest = topo.joints[*ref].rest_direction;
    const Vec3 obs = bone_vector(pose, *ref, topo);
    if (std::hypot(rest.x, rest.y) < 1e-9 || std::hypot(obs.x, obs.y) < 1e-9) {
        warn(warnings, "root reference bone is vertical; heading left at zero yaw");
        return Quat::identity();
    }
    const double yaw = std::atan2(obs.y, obs.x) - std::atan2(rest.y, rest.x);
    return canonical(quat_about({0, 0, 1}, yaw));
}

}  // namespace

RotationPose pose_to_rotation(const SkeletonTopology& topo, const CoordinatePose& pose,
                              Warnings* warnings) {
    const std::size_t n = topo.joint_count();
    if (pose.positions.size() != n)
        throw ValidationError("pose_to_rotation: pose joint count does not match topology");
    for (std::size_t j = 0; j < n; ++j)
        if (!pose.positions[j].finite())
            throw ValidationError("pose_to_rotation: non-finite coordinate at joint '" +
                                  topo.joints[j].name + "'");

    RotationPose out;
    out.root_position = pose.positions[topo.root_index()];
    out.local_quaternions.assign(n, Quat::identity());
    out.roll_fallback.assign(n, 0);
    std::vector<Quat> world(n, Quat::identity());

    for (std::size_t j = 0; j < n; ++j) {
        const JointSpec& js = topo.joints[j];
        const auto p = topo.parent_index(j);
        if (!p) {
            const Quat q = root_yaw(topo, pose, warnings);
            out.local_quaternions[j] = q;
            world[j] = q;
            continue;
        }

        Quat local = Quat::identity();
        if (js.dof_class != DofClass::Static) {
            const Vec3 bone = bone_vector(pose, j, topo);
            const double len = bone.norm();
            if (len < 1e-9)
                throw RuntimeError("pose_to_rotation: degenerate bone at joint '" + js.name + "'");
            const Vec3 d_world = bone / len;

            switch (js.dof_class) {
                case DofClass::OneD: {
                    const Vec3 d_local = rotate(conj(world[*p]), d_world);
                    const Vec3 u = to_rest_coords(topo.rest_frame(j), d_local);
                    // Hinge rotation only; the out-of-plane residual is
                    // dropped, which is the projection onto the class.
                    const double pitch = std::atan2(-u.z, u.x);
                    local = quat_about(topo.hinge_axis(j), pitch);
                    break;
                }
                case DofClass::TwoD: {
                    const Vec3 d_local = rotate(conj(world[*p]), d_world);
                    // The minimal rotation has no twist about the bone axis.
                    local = quaternion_from_axis_angle(
                        axis_angle_between(js.rest_direction, d_local));
                    break;
                }
                case DofClass::ThreeD: {
                    const Mat3& rf = topo.rest_frame(j);
                    const Vec3 u = to_rest_coords(rf, d_world);
                    bool fell_back = false;
                    Quat w_world;
                    const auto ref = topo.reference_index(j);
                    Vec3 s{0, 0, 0};
                    if (ref && topo.reference_frame_ok(j)) {
                        const Vec3 rbone = pose.positions[*ref] - pose.positions[j];
                        if (rbone.norm() >= 1e-9) s = to_rest_coords(rf, rbone / rbone.norm());
                    }
                    if (std::hypot(u.x, u.y) < 1e-9) {
                        warn(warnings, "joint '" + js.name +
                                           "': bone vertical in rest frame, roll dropped");
                        fell_back = true;
                    } else if (cross(u, s).norm() < 1e-9) {
                        warn(warnings, "joint '" + js.name +
                                           "': reference collinear with bone, roll dropped");
                        fell_back = true;
                    }
                    if (fell_back) {
                        const Vec3 d_local = rotate(conj(world[*p]), d_world);
                        local = quaternion_from_axis_angle(
                            axis_angle_between(js.rest_direction, d_local));
                        out.roll_fallback[j] = 1;
                        break;
                    }
                    EulerAngles e;
                    const GammaBeta gb = euler_gamma_beta(u);
                    e.gamma = gb.gamma;
                    e.beta = gb.beta;
                    e.alpha = euler_alpha(u, s, e.gamma, e.beta);
                    // World rotation: the rest frame conjugates the rest-space
                    // Euler rotation back into world coordinates.
                    const Quat q_rf = to_quat(rf);
                    w_world = hamilton(hamilton(q_rf, euler_quaternion(e)), conj(q_rf));
                    local = quaternion_world_to_local(w_world, world[*p]);
                    break;
                }
                default:
                    break;
            }
        }

        local = canonical(normalized(local));
        out.local_quaternions[j] = local;
        world[j] = hamilton(world[*p], local);
    }
    return out;
}

RotationSequence sequence_to_rotation(const SkeletonTopology& topo, const CoordinateSequence& seq,
                                      Warnings* warnings) {
    if (seq.frames.empty()) throw ValidationError("sequence_to_rotation: no frames");
    if (seq.fps <= 0.0) throw ValidationError("sequence_to_rotation: fps must be positive");

    RotationSequence out;
    out.fps = seq.fps;
    out.frames.reserve(seq.frames.size());
    out.root_positions.reserve(seq.frames.size());
    for (std::size_t f = 0; f < seq.frames.size(); ++f) {
        try {
            RotationPose rp = pose_to_rotation(topo, seq.frames[f], warnings);
            out.root_positions.push_back(rp.root_position);
            out.frames.push_back(std::move(rp.local_quaternions));
        } catch (const std::runtime_error& e) {
            throw RuntimeError("frame " + std::to_string(f) + ": " + e.what());
        }
    }
    align_hemisphere(out);
    return out;
}

void align_hemisphere(RotationSequence& seq) {
    for (std::size_t f = 1; f < seq.frames.size(); ++f)
        for (std::size_t j = 0; j < seq.frames[f].size(); ++j)
            if (dot(seq.frames[f][j], seq.frames[f - 1][j]) < 0.0) {
                Quat& q = seq.frames[f][j];
                q = {-q.x, -q.y, -q.z, -q.w};
            }
}

bool is_hemisphere_continuous(const RotationSequence& seq) {
    for (std::size_t f = 1; f < seq.frames.size(); ++f)
        for (std::size_t j = 0; j < seq.frames[f].size(); ++j)
            if (dot(seq.frames[f][j], seq.frames[f - 1][j]) < 0.0) return false;
    return true;
}

bool is_dof_respecting(const SkeletonTopology& topo, std::span<const Quat> locals, double tol,
                       std::string* why) {
    if (locals.size() != topo.joint_count()) {
        if (why) *why = "joint count mismatch";
        return false;
    }
    auto fail = [&](std::size_t j, const char* what) {
        if (why) *why = "joint '" + topo.joints[j].name + "': " + what;
        return false;
    };
    for (std::size_t j = 0; j < locals.size(); ++j) {
        const Quat q = normalized(locals[j]);
        const Vec3 v = q.vec();
        switch (topo.joints[j].dof_class) {
            case DofClass::Static:
                if (v.norm() > tol) return fail(j, "static joint rotated");
                break;
            case DofClass::Root:
                if (std::hypot(q.x, q.y) > tol) return fail(j, "root rotation is not yaw-only");
                break;
            case DofClass::OneD: {
                const Vec3 h = topo.hinge_axis(j);
                if (perp_part(v, h).norm() > tol) return fail(j, "rotation leaves the hinge axis");
                break;
            }
            case DofClass::TwoD: {
                const Quat t = twist_about(q, topo.joints[j].rest_direction);
                const double angle = 2.0 * std::acos(std::min(1.0, std::abs(t.w)));
                if (angle > tol) return fail(j, "twist about the bone axis");
                break;
            }
            case DofClass::ThreeD:
                break;
        }
    }
    return true;
}

}  // namespace skelforge
