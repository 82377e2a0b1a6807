#include "skelforge/skeleton.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace skelforge {

using nlohmann::json;

const char* to_string(DofClass c) {
    switch (c) {
        case DofClass::Root: return "Root";
        case DofClass::ThreeD: return "ThreeD";
        case DofClass::TwoD: return "TwoD";
        case DofClass::OneD: return "OneD";
        case DofClass::Static: return "Static";
    }
    return "Static";
}

DofClass dof_class_from_string(const std::string& s) {
    if (s == "Root") return DofClass::Root;
    if (s == "ThreeD") return DofClass::ThreeD;
    if (s == "TwoD") return DofClass::TwoD;
    if (s == "OneD") return DofClass::OneD;
    if (s == "Static") return DofClass::Static;
    throw ValidationError("unknown dof_class '" + s + "'");
}

std::size_t SkeletonTopology::index_of_id(int id) const {
    for (std::size_t i = 0; i < joints.size(); ++i)
        if (joints[i].id == id) return i;
    throw ValidationError("unknown joint id " + std::to_string(id));
}

std::optional<std::size_t> SkeletonTopology::parent_index(std::size_t j) const {
    if (!joints[j].parent) return std::nullopt;
    return index_of_id(*joints[j].parent);
}

std::optional<std::size_t> SkeletonTopology::reference_index(std::size_t j) const {
    if (!joints[j].reference_child) return std::nullopt;
    return index_of_id(*joints[j].reference_child);
}

void SkeletonTopology::finalize() {
    const std::size_t n = joints.size();
    if (n == 0) throw ValidationError("topology has no joints");
    if (bone_lengths.size() != n) throw ValidationError("bone_lengths count mismatch");

    std::unordered_map<int, std::size_t> index_by_id;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_by_id.emplace(joints[i].id, i).second)
            throw ValidationError("duplicate joint id " + std::to_string(joints[i].id));
    }

    std::size_t roots = 0;
    children_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        const JointSpec& js = joints[i];
        if (js.dof_class == DofClass::Root) {
            if (js.parent) throw ValidationError("root joint '" + js.name + "' has a parent");
            root_ = i;
            ++roots;
        } else if (!js.parent) {
            throw ValidationError("non-root joint '" + js.name + "' has no parent");
        }
        if (js.parent) {
            auto it = index_by_id.find(*js.parent);
            if (it == index_by_id.end())
                throw ValidationError("joint '" + js.name + "' references unknown parent id " +
                                      std::to_string(*js.parent));
            // Parent-before-child ordering doubles as the acyclicity check; a
            // self- or forward-reference closes a cycle.
            if (it->second >= i)
                throw ValidationError("cycle detected: joint '" + js.name +
                                      "' must appear after its parent");
            children_[it->second].push_back(i);
        }
        if (js.weight < 0.0)
            throw ValidationError("joint '" + js.name + "' has negative weight");
        if (js.dof_class != DofClass::Root && bone_lengths[i] <= 0.0)
            throw ValidationError("joint '" + js.name + "' has nonpositive bone length");
        const double dn = js.rest_direction.norm();
        if (dn < 1e-12)
            throw ValidationError("joint '" + js.name + "' has a degenerate rest_direction");
        joints[i].rest_direction = js.rest_direction / dn;
    }
    if (roots != 1) throw ValidationError("topology must have exactly one Root joint");

    for (std::size_t i = 0; i < n; ++i) {
        const JointSpec& js = joints[i];
        if (js.reference_child) {
            auto it = index_by_id.find(*js.reference_child);
            if (it == index_by_id.end() || parent_index(it->second) != std::optional<std::size_t>(i))
                throw ValidationError("joint '" + js.name +
                                      "' reference_child is not one of its children");
        } else if (js.dof_class == DofClass::ThreeD) {
            throw ValidationError("ThreeD joint '" + js.name + "' has no reference_child");
        }
    }

    // Rest frames. X0 = rest bone direction; Y0 from the reference child's
    // rest direction projected off the bone, falling back to the canonical
    // least-aligned axis; OneD joints instead take Y0 as their hinge, the
    // normal of the plane spanned by the parent bone and their own bone.
    rest_frames_.assign(n, Mat3::identity());
    ref_ok_.assign(n, 0);
    hinges_.assign(n, Vec3{0, 1, 0});
    for (std::size_t i = 0; i < n; ++i) {
        const JointSpec& js = joints[i];
        if (js.dof_class == DofClass::Root) {
            ref_ok_[i] = 1;
            continue;  // world frame
        }
        const Vec3 x0 = js.rest_direction;
        Vec3 y0;
        bool ok = false;
        if (js.dof_class == DofClass::OneD) {
            const std::size_t p = *parent_index(i);
            const Vec3 pdir = joints[p].rest_direction;
            const Vec3 h = cross(pdir, x0);
            if (h.norm() >= 1e-9) {
                y0 = normalized(h);
                ok = true;
            }
        } else if (js.reference_child) {
            const Vec3 ref = joints[*reference_index(i)].rest_direction;
            const Vec3 perp = perp_part(ref, x0);
            if (perp.norm() >= 1e-9) {
                y0 = normalized(perp);
                ok = true;
            }
        }
        if (!ok) y0 = normalized(perp_part(least_aligned_axis(x0), x0));
        rest_frames_[i] = Mat3::from_columns(x0, y0, cross(x0, y0));
        ref_ok_[i] = ok ? 1 : 0;
        if (js.dof_class == DofClass::OneD) hinges_[i] = y0;
    }
}

std::vector<double> SkeletonTopology::weights() const {
    std::vector<double> w;
    w.reserve(joints.size());
    for (const auto& j : joints) w.push_back(j.weight);
    return w;
}

std::vector<std::string> SkeletonTopology::joint_names() const {
    std::vector<std::string> names;
    names.reserve(joints.size());
    for (const auto& j : joints) names.push_back(j.name);
    return names;
}

static Vec3 vec3_from_json(const json& a, const std::string& what) {
    if (!a.is_array() || a.size() != 3)
        throw ValidationError(what + " must be a 3-element array");
    return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

SkeletonTopology load_topology(const std::string& document_text) {
    json doc;
    try {
        doc = json::parse(document_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("topology document does not parse: ") + e.what());
    }
    if (!doc.contains("joints") || !doc["joints"].is_array())
        throw ValidationError("topology document has no 'joints' array");

    SkeletonTopology topo;
    for (const auto& rec : doc["joints"]) {
        JointSpec js;
        js.id = rec.at("id").get<int>();
        js.name = rec.at("name").get<std::string>();
        if (rec.contains("parent") && !rec["parent"].is_null())
            js.parent = rec["parent"].get<int>();
        js.dof_class = dof_class_from_string(rec.at("dof_class").get<std::string>());
        if (rec.contains("reference_child") && !rec["reference_child"].is_null())
            js.reference_child = rec["reference_child"].get<int>();
        js.weight = rec.value("weight", 1.0);
        js.rest_direction = vec3_from_json(rec.at("rest_direction"), "rest_direction");
        topo.joints.push_back(js);
        topo.bone_lengths.push_back(rec.value("bone_length", 1.0));
    }
    topo.finalize();
    return topo;
}

SkeletonTopology load_topology_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open topology file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_topology(ss.str());
}

SkeletonTopology default_topology() { return load_topology(default_topology_document()); }

Vec3 bone_vector(const CoordinatePose& pose, std::size_t joint, const SkeletonTopology& topology) {
    if (joint >= topology.joint_count())
        throw ValidationError("joint index out of range");
    const auto p = topology.parent_index(joint);
    if (!p) throw ValidationError("bone_vector: joint '" + topology.joints[joint].name +
                                  "' is the root and has no bone");
    return pose.positions[joint] - pose.positions[*p];
}

std::vector<double> measure_bone_lengths(const CoordinatePose& pose,
                                         const SkeletonTopology& topology) {
    const std::size_t n = topology.joint_count();
    if (pose.positions.size() != n)
        throw ValidationError("pose joint count does not match topology");
    std::vector<double> lengths(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        if (!topology.parent_index(j)) continue;
        const double len = bone_vector(pose, j, topology).norm();
        if (len < 1e-9)
            throw RuntimeError("degenerate bone at joint '" + topology.joints[j].name +
                               "': parent and child coincide");
        lengths[j] = len;
    }
    return lengths;
}

CoordinatePose forward_kinematics(const SkeletonTopology& topology,
                                  std::span<const Quat> local_rotations,
                                  const Vec3& root_position) {
    const std::size_t n = topology.joint_count();
    if (local_rotations.size() != n)
        throw ValidationError("forward_kinematics: rotation count " +
                              std::to_string(local_rotations.size()) + " != joint count " +
                              std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
        if (!nearly_unit(local_rotations[j], 1e-6))
            throw ValidationError("forward_kinematics: non-unit quaternion at joint '" +
                                  topology.joints[j].name + "'");

    CoordinatePose pose;
    pose.positions.resize(n);
    std::vector<Quat> world(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto p = topology.parent_index(j);
        if (!p) {
            world[j] = local_rotations[j];
            pose.positions[j] = root_position;
            continue;
        }
        world[j] = hamilton(world[*p], local_rotations[j]);
        const Vec3 bone = topology.joints[j].rest_direction * topology.bone_lengths[j];
        pose.positions[j] = pose.positions[*p] + rotate(world[j], bone);
    }
    return pose;
}

CoordinatePose rest_pose(const SkeletonTopology& topology, const Vec3& root_position) {
    std::vector<Quat> identity(topology.joint_count(), Quat::identity());
    return forward_kinematics(topology, identity, root_position);
}

}  // namespace skelforge
