#include "skelforge/render.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

namespace skelforge {

void CameraIntrinsics::validate() const {
    if (!(focal_px > 0.0)) throw ValidationError("intrinsics: focal_px must be positive");
    if (width < 1 || height < 1) throw ValidationError("intrinsics: empty frame");
    if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height)
        throw ValidationError("intrinsics: principal point outside the frame");
}

Projection project(const Vec3& point_world, const CameraPose& pose,
                   const CameraIntrinsics& intr) {
    const CameraBasis basis = look_at_orientation(pose);
    const Vec3 d = point_world - pose.position;
    const double depth = dot(d, basis.forward);
    if (depth <= 1e-6) return {true, 0.0, 0.0};
    Projection p;
    p.u = intr.cx + intr.focal_px * dot(d, basis.right) / depth;
    p.v = intr.cy - intr.focal_px * dot(d, basis.up) / depth;
    return p;
}

namespace {

struct Rgb {
    std::uint8_t r, g, b;
};

constexpr Rgb kBackground{18, 20, 26};

// Fig-legend palette: root red, static gray, 3/2/1-DOF orange/green/blue.
Rgb class_color(DofClass c) {
    switch (c) {
        case DofClass::Root: return {225, 60, 60};
        case DofClass::ThreeD: return {235, 150, 40};
        case DofClass::TwoD: return {80, 200, 100};
        case DofClass::OneD: return {80, 130, 230};
        case DofClass::Static: return {150, 150, 150};
    }
    return {255, 255, 255};
}

void put_pixel(RasterFrame& f, int x, int y, Rgb c) {
    if (x < 0 || y < 0 || x >= f.width || y >= f.height) return;
    std::uint8_t* p = f.at(x, y);
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
}

// Integer midpoint line, clipped pixelwise.
void draw_line(RasterFrame& f, int x0, int y0, int x1, int y1, Rgb c) {
    const int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        put_pixel(f, x0, y0, c);
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

void draw_disc(RasterFrame& f, int cx, int cy, int radius, Rgb c) {
    for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
            if (dx * dx + dy * dy <= radius * radius) put_pixel(f, cx + dx, cy + dy, c);
}

int px(double v) { return static_cast<int>(std::lround(v)); }

}  // namespace

RasterFrame render_frame(const CoordinatePose& pose, const SkeletonTopology& topology,
                         const CameraPose& cam, const CameraIntrinsics& intr) {
    intr.validate();
    if (pose.positions.size() != topology.joint_count())
        throw ValidationError("render_frame: pose joint count does not match topology");

    RasterFrame frame;
    frame.width = intr.width;
    frame.height = intr.height;
    frame.pixels.resize(static_cast<std::size_t>(intr.width) * intr.height * 3);
    for (std::size_t i = 0; i < frame.pixels.size(); i += 3) {
        frame.pixels[i] = kBackground.r;
        frame.pixels[i + 1] = kBackground.g;
        frame.pixels[i + 2] = kBackground.b;
    }

    const std::size_t n = topology.joint_count();
    std::vector<Projection> proj(n);
    bool any_visible = false;
    for (std::size_t j = 0; j < n; ++j) {
        proj[j] = project(pose.positions[j], cam, intr);
        if (!proj[j].behind) any_visible = true;
    }
    if (!any_visible) {
        frame.blank = true;
        return frame;
    }

    for (std::size_t j = 0; j < n; ++j) {
        const auto p = topology.parent_index(j);
        if (!p || proj[j].behind || proj[*p].behind) continue;
        draw_line(frame, px(proj[*p].u), px(proj[*p].v), px(proj[j].u), px(proj[j].v),
                  class_color(topology.joints[j].dof_class));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (proj[j].behind) continue;
        draw_disc(frame, px(proj[j].u), px(proj[j].v), 2,
                  class_color(topology.joints[j].dof_class));
    }
    return frame;
}

std::size_t camera_pose_for_frame(const CameraTrajectory& traj, std::size_t frame) {
    if (traj.poses.empty()) throw ValidationError("render_clip: empty camera trajectory");
    std::size_t total = 0;
    for (int h : traj.hold_frames) total += static_cast<std::size_t>(std::max(1, h));
    const std::size_t t = frame % total;  // cycle when holds are exhausted
    std::size_t acc = 0;
    for (std::size_t i = 0; i < traj.poses.size(); ++i) {
        acc += static_cast<std::size_t>(std::max(1, traj.hold_frames[i]));
        if (t < acc) return i;
    }
    return traj.poses.size() - 1;
}

std::vector<RasterFrame> render_clip(const RotationSequence& seq,
                                     const SkeletonTopology& topology,
                                     const CameraTrajectory& traj,
                                     const CameraIntrinsics& intr) {
    std::vector<RasterFrame> frames;
    frames.reserve(seq.frame_count());
    for (std::size_t f = 0; f < seq.frame_count(); ++f) {
        const CoordinatePose pose =
            forward_kinematics(topology, seq.frames[f], seq.root_positions[f]);
        frames.push_back(
            render_frame(pose, topology, traj.poses[camera_pose_for_frame(traj, f)], intr));
    }
    return frames;
}

std::vector<RasterFrame> render_clip(const CoordinateSequence& seq,
                                     const SkeletonTopology& topology,
                                     const CameraTrajectory& traj,
                                     const CameraIntrinsics& intr) {
    std::vector<RasterFrame> frames;
    frames.reserve(seq.frames.size());
    for (std::size_t f = 0; f < seq.frames.size(); ++f)
        frames.push_back(render_frame(seq.frames[f], topology,
                                      traj.poses[camera_pose_for_frame(traj, f)], intr));
    return frames;
}

std::string ppm_bytes(const RasterFrame& frame) {
    std::string out = "P6\n" + std::to_string(frame.width) + " " + std::to_string(frame.height) +
                      "\n255\n";
    out.append(reinterpret_cast<const char*>(frame.pixels.data()), frame.pixels.size());
    return out;
}

void write_ppm(const RasterFrame& frame, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw RuntimeError("cannot write frame file '" + path + "'");
    const std::string bytes = ppm_bytes(frame);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw RuntimeError("short write on frame file '" + path + "'");
}

}  // namespace skelforge
