#pragma once

#include <array>
#include <cmath>
#include <string>

#include "skelforge/error.hpp"

namespace skelforge {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double norm2() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Vec3 normalized(const Vec3& v) {
    const double n = v.norm();
    if (n < 1e-12) throw RuntimeError("cannot normalize near-zero vector");
    return v / n;
}

// The canonical basis vector least aligned with v; deterministic tie-break by
// axis order x, y, z. Used wherever a perpendicular must be invented.
inline Vec3 least_aligned_axis(const Vec3& v) {
    const double ax = std::abs(v.x), ay = std::abs(v.y), az = std::abs(v.z);
    if (ax <= ay && ax <= az) return {1, 0, 0};
    if (ay <= az) return {0, 1, 0};
    return {0, 0, 1};
}

// Component of v perpendicular to the unit vector axis.
inline Vec3 perp_part(const Vec3& v, const Vec3& axis) {
    return v - axis * dot(v, axis);
}

// Rotation quaternion, vector part (x,y,z) and scalar part w.
struct Quat {
    double x = 0.0, y = 0.0, z = 0.0, w = 1.0;

    constexpr Quat() = default;
    constexpr Quat(double x_, double y_, double z_, double w_) : x(x_), y(y_), z(z_), w(w_) {}

    static constexpr Quat identity() { return {0, 0, 0, 1}; }

    double norm2() const { return x * x + y * y + z * z + w * w; }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 vec() const { return {x, y, z}; }

    Quat operator*(double s) const { return {x * s, y * s, z * s, w * s}; }
    Quat operator+(const Quat& o) const { return {x + o.x, y + o.y, z + o.z, w + o.w}; }
};

inline double dot(const Quat& a, const Quat& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z + a.w * b.w;
}

// Hamilton product.
inline Quat hamilton(const Quat& q1, const Quat& q2) {
    return {
        q1.w * q2.x + q1.x * q2.w + q1.y * q2.z - q1.z * q2.y,
        q1.w * q2.y - q1.x * q2.z + q1.y * q2.w + q1.z * q2.x,
        q1.w * q2.z + q1.x * q2.y - q1.y * q2.x + q1.z * q2.w,
        q1.w * q2.w - q1.x * q2.x - q1.y * q2.y - q1.z * q2.z,
    };
}

inline Quat conj(const Quat& q) { return {-q.x, -q.y, -q.z, q.w}; }

// Multiplicative inverse conj(q)/|q|^2; equals conj(q) for unit quaternions.
inline Quat inverse(const Quat& q) {
    const double n2 = q.norm2();
    if (n2 < 1e-24) throw RuntimeError("cannot invert near-zero quaternion");
    return conj(q) * (1.0 / n2);
}

inline Quat normalized(const Quat& q) {
    const double n = q.norm();
    if (n < 1e-12) throw RuntimeError("cannot normalize near-zero quaternion");
    return q * (1.0 / n);
}

// q and -q encode the same rotation; pick the w >= 0 representative.
// On the w == 0 boundary the first nonzero of (z, y, x) is made positive.
inline Quat canonical(const Quat& q) {
    if (q.w > 0.0) return q;
    if (q.w < 0.0) return {-q.x, -q.y, -q.z, -q.w};
    if (q.z != 0.0) return q.z > 0.0 ? q : Quat{-q.x, -q.y, -q.z, -q.w};
    if (q.y != 0.0) return q.y > 0.0 ? q : Quat{-q.x, -q.y, -q.z, -q.w};
    return q.x >= 0.0 ? q : Quat{-q.x, -q.y, -q.z, -q.w};
}

// Sandwich product q * (v,0) * q^-1, vector part.
inline Vec3 rotate(const Quat& q, const Vec3& v) {
    const Quat p{v.x, v.y, v.z, 0.0};
    const Quat r = hamilton(hamilton(q, p), inverse(q));
    return {r.x, r.y, r.z};
}

inline Quat quat_about(const Vec3& unit_axis, double angle) {
    const double h = 0.5 * angle;
    const double s = std::sin(h);
    return {unit_axis.x * s, unit_axis.y * s, unit_axis.z * s, std::cos(h)};
}

// Twist component of q about the unit axis: the rotation-about-axis factor of
// the swing-twist decomposition q = swing * twist. Identity when q has no
// component along the axis.
inline Quat twist_about(const Quat& q, const Vec3& unit_axis) {
    const double p = dot(q.vec(), unit_axis);
    const Quat t{unit_axis.x * p, unit_axis.y * p, unit_axis.z * p, q.w};
    const double n = t.norm();
    if (n < 1e-12) return Quat::identity();
    return t * (1.0 / n);
}

struct Mat3 {
    // Row-major.
    std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    static Mat3 identity() { return Mat3{}; }

    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        Mat3 r;
        r.m = {{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}}};
        return r;
    }

    Vec3 col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

    Vec3 operator*(const Vec3& v) const {
        return {
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        };
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
};

// Right-handed rotations about the world axes.
inline Mat3 rot_x(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {{{1, 0, 0}, {0, c, -s}, {0, s, c}}};
    return r;
}

inline Mat3 rot_y(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {{{c, 0, s}, {0, 1, 0}, {-s, 0, c}}};
    return r;
}

inline Mat3 rot_z(double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 r;
    r.m = {{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
    return r;
}

inline Mat3 to_matrix(const Quat& q) {
    const double x = q.x, y = q.y, z = q.z, w = q.w;
    Mat3 r;
    r.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)},
            {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)},
            {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)}}};
    return r;
}

// Unit quaternion from an orthonormal rotation matrix (Shepperd's branch pick).
Quat to_quat(const Mat3& m);

// Rigid transform in homogeneous form: rotation block plus translation, bottom
// row (0,0,0,1) implied.
struct TransformationMatrix {
    Mat3 rotation;
    Vec3 translation;

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

    // Requires an orthonormal rotation block.
    Vec3 apply_inverse(const Vec3& p) const {
        return rotation.transposed() * (p - translation);
    }
};

// Orthonormal within tol and det +1 within tol.
bool is_rigid(const Mat3& r, double tol = 1e-9);

inline bool nearly_unit(const Quat& q, double tol) { return std::abs(q.norm() - 1.0) <= tol; }

constexpr double kPi = 3.14159265358979323846;

}  // namespace skelforge
