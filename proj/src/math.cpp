#include "skelforge/math.hpp"

namespace skelforge {

Quat to_quat(const Mat3& m) {
    const auto& a = m.m;
    const double tr = a[0][0] + a[1][1] + a[2][2];
    Quat q;
    if (tr > 0.0) {
        double s = std::sqrt(tr + 1.0) * 2.0;
        q.w = 0.25 * s;
        q.x = (a[2][1] - a[1][2]) / s;
        q.y = (a[0][2] - a[2][0]) / s;
        q.z = (a[1][0] - a[0][1]) / s;
    } else if (a[0][0] > a[1][1] && a[0][0] > a[2][2]) {
        double s = std::sqrt(1.0 + a[0][0] - a[1][1] - a[2][2]) * 2.0;
        q.w = (a[2][1] - a[1][2]) / s;
        q.x = 0.25 * s;
        q.y = (a[0][1] + a[1][0]) / s;
        q.z = (a[0][2] + a[2][0]) / s;
    } else if (a[1][1] > a[2][2]) {
        double s = std::sqrt(1.0 + a[1][1] - a[0][0] - a[2][2]) * 2.0;
        q.w = (a[0][2] - a[2][0]) / s;
        q.x = (a[0][1] + a[1][0]) / s;
        q.y = 0.25 * s;
        q.z = (a[1][2] + a[2][1]) / s;
    } else {
        double s = std::sqrt(1.0 + a[2][2] - a[0][0] - a[1][1]) * 2.0;
        q.w = (a[1][0] - a[0][1]) / s;
        q.x = (a[0][2] + a[2][0]) / s;
        q.y = (a[1][2] + a[2][1]) / s;
        q.z = 0.25 * s;
    }
    return normalized(q);
}

bool is_rigid(const Mat3& r, double tol) {
    const Mat3 rrt = r * r.transposed();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(rrt.m[i][j] - want) > tol) return false;
        }
    return std::abs(r.det() - 1.0) <= tol;
}

}  // namespace skelforge
