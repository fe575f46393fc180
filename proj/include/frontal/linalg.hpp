#pragma once

#include <Eigen/Dense>

namespace frontal {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat32 = Eigen::Matrix<double, 3, 2>;

inline Mat2 adjugate(const Mat2& a) {
    Mat2 r;
    r << a(1, 1), -a(0, 1), -a(1, 0), a(0, 0);
    return r;
}

// Quarter-turn matrix [[0,1],[-1,0]]; satisfies P^T = -P and P^2 = -id.
inline Mat2 quarter_turn() {
    Mat2 p;
    p << 0.0, 1.0, -1.0, 0.0;
    return p;
}

}  // namespace frontal
