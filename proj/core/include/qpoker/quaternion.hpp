#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

namespace qp {

// Quaternion over double, components (w, x, y, z) for w + xi + yj + zk.
struct quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr quaternion() = default;
    constexpr quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr quaternion one() { return {1, 0, 0, 0}; }
    static constexpr quaternion i() { return {0, 1, 0, 0}; }
    static constexpr quaternion j() { return {0, 0, 1, 0}; }
    static constexpr quaternion k() { return {0, 0, 0, 1}; }

    double operator[](std::size_t idx) const;

    quaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const;
    // Throws std::domain_error when the norm is zero.
    quaternion inverse() const;
    quaternion normalized() const;

    std::string str() const;
};

quaternion operator+(const quaternion& a, const quaternion& b);
quaternion operator-(const quaternion& a, const quaternion& b);
quaternion operator-(const quaternion& a);
quaternion operator*(const quaternion& a, const quaternion& b);
quaternion operator*(double s, const quaternion& a);
quaternion operator*(const quaternion& a, double s);

double dot(const quaternion& a, const quaternion& b);
bool approx_equal(const quaternion& a, const quaternion& b, double tol = 1e-12);

std::ostream& operator<<(std::ostream& os, const quaternion& q);

}  // namespace qp
