#include "qpoker/quaternion.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qp {

double quaternion::operator[](std::size_t idx) const {
    switch (idx) {
        case 0: return w;
        case 1: return x;
        case 2: return y;
        case 3: return z;
        default: throw std::out_of_range("quaternion: component index");
    }
}

double quaternion::norm() const { return std::sqrt(norm_sq()); }

quaternion quaternion::inverse() const {
    double n2 = norm_sq();
    if (n2 == 0.0) throw std::domain_error("quaternion: inverse of zero");
    quaternion c = conjugate();
    return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
}

quaternion quaternion::normalized() const {
    double n = norm();
    if (n == 0.0) throw std::domain_error("quaternion: normalizing zero");
    return {w / n, x / n, y / n, z / n};
}

quaternion operator+(const quaternion& a, const quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

quaternion operator-(const quaternion& a, const quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

quaternion operator-(const quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

quaternion operator*(const quaternion& a, const quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

quaternion operator*(double s, const quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
quaternion operator*(const quaternion& a, double s) { return s * a; }

double dot(const quaternion& a, const quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

bool approx_equal(const quaternion& a, const quaternion& b, double tol) {
    return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol &&
           std::abs(a.z - b.z) <= tol;
}

std::string quaternion::str() const {
    std::ostringstream os;
    os << w << (x < 0 ? " - " : " + ") << std::abs(x) << "i" << (y < 0 ? " - " : " + ") << std::abs(y)
       << "j" << (z < 0 ? " - " : " + ") << std::abs(z) << "k";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const quaternion& q) { return os << q.str(); }

}  // namespace qp
