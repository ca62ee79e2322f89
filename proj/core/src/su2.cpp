#include "qpoker/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace qp {

mat2 mat2::identity() {
    mat2 r;
    r.m[0][0] = 1.0;
    r.m[1][1] = 1.0;
    return r;
}

mat2 mat2::dagger() const {
    mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = std::conj(m[j][i]);
    return r;
}

cplx mat2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

mat2 operator*(const mat2& a, const mat2& b) {
    mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
}

mat2 operator*(cplx s, const mat2& a) {
    mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
}

mat2 operator+(const mat2& a, const mat2& b) {
    mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
}

bool approx_equal(const mat2& a, const mat2& b, double tol) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (std::abs(a.m[i][j] - b.m[i][j]) > tol) return false;
    return true;
}

mat2 su2(const quaternion& q) {
    mat2 u;
    u.m[0][0] = cplx(q.w, -q.z);
    u.m[0][1] = cplx(q.y, q.x);
    u.m[1][0] = cplx(-q.y, q.x);
    u.m[1][1] = cplx(q.w, q.z);
    return u;
}

quaternion quaternion_from_su2(const mat2& u, double tol) {
    quaternion q{u.m[0][0].real(), u.m[0][1].imag(), u.m[0][1].real(), -u.m[0][0].imag()};
    if (!approx_equal(su2(q), u, tol))
        throw std::domain_error("su2: matrix is not an embedded quaternion");
    return q;
}

}  // namespace qp
