#pragma once

#include <complex>

#include "qpoker/quaternion.hpp"

namespace qp {

using cplx = std::complex<double>;

// 2x2 complex matrix, row major.
struct mat2 {
    cplx m[2][2]{};

    cplx& operator()(int r, int c) { return m[r][c]; }
    const cplx& operator()(int r, int c) const { return m[r][c]; }

    static mat2 identity();
    mat2 dagger() const;
    cplx det() const;
};

mat2 operator*(const mat2& a, const mat2& b);
mat2 operator*(cplx s, const mat2& a);
mat2 operator+(const mat2& a, const mat2& b);
bool approx_equal(const mat2& a, const mat2& b, double tol = 1e-12);

// Embeds a + bi + cj + dk as [[a - di, c + bi], [-c + bi, a + di]].
// This is an algebra map: su2(pq) = su2(p) su2(q), and unit quaternions land
// in SU(2).
mat2 su2(const quaternion& q);

// Inverse of the embedding. Throws std::domain_error when the matrix is not
// of the embedded form [[alpha, beta], [-conj(beta), conj(alpha)]].
quaternion quaternion_from_su2(const mat2& u, double tol = 1e-9);

}  // namespace qp
