#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpoker/quaternion.hpp"

namespace qp {

// Octonion over double as a pair of quaternions (components e0..e7).
// Multiplication uses the doubling product (a,b)(c,d) = (ac - d*b, da + bc*),
// with * the quaternion conjugate.
struct octonion {
    std::array<double, 8> c{};

    octonion() = default;
    explicit octonion(const std::array<double, 8>& comps) : c(comps) {}
    octonion(const quaternion& a, const quaternion& b)
        : c{a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z} {}

    static octonion unit(std::size_t idx);

    quaternion first() const { return {c[0], c[1], c[2], c[3]}; }
    quaternion second() const { return {c[4], c[5], c[6], c[7]}; }

    octonion conjugate() const;
    double norm_sq() const;
    double norm() const;
    // Throws std::domain_error when the norm is zero.
    octonion inverse() const;

    double operator[](std::size_t idx) const { return c.at(idx); }

    std::string str() const;
};

octonion operator+(const octonion& a, const octonion& b);
octonion operator-(const octonion& a, const octonion& b);
octonion operator-(const octonion& a);
octonion operator*(const octonion& a, const octonion& b);
octonion operator*(double s, const octonion& a);

bool approx_equal(const octonion& a, const octonion& b, double tol = 1e-12);

// Basis multiplication table: e_i e_j = sign[i][j] * e_{index[i][j]}.
// Computed once from the doubling product.
struct basis_table {
    std::array<std::array<int, 8>, 8> sign{};
    std::array<std::array<int, 8>, 8> index{};
};

const basis_table& octonion_basis_table();

// The seven oriented triples (a,b,c) with e_a e_b = e_c, each line reported
// once with its smallest element first.
std::vector<std::array<int, 3>> fano_triples();

std::ostream& operator<<(std::ostream& os, const octonion& o);

}  // namespace qp
