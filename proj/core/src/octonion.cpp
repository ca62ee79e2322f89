#include "qpoker/octonion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qp {

octonion octonion::unit(std::size_t idx) {
    if (idx >= 8) throw std::out_of_range("octonion: unit index");
    octonion o;
    o.c[idx] = 1.0;
    return o;
}

octonion octonion::conjugate() const {
    octonion o;
    o.c[0] = c[0];
    for (std::size_t i = 1; i < 8; ++i) o.c[i] = -c[i];
    return o;
}

double octonion::norm_sq() const {
    double s = 0.0;
    for (double v : c) s += v * v;
    return s;
}

double octonion::norm() const { return std::sqrt(norm_sq()); }

octonion octonion::inverse() const {
    double n2 = norm_sq();
    if (n2 == 0.0) throw std::domain_error("octonion: inverse of zero");
    return (1.0 / n2) * conjugate();
}

octonion operator+(const octonion& a, const octonion& b) {
    octonion o;
    for (std::size_t i = 0; i < 8; ++i) o.c[i] = a.c[i] + b.c[i];
    return o;
}

octonion operator-(const octonion& a, const octonion& b) {
    octonion o;
    for (std::size_t i = 0; i < 8; ++i) o.c[i] = a.c[i] - b.c[i];
    return o;
}

octonion operator-(const octonion& a) {
    octonion o;
    for (std::size_t i = 0; i < 8; ++i) o.c[i] = -a.c[i];
    return o;
}

octonion operator*(const octonion& a, const octonion& b) {
    quaternion p = a.first(), q = a.second();
    quaternion r = b.first(), s = b.second();
    return {p * r - s.conjugate() * q, s * p + q * r.conjugate()};
}

octonion operator*(double s, const octonion& a) {
    octonion o;
    for (std::size_t i = 0; i < 8; ++i) o.c[i] = s * a.c[i];
    return o;
}

bool approx_equal(const octonion& a, const octonion& b, double tol) {
    for (std::size_t i = 0; i < 8; ++i)
        if (std::abs(a.c[i] - b.c[i]) > tol) return false;
    return true;
}

const basis_table& octonion_basis_table() {
    static const basis_table table = [] {
        basis_table t;
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                octonion p = octonion::unit(i) * octonion::unit(j);
                for (int k = 0; k < 8; ++k) {
                    if (p.c[k] > 0.5) {
                        t.sign[i][j] = 1;
                        t.index[i][j] = k;
                    } else if (p.c[k] < -0.5) {
                        t.sign[i][j] = -1;
                        t.index[i][j] = k;
                    }
                }
            }
        }
        return t;
    }();
    return table;
}

std::vector<std::array<int, 3>> fano_triples() {
    const basis_table& t = octonion_basis_table();
    std::vector<std::array<int, 3>> lines;
    for (int a = 1; a < 8; ++a) {
        for (int b = a + 1; b < 8; ++b) {
            int c = t.index[a][b];
            if (c <= a || c == b) continue;
            std::array<int, 3> tri = t.sign[a][b] > 0 ? std::array<int, 3>{a, b, c}
                                                      : std::array<int, 3>{a, c, b};
            // Smallest element is a, so tri is already rotation-normalized.
            bool seen = false;
            for (const auto& l : lines)
                if (l[0] == tri[0] && (l[1] == tri[1] || l[1] == tri[2])) seen = true;
            if (!seen) lines.push_back(tri);
        }
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::string octonion::str() const {
    std::ostringstream os;
    os << c[0];
    for (std::size_t i = 1; i < 8; ++i)
        os << (c[i] < 0 ? " - " : " + ") << std::abs(c[i]) << "e" << i;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const octonion& o) { return os << o.str(); }

}  // namespace qp
