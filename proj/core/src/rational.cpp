#include "qpoker/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qp {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: multiply overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: add overflow");
    return r;
}

}  // namespace

rational::rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    normalize();
}

void rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

rational rational::operator-() const {
    rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

rational& rational::operator+=(const rational& o) {
    // Reduce cross terms by gcd of denominators before multiplying.
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t a = checked_mul(num_, o.den_ / g);
    std::int64_t b = checked_mul(o.num_, den_ / g);
    num_ = checked_add(a, b);
    den_ = checked_mul(den_, o.den_ / g);
    normalize();
    return *this;
}

rational& rational::operator-=(const rational& o) { return *this += -o; }

rational& rational::operator*=(const rational& o) {
    std::int64_t g1 = std::gcd(num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_, den_);
    num_ = checked_mul(num_ / g1, o.num_ / g2);
    den_ = checked_mul(den_ / g2, o.den_ / g1);
    normalize();
    return *this;
}

rational& rational::operator/=(const rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return *this *= rational(o.den_, o.num_);
}

bool operator<(const rational& a, const rational& b) {
    // Compare via 128-bit products; denominators are positive.
    return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
}

std::string rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

rational rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    std::size_t slash = s.find('/');
    try {
        std::size_t used = 0;
        std::int64_t n = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash))
            throw std::invalid_argument("rational: trailing characters");
        if (slash == std::string::npos) return rational(n);
        std::int64_t d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw std::invalid_argument("rational: trailing characters");
        return rational(n, d);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("rational: value out of range: " + s);
    }
}

std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

}  // namespace qp
