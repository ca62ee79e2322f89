// Exact rational arithmetic over 64-bit integers.
// Payoffs, probabilities and currency amounts are kept exact; doubles only
// appear at numeric boundaries (equilibrium mixes with irrational weights,
// quantum amplitudes, Monte Carlo estimates).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qp {

class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(std::int64_t n) : num_(n), den_(1) {}
    // Normalizes sign and gcd; throws std::domain_error on zero denominator.
    rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    rational operator-() const;
    rational& operator+=(const rational& o);
    rational& operator-=(const rational& o);
    rational& operator*=(const rational& o);
    rational& operator/=(const rational& o);

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b);
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    double to_double() const { return double(num_) / double(den_); }

    // "5/2", "-3", "0".  Integer values omit the denominator.
    std::string str() const;
    // Accepts the same forms; throws std::invalid_argument on anything else.
    static rational parse(const std::string& s);

private:
    std::int64_t num_;
    std::int64_t den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const rational& r);

}  // namespace qp
