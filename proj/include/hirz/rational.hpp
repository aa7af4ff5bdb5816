#ifndef HIRZ_RATIONAL_HPP_
#define HIRZ_RATIONAL_HPP_

#include <numeric>
#include <ostream>
#include <string>

#include "hirz/checked.hpp"

namespace hirz {

/// Reduced fraction with positive denominator over checked 64-bit integers.
class Rational {
public:
    constexpr Rational() = default;
    Rational(Int n) : num_(n), den_(1) {} // NOLINT: implicit from integers is intended
    Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    Int to_integer() const {
        if (den_ != 1) throw ConsistencyError("rational " + str() + " is not an integer");
        return num_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        Int g = std::gcd(x.den_, y.den_);
        Int lhs = checked::mul(x.num_, y.den_ / g);
        Int rhs = checked::mul(y.num_, x.den_ / g);
        return {checked::add(lhs, rhs), checked::mul(x.den_ / g, y.den_)};
    }
    friend Rational operator-(const Rational& x) { return {checked::neg(x.num_), x.den_}; }
    friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
    friend Rational operator*(const Rational& x, const Rational& y) {
        Int g1 = std::gcd(x.num_, y.den_);
        Int g2 = std::gcd(y.num_, x.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return {checked::mul(x.num_ / g1, y.num_ / g2), checked::mul(x.den_ / g2, y.den_ / g1)};
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw ConsistencyError("rational division by zero");
        return x * Rational(y.den_, y.num_);
    }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    void normalize() {
        if (den_ == 0) throw ConsistencyError("zero denominator");
        if (den_ < 0) {
            num_ = checked::neg(num_);
            den_ = checked::neg(den_);
        }
        Int g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_ = 0;
    Int den_ = 1;
};

} // namespace hirz

#endif // HIRZ_RATIONAL_HPP_
