#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flowncg {

// Exact rational number. All utility comparisons in the toolkit go through
// this type; floating point is never used for game values because dynamics
// and equilibrium checks depend on exact tie detection.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long numerator, long long denominator) : num_(numerator), den_(denominator) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational &o) const {
        __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        return from_wide(n, d);
    }
    Rational operator-(const Rational &o) const {
        __int128 n = (__int128)num_ * o.den_ - (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        return from_wide(n, d);
    }
    Rational operator*(const Rational &o) const {
        return from_wide((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rational operator/(const Rational &o) const {
        if (o.num_ == 0) throw std::domain_error("rational: division by zero");
        return from_wide((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }

    // Three-way comparison by cross multiplication; exact.
    int compare(const Rational &o) const {
        __int128 lhs = (__int128)num_ * o.den_;
        __int128 rhs = (__int128)o.num_ * den_;
        if (lhs < rhs) return -1;
        if (lhs > rhs) return 1;
        return 0;
    }

    bool operator==(const Rational &o) const { return compare(o) == 0; }
    bool operator!=(const Rational &o) const { return compare(o) != 0; }
    bool operator<(const Rational &o) const { return compare(o) < 0; }
    bool operator<=(const Rational &o) const { return compare(o) <= 0; }
    bool operator>(const Rational &o) const { return compare(o) > 0; }
    bool operator>=(const Rational &o) const { return compare(o) >= 0; }

    // "p/q", or just "p" when the value is an integer.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(const std::string &text);

  private:
    static Rational from_wide(__int128 n, __int128 d);
    void normalize();

    long long num_;
    long long den_; // > 0 after normalization
};

} // namespace flowncg
