#include "flowncg/rational.hpp"

#include <limits>
#include <numeric>

namespace flowncg {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rational: value out of 64-bit range");
    return (long long)v;
}

} // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd_wide(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string &text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = text.find('/');
    size_t pos = 0;
    long long n, d = 1;
    try {
        if (slash == std::string::npos) {
            n = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("");
        } else {
            n = std::stoll(text.substr(0, slash), &pos);
            if (pos != slash) throw std::invalid_argument("");
            d = std::stoll(text.substr(slash + 1), &pos);
            if (pos != text.size() - slash - 1) throw std::invalid_argument("");
        }
    } catch (const std::exception &) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
    return Rational(n, d);
}

} // namespace flowncg
