#ifndef TOUGHTREE_RATIONAL_HPP
#define TOUGHTREE_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

namespace toughtree {

/// Exact rational p/q with q >= 1, always reduced. q == 0 encodes +infinity
/// (the toughness of a complete graph). All verdicts in this project go
/// through exact comparisons; no floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t p, std::int64_t q) : num(p), den(q) { normalize(); }

    static Rational infinity() {
        Rational r;
        r.num = 1;
        r.den = 0;
        return r;
    }
    bool is_infinite() const { return den == 0; }

    void normalize() {
        if (den == 0) {
            num = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (is_infinite()) return "inf";
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace toughtree

#endif
