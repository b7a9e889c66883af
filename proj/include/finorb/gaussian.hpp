#pragma once

// Gaussian rationals a+bi with exact rational parts. Root values of binary
// forms live here; the finiteness criterion only ever compares them for
// equality, but the sampling oracle needs full field arithmetic.

#include <finorb/rational.hpp>

#include <string>
#include <utility>

namespace finorb {

struct GaussianRational {
    Rat re = 0;
    Rat im = 0;

    GaussianRational() = default;
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(const Rat& r) : re(r), im(0) {}
    explicit GaussianRational(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
    // Lexicographic on (re, im); the deterministic order used everywhere
    // roots are enumerated.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw input_error("division by zero Gaussian rational");
        Rat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
};

inline GaussianRational gauss_one() { return GaussianRational(Rat(1), Rat(0)); }

inline GaussianRational pow(const GaussianRational& base, long e) {
    if (e < 0) return gauss_one() / pow(base, -e);
    GaussianRational r = gauss_one(), b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

inline std::string gauss_to_string(const GaussianRational& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string s = rat_to_string(g.re);
    s += (g.im < 0 ? "-" : "+");
    Rat a = g.im < 0 ? Rat(-g.im) : g.im;
    s += rat_to_string(a) + "i";
    return s;
}

}  // namespace finorb
