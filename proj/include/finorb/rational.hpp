#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals,
// string forms used by the JSON interfaces, and small vector helpers shared
// by the geometry and lattice code.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace finorb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rat>;

// Raised on malformed user input (files, CLI arguments, violated
// preconditions of public operations). The CLI maps it to exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    return Rat(num) / Rat(den);
}

// Floor division with positive divisor; cpp_int's operator/ truncates.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

inline std::string rat_to_string(const Rat& q) {
    Int num = numerator(q), den = denominator(q);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

// Accepts "p", "-p", "p/q" with optional leading sign on the numerator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    auto bad = [&] { return input_error("malformed rational literal '" + s + "'"); };
    std::size_t slash = s.find('/');
    auto parse_int = [&](const std::string& part) -> Int {
        if (part.empty()) throw bad();
        std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (start == part.size()) throw bad();
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
        return Int(part);
    };
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw bad();
    return make_rat(num, den);
}

inline Int dot(const IntVector& a, const IntVector& b) {
    Int r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

inline Rat dot(const IntVector& a, const RationalVector& b) {
    Rat r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += Rat(a[i]) * b[i];
    return r;
}

// Scales a rational vector by the unique positive factor giving a primitive
// integer vector (coprime entries). The zero vector maps to itself.
inline IntVector primitive_integer_vector(const RationalVector& v) {
    Int l = 1;
    for (const Rat& q : v) l = lcm(l, denominator(q));
    IntVector w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, w[i]);
    }
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

inline IntVector primitive_integer_vector(const IntVector& v) {
    RationalVector q(v.begin(), v.end());
    return primitive_integer_vector(q);
}

}  // namespace finorb
