#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ultra {

// All distances are exact rationals. Comparisons and arithmetic never round,
// so equality-sensitive checks (ultrametric axioms, resolution identities)
// are decidable exactly.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

// floor for non-negative rationals (the only case the library needs)
inline Int rat_floor(const Rat& r) {
    if (r < 0) throw std::invalid_argument("rat_floor: negative value");
    return rat_num(r) / rat_den(r);
}

// Least integer strictly greater than r, clamped below at 1. This is the
// threshold rule for chain metrics: a chain with steps < t exists iff the
// minimax value is < t, so the induced distance is the least integer
// exceeding the minimax.
inline Rat least_integer_exceeding(const Rat& r) {
    Int f = rat_floor(r) + 1;
    if (f < 1) f = 1;
    return Rat(f);
}

// Canonical rendering: integers bare, otherwise "p/q".
inline std::string rat_to_string(const Rat& r) {
    if (rat_is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Parses "p", "p/q" or "-p/q". Rejects anything else, in particular
// decimal notation ("1.5" must be written "3/2").
inline Rat parse_rational(const std::string& token) {
    auto fail = [&]() -> void {
        throw std::invalid_argument("bad rational token '" + token + "'");
    };
    if (token.empty()) fail();
    std::size_t pos = 0;
    bool negative = false;
    if (token[pos] == '-') {
        negative = true;
        ++pos;
    }
    std::string num, den;
    bool in_den = false;
    for (; pos < token.size(); ++pos) {
        char c = token[pos];
        if (c == '/') {
            if (in_den || num.empty()) fail();
            in_den = true;
        } else if (c >= '0' && c <= '9') {
            (in_den ? den : num) += c;
        } else {
            fail();
        }
    }
    if (num.empty() || (in_den && den.empty())) fail();
    Int n(num);
    Int d = in_den ? Int(den) : Int(1);
    if (d == 0) fail();
    if (negative) n = -n;
    return Rat(n, d);
}

}  // namespace ultra
